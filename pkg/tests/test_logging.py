import json
import logging

import pytest
import structlog

from app.config import RunConfig
from app.logging import configure_logging


@pytest.fixture
def restore_logging():
    yield
    logging.getLogger().handlers = []
    structlog.reset_defaults()
    structlog.contextvars.clear_contextvars()


def test_file_log_is_json_with_run_context(tmp_path, restore_logging):
    config = RunConfig.model_construct(log_level="INFO", log_to_console=False)
    log_path = configure_logging(config, run_id="abc12345", log_dir=tmp_path)
    assert log_path.parent == tmp_path
    assert "abc12345" in log_path.name

    structlog.contextvars.bind_contextvars(run_id="abc12345", command="mlmc")
    structlog.get_logger("tests.logging").info("mlmc_estimated", estimator=0.37)
    for handler in logging.getLogger().handlers:
        handler.flush()

    record = json.loads(log_path.read_text(encoding="utf-8").splitlines()[-1])
    assert record["event"] == "mlmc_estimated"
    assert record["run_id"] == "abc12345"
    assert record["command"] == "mlmc"
    assert record["level"] == "info"


def test_debug_events_are_filtered_at_info(tmp_path, restore_logging):
    config = RunConfig.model_construct(log_level="INFO", log_to_console=False)
    log_path = configure_logging(config, run_id="r1", log_dir=tmp_path)
    structlog.get_logger("tests.logging").debug("chunks_completed")
    assert log_path.read_text(encoding="utf-8") == ""

from pathlib import Path
from typing import Any, Dict

import structlog
from pydantic import BaseModel, ConfigDict

from app.enums import Command
from app.errors import ConfigError

logger = structlog.get_logger(__name__)

MANIFEST_NAME = "manifest.json"


class Manifest(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    version: str
    seed: int
    config: Dict[str, Any]


def write_manifest(out_dir: Path, manifest: Manifest) -> Path:
    out_path = Path(out_dir) / MANIFEST_NAME
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(
        manifest.model_dump_json(indent=2) + "\n", encoding="utf-8", newline="\n"
    )
    logger.info("manifest_written", path=str(out_path))
    return out_path


def load_manifest(in_path: Path) -> Manifest:
    in_path = Path(in_path)
    if in_path.is_dir():
        in_path = in_path / MANIFEST_NAME
    try:
        text = in_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read manifest {in_path}: {e}") from e
    return Manifest.model_validate_json(text)

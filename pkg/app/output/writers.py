from pathlib import Path

import pandas as pd
import structlog

from app.enums import SchemeId

logger = structlog.get_logger(__name__)

NA_REP = "n/a"


def write_csv(frame: pd.DataFrame, out_path: Path) -> Path:
    """Comma separated, header row, LF line endings, full float precision."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(out_path, index=False, lineterminator="\n", na_rep=NA_REP)
    logger.info("csv_written", path=str(out_path), rows=len(frame))
    return out_path


def strong_error_csv_name(scheme: SchemeId) -> str:
    return f"strong_error_{scheme.value}.csv"


def path_csv_name(scheme: SchemeId) -> str:
    return f"path_{scheme.value}.csv"

from pathlib import Path
from typing import TYPE_CHECKING, Sequence

import structlog

from .writers import strong_error_csv_name

if TYPE_CHECKING:
    from app.experiments import StrongErrorReport

logger = structlog.get_logger(__name__)


def emit_plot_script(
    report: "StrongErrorReport | Sequence[StrongErrorReport]",
    out_path: Path,
) -> Path:
    """Write a gnuplot script drawing error against dt on log-log axes.

    Each scheme reads ``strong_error_<scheme>.csv`` next to the script. The
    dashed reference line has slope one and passes through the first point of
    the first report.

    Raises:
        ValueError: If there is no report or a report has no points.
    """
    reports = [report] if not isinstance(report, Sequence) else list(report)
    if not reports or any(not r.points for r in reports):
        raise ValueError("cannot plot an empty strong-error report")

    anchor = reports[0].points[0]
    slope_one = anchor.mean_abs_error / anchor.dt
    out_path = Path(out_path)

    series = [
        f'"{strong_error_csv_name(r.scheme)}" using 1:2 skip 1 '
        f'with linespoints title "{r.scheme.label}"'
        for r in reports
    ]
    series.append('identity(x) with lines dashtype 2 title "identity"')

    lines = [
        "set datafile separator ','",
        "set logscale xy",
        "set format xy '10^{%L}'",
        "set key top left",
        "set xlabel 'dt'",
        "set ylabel 'E|X_T - X^{ref}_T|'",
        "set terminal pngcairo size 800,600",
        f"set output '{out_path.with_suffix('.png').name}'",
        f"identity(x) = {slope_one!r} * x",
        "plot " + ", \\\n     ".join(series),
    ]
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    logger.info("plot_script_written", path=str(out_path), n_series=len(series))
    return out_path

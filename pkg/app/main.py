from pathlib import Path
from typing import Dict, List

import pandas as pd
import structlog

from app import __version__
from app.config import RunConfig
from app.enums import Command
from app.experiments import (
    LadderConfig,
    StrongErrorReport,
    default_dt_ladder,
    estimate_strong_error,
    reproduce_table,
    run_diagnostics,
)
from app.experiments.diagnostics import DEFAULT_DIAGNOSTIC_EXPONENTS
from app.experiments.ladder import base_step_count
from app.logging import configure_logging, new_run_id
from app.mlmc import MlmcResult, mlmc_estimate, rms_error
from app.model import base_step_bound, check_hypotheses
from app.output import (
    Manifest,
    emit_plot_script,
    path_csv_name,
    strong_error_csv_name,
    write_csv,
    write_manifest,
)
from app.paths import GridSpec, SeedId, dump_grid, generate
from app.schemes import SchemeFactory, simulate_path

type Artifacts = Dict[str, Path]


def _start_run(config: RunConfig, command: Command) -> structlog.stdlib.BoundLogger:
    run_id = new_run_id()
    configure_logging(config, run_id=run_id)
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(run_id=run_id, command=command.value)
    logger = structlog.get_logger(__name__)
    logger.info("run_started", seed=config.seed, scale=config.scale.value)

    config.output_dir.mkdir(parents=True, exist_ok=True)
    write_manifest(
        config.output_dir,
        Manifest(
            command=command,
            version=__version__,
            seed=config.seed,
            config=config.model_dump(mode="json"),
        ),
    )
    return logger


def _print_frame(frame: pd.DataFrame) -> None:
    print(frame.to_string(index=False))


def run_strong_error(config: RunConfig) -> Artifacts:
    logger = _start_run(config, Command.StrongError)
    model = config.require_model()
    check_hypotheses(model)
    sizes = config.experiment.sizes(config.scale)

    reports: List[StrongErrorReport] = []
    artifacts: Artifacts = {}
    for scheme in config.experiment.schemes:
        structlog.contextvars.bind_contextvars(scheme=scheme.label)
        cfg = LadderConfig(
            model=model,
            scheme_under_test=scheme,
            reference_scheme=config.experiment.reference_scheme,
            ladder_exponents=list(sizes.ladder_exponents),
            reference_exponent=sizes.reference_exponent,
            n_trajectories=sizes.n_trajectories,
            base_step=config.experiment.base_step,
            seed=config.seed,
        )
        report = estimate_strong_error(cfg, threads=config.threads)
        reports.append(report)
        artifacts[scheme.value] = write_csv(
            report.to_frame(), config.output_dir / strong_error_csv_name(scheme)
        )
    structlog.contextvars.unbind_contextvars("scheme")

    summary = pd.concat([r.summary_frame() for r in reports], ignore_index=True)
    artifacts["regression"] = write_csv(summary, config.output_dir / "regression.csv")
    artifacts["plot"] = emit_plot_script(reports, config.output_dir / "strong_error.gp")
    _print_frame(summary)
    logger.info("run_completed", n_schemes=len(reports))
    return artifacts


def run_diagnostics_command(config: RunConfig) -> Artifacts:
    logger = _start_run(config, Command.Diagnostics)
    model = config.require_model()
    check_hypotheses(model)
    exponents = config.experiment.diagnostic_exponents or DEFAULT_DIAGNOSTIC_EXPONENTS
    report = run_diagnostics(
        model,
        default_dt_ladder(model, exponents),
        config.experiment.diagnostic_trajectories,
        config.seed,
        threads=config.threads,
    )
    frame = report.to_frame()
    path = write_csv(frame, config.output_dir / "diagnostics.csv")
    _print_frame(frame)
    print(
        f"local_error_slope={report.local_error_slope:.4f} "
        f"corrected_local_error_slope={report.corrected_local_error_slope:.4f}"
    )
    logger.info("run_completed")
    return {"diagnostics": path}


def run_table(config: RunConfig) -> Artifacts:
    logger = _start_run(config, Command.Table)
    table_id = config.experiment.table_id
    out_path = config.output_dir / f"table{table_id}_{config.scale.value}.csv"
    frame = reproduce_table(
        table_id,
        scale=config.scale,
        out_path=out_path,
        seed=config.seed,
        threads=config.threads,
    )
    _print_frame(frame)
    logger.info("run_completed", rows=len(frame))
    return {"table": out_path}


def run_mlmc(config: RunConfig) -> Artifacts:
    logger = _start_run(config, Command.Mlmc)
    section = config.mlmc
    structlog.contextvars.bind_contextvars(scheme=section.scheme.label)

    results: List[MlmcResult] = []
    for repeat in range(section.repeats):
        results.append(
            mlmc_estimate(
                config.zcb,
                section.to_config(seed=config.seed + repeat),
                threads=config.threads,
            )
        )

    artifacts: Artifacts = {
        "levels": write_csv(results[0].to_frame(), config.output_dir / "mlmc_levels.csv")
    }
    summary = pd.concat([r.summary_frame() for r in results], ignore_index=True)
    artifacts["summary"] = write_csv(summary, config.output_dir / "mlmc_summary.csv")
    _print_frame(
        pd.concat([r.summary_frame(with_timing=True) for r in results], ignore_index=True)
    )
    if section.repeats > 1:
        print(f"rms_error={rms_error(results):.6e} over {section.repeats} runs")
    logger.info(
        "run_completed",
        repeats=section.repeats,
        seconds=sum(r.wall_time for r in results),
    )
    return artifacts


def run_path_dump(config: RunConfig) -> Artifacts:
    logger = _start_run(config, Command.PathDump)
    model = config.require_model()
    base_step = config.experiment.base_step or base_step_bound(model)
    grid = GridSpec(
        T=model.horizon_T, n_steps=base_step_count(model.horizon_T, base_step)
    ).refined(config.experiment.dump_exponent)
    brownian = generate(grid, SeedId(seed=config.seed))

    artifacts: Artifacts = {}
    for scheme in config.experiment.schemes:
        if not SchemeFactory.is_applicable(scheme, model):
            logger.warning("scheme_skipped", scheme=scheme.label)
            continue
        path = simulate_path(scheme, model, brownian)
        artifacts[scheme.value] = write_csv(
            path.to_frame(), config.output_dir / path_csv_name(scheme)
        )
        print(
            f"{scheme.label}: terminal={path.terminal:.6f} "
            f"reflections={path.reflect_count} integral={path.integral_trapezoid:.6f}"
        )
    if config.experiment.dump_binary:
        artifacts["increments"] = dump_grid(brownian, config.output_dir / "brownian.bin")
    logger.info("run_completed", n_paths=len(artifacts))
    return artifacts


RUNNERS = {
    Command.StrongError: run_strong_error,
    Command.Diagnostics: run_diagnostics_command,
    Command.Table: run_table,
    Command.Mlmc: run_mlmc,
    Command.PathDump: run_path_dump,
}


def run(command: Command, config: RunConfig) -> Artifacts:
    return RUNNERS[command](config)

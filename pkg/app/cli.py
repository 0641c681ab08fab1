import sys
from pathlib import Path
from typing import Annotated, Any, ClassVar, Dict, List, Optional, Sequence

from pydantic import AliasChoices, BaseModel, Field, ValidationError
from pydantic_settings import (
    CliApp,
    CliImplicitFlag,
    CliSubCommand,
    SettingsError,
)

from app.config import RunConfig, format_validation_error, load_run_config
from app.enums import Command, Scale, SchemeId
from app.errors import CevSimError, ConfigError
from app.main import run
from app.output import load_manifest

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2


def _deep_merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class RunFlags(BaseModel):
    command: ClassVar[Command]

    config: Optional[Path] = None
    manifest: Optional[Path] = None
    seed: Optional[int] = None
    threads: Optional[int] = None
    scale: Optional[Scale] = None
    out: Optional[Path] = None

    def section_overrides(self) -> Dict[str, Any]:
        return {}

    def overrides(self) -> Dict[str, Any]:
        values = {
            "seed": self.seed,
            "threads": self.threads,
            "scale": self.scale,
            "output_dir": self.out,
        }
        flat = {key: value for key, value in values.items() if value is not None}
        return _deep_merge(flat, self.section_overrides())

    def load(self) -> RunConfig:
        if self.manifest is None:
            return load_run_config(self.config, **self.overrides())

        manifest = load_manifest(self.manifest)
        if manifest.command != self.command:
            raise ConfigError(
                f"manifest was written by '{manifest.command}', not '{self.command}'"
            )
        return load_run_config(**_deep_merge(manifest.config, self.overrides()))

    def cli_cmd(self) -> None:
        run(self.command, self.load())


class StrongError(RunFlags):
    """Strong error against a fine reference on a step-size ladder."""

    command: ClassVar[Command] = Command.StrongError

    scheme: Optional[List[SchemeId]] = None
    trajectories: Optional[int] = None

    def section_overrides(self) -> Dict[str, Any]:
        experiment: Dict[str, Any] = {}
        if self.scheme:
            experiment["schemes"] = self.scheme
        if self.trajectories is not None:
            experiment["n_trajectories"] = self.trajectories
        return {"experiment": experiment} if experiment else {}


class Diagnostics(RunFlags):
    """Local error orders, sign flips and PMS/SMS divergence."""

    command: ClassVar[Command] = Command.Diagnostics

    trajectories: Optional[int] = None

    def section_overrides(self) -> Dict[str, Any]:
        if self.trajectories is None:
            return {}
        return {"experiment": {"diagnostic_trajectories": self.trajectories}}


class Table(RunFlags):
    """Empirical convergence rates of a published table."""

    command: ClassVar[Command] = Command.Table

    id: Optional[int] = None

    def section_overrides(self) -> Dict[str, Any]:
        return {} if self.id is None else {"experiment": {"table_id": self.id}}


class Mlmc(RunFlags):
    """Multilevel Monte Carlo price of the zero-coupon bond."""

    command: ClassVar[Command] = Command.Mlmc

    epsilon: Optional[float] = None
    scheme: Optional[SchemeId] = None
    repeats: Optional[int] = None

    def section_overrides(self) -> Dict[str, Any]:
        values = {"epsilon": self.epsilon, "scheme": self.scheme, "repeats": self.repeats}
        mlmc = {key: value for key, value in values.items() if value is not None}
        return {"mlmc": mlmc} if mlmc else {}


class PathDump(RunFlags):
    """Single trajectories of several schemes on one Brownian path."""

    command: ClassVar[Command] = Command.PathDump

    scheme: Optional[List[SchemeId]] = None
    binary: Annotated[
        CliImplicitFlag[bool],
        Field(validation_alias=AliasChoices("binary")),
    ] = False

    def section_overrides(self) -> Dict[str, Any]:
        experiment: Dict[str, Any] = {}
        if self.scheme:
            experiment["schemes"] = self.scheme
        if self.binary:
            experiment["dump_binary"] = True
        return {"experiment": experiment} if experiment else {}


class Cevsim(BaseModel, cli_prog_name="cevsim", cli_kebab_case=True):
    strong_error: CliSubCommand[StrongError]
    diagnostics: CliSubCommand[Diagnostics]
    table: CliSubCommand[Table]
    mlmc: CliSubCommand[Mlmc]
    path_dump: CliSubCommand[PathDump]

    def cli_cmd(self) -> None:
        CliApp.run_subcommand(self)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        CliApp.run(Cevsim, cli_args=args, cli_exit_on_error=False)
    except ValidationError as e:
        for line in format_validation_error(e):
            print(f"config error: {line}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (ConfigError, SettingsError) as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except CevSimError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME_ERROR
    except (ValueError, ArithmeticError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_RUNTIME_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

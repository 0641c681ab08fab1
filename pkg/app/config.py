from pathlib import Path
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

from .enums import Scale, SchemeId
from .errors import ConfigError
from .experiments.tables import SCALE_SETTINGS, ScaleSettings
from .mlmc import MlmcConfig, ZcbModel
from .model import CevModel

DEFAULT_CONFIG_FILE = "cevsim.yaml"


class ExperimentSection(BaseModel):
    """Ladder and sampling settings; unset sizes follow the chosen scale."""

    model_config = ConfigDict(extra="forbid")

    schemes: List[SchemeId] = [SchemeId.SMS]
    reference_scheme: Optional[SchemeId] = None
    ladder_exponents: Optional[List[int]] = None
    reference_exponent: Optional[int] = None
    n_trajectories: Optional[int] = Field(default=None, gt=0)
    base_step: Optional[float] = Field(default=None, gt=0)
    diagnostic_exponents: List[int] = [3, 4, 5, 6]
    diagnostic_trajectories: int = Field(default=10_000, gt=0)
    table_id: Literal[3, 4] = 3
    dump_exponent: int = Field(default=4, ge=0)
    dump_binary: bool = False

    def sizes(self, scale: Scale) -> ScaleSettings:
        defaults = SCALE_SETTINGS[scale]
        return ScaleSettings(
            n_trajectories=self.n_trajectories or defaults.n_trajectories,
            ladder_exponents=tuple(self.ladder_exponents or defaults.ladder_exponents),
            reference_exponent=self.reference_exponent or defaults.reference_exponent,
        )


class MlmcSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    epsilon: float = 1e-3
    scheme: SchemeId = SchemeId.SMS
    min_trajectories: int = 500
    min_levels: int = 6
    warmup_samples: Optional[int] = None
    repeats: int = Field(default=1, ge=1)

    def to_config(self, seed: int) -> MlmcConfig:
        return MlmcConfig(
            epsilon=self.epsilon,
            scheme=self.scheme,
            min_trajectories=self.min_trajectories,
            min_levels=self.min_levels,
            warmup_samples=self.warmup_samples,
            seed=seed,
        )


class RunConfig(BaseSettings):
    model_config = SettingsConfigDict(
        yaml_file=DEFAULT_CONFIG_FILE,
        yaml_file_encoding="utf-8",
        env_prefix="CEVSIM_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    model: Optional[CevModel] = None
    experiment: ExperimentSection = ExperimentSection()
    zcb: ZcbModel = ZcbModel()
    mlmc: MlmcSection = MlmcSection()

    seed: int = Field(default=0, ge=0)
    threads: Optional[int] = Field(default=None, ge=1)
    scale: Scale = Scale.Desk
    output_dir: Path = Path("results")

    log_level: str = "INFO"
    log_to_console: bool = True

    def require_model(self) -> CevModel:
        if self.model is None:
            raise ConfigError("model: section is required for this command")
        return self.model

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        yaml_source = YamlConfigSettingsSource(settings_cls)
        return (init_settings, env_settings, yaml_source)


def load_run_config(config_path: Optional[Path] = None, **overrides: Any) -> RunConfig:
    """Build the run configuration from flags, environment and a YAML file.

    Args:
        config_path: YAML file replacing the default ``cevsim.yaml``.
        **overrides: Values taking precedence over every other source.

    Raises:
        ConfigError: If ``config_path`` does not exist.
        pydantic.ValidationError: If the merged values are invalid.
    """
    settings_cls: type[RunConfig] = RunConfig
    if config_path is not None:
        config_path = Path(config_path)
        if not config_path.is_file():
            raise ConfigError(f"config file {config_path} does not exist")
        settings_cls = type(
            "RunConfig",
            (RunConfig,),
            {"model_config": SettingsConfigDict(yaml_file=config_path)},
        )
    return settings_cls(**overrides)


def format_validation_error(error: Any) -> List[str]:
    """One ``key.path: message`` line per pydantic error."""
    lines: List[str] = []
    for item in error.errors():
        loc: Tuple[Any, ...] = item.get("loc", ())
        key = ".".join(str(part) for part in loc) or "<root>"
        lines.append(f"{key}: {item.get('msg', 'invalid value')}")
    return lines

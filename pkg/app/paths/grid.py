import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.errors import IndivisibleStepCount, OddStepCount

from .rng import SeedId, standard_normals


class GridSpec(BaseModel):
    """Uniform grid of ``n_steps`` steps of size ``T / n_steps`` on ``[0, T]``."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    horizon_T: float = Field(gt=0, alias="T")
    n_steps: int = Field(ge=1)

    @property
    def dt(self) -> float:
        return self.horizon_T / self.n_steps

    def times(self) -> np.ndarray:
        return np.arange(self.n_steps + 1) * self.dt

    def coarser(self, halvings: int = 1) -> "GridSpec":
        factor = 2**halvings
        if self.n_steps % factor:
            raise IndivisibleStepCount(
                f"{self.n_steps} steps cannot be coarsened {halvings} times"
            )
        return GridSpec(T=self.horizon_T, n_steps=self.n_steps // factor)

    def refined(self, doublings: int = 1) -> "GridSpec":
        return GridSpec(T=self.horizon_T, n_steps=self.n_steps * 2**doublings)


def coarsen_increments(increments: np.ndarray, halvings: int = 1) -> np.ndarray:
    """Sum consecutive pairs along the last axis, ``halvings`` times."""
    out = increments
    for _ in range(halvings):
        if out.shape[-1] % 2:
            raise OddStepCount(f"cannot pair {out.shape[-1]} increments")
        out = out[..., 0::2] + out[..., 1::2]
    return out


def tree_sum(increments: np.ndarray) -> np.ndarray:
    """Sum along the last axis by repeated pairing.

    Grids related by coarsening share the pairing tree, so their sums agree
    bitwise.
    """
    out = increments
    while out.shape[-1] > 1 and out.shape[-1] % 2 == 0:
        out = coarsen_increments(out)
    return out.sum(axis=-1)


@dataclass(frozen=True)
class BrownianGrid:
    spec: GridSpec
    increments: np.ndarray
    seed_id: Optional[SeedId] = None

    def __post_init__(self) -> None:
        increments = np.array(self.increments, dtype=np.float64)
        if increments.shape != (self.spec.n_steps,):
            raise ValueError(
                f"expected {self.spec.n_steps} increments, got shape {increments.shape}"
            )
        increments.flags.writeable = False
        object.__setattr__(self, "increments", increments)

    @property
    def dt(self) -> float:
        return self.spec.dt

    @property
    def n_steps(self) -> int:
        return self.spec.n_steps

    def terminal_value(self) -> float:
        return float(tree_sum(self.increments))

    def path_values(self) -> np.ndarray:
        """W at every grid time, starting from W_0 = 0."""
        return np.concatenate(([0.0], np.cumsum(self.increments)))


def generate_increments(
    spec: GridSpec, seed: int, stream: int, start: int, count: int
) -> np.ndarray:
    """Brownian increments for a contiguous range of trajectory ids, shape ``(count, n_steps)``."""
    normals = standard_normals(seed, stream, start, count, spec.n_steps)
    return normals * math.sqrt(spec.dt)


def generate(spec: GridSpec, seed_id: SeedId) -> BrownianGrid:
    increments = generate_increments(
        spec, seed_id.seed, seed_id.stream, seed_id.trajectory, 1
    )[0]
    return BrownianGrid(spec=spec, increments=increments, seed_id=seed_id)


def coarsen(g: BrownianGrid) -> BrownianGrid:
    if g.n_steps % 2:
        raise OddStepCount(f"cannot coarsen a grid of {g.n_steps} steps")
    return BrownianGrid(
        spec=g.spec.coarser(),
        increments=coarsen_increments(g.increments),
        seed_id=g.seed_id,
    )


def restrict_to_ladder(g: BrownianGrid, n_levels: int) -> List[BrownianGrid]:
    """Return ``[g, coarsen(g), coarsen(coarsen(g)), ...]`` with ``n_levels`` members."""
    if n_levels < 1:
        raise ValueError(f"n_levels must be >= 1, got {n_levels}")
    if g.n_steps % 2 ** (n_levels - 1):
        raise IndivisibleStepCount(
            f"{g.n_steps} steps are not divisible by 2^{n_levels - 1}"
        )
    ladder = [g]
    for _ in range(n_levels - 1):
        ladder.append(coarsen(ladder[-1]))
    return ladder

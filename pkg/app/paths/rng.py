"""Counter-based Gaussian stream.

Every standard normal is a pure function of ``(seed, stream, trajectory, step)``:
the Philox key holds ``(seed, stream)``, the second counter word holds the
trajectory id and the low counter word runs over the steps of that trajectory.
Uniforms are mapped to normals by the inverse CDF, so no generator state
survives between draws and the result never depends on how trajectories are
chunked or scheduled across threads.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

_WORD = 2**64


@dataclass(frozen=True)
class SeedId:
    seed: int
    stream: int = 0
    trajectory: int = 0

    def __post_init__(self) -> None:
        if min(self.seed, self.stream, self.trajectory) < 0:
            raise ValueError(f"seed descriptor fields must be nonnegative: {self}")
        if max(self.seed, self.stream, self.trajectory) >= _WORD:
            raise ValueError(f"seed descriptor fields must fit in 64 bits: {self}")


def _uniforms_for_trajectory(
    seed: int, stream: int, trajectory: int, n_steps: int
) -> np.ndarray:
    bit_generator = np.random.Philox(
        key=seed * _WORD + stream, counter=trajectory * _WORD
    )
    raw = bit_generator.random_raw(n_steps)
    # 53 high bits, centred in their cell: strictly inside (0, 1)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def standard_normals(
    seed: int, stream: int, start: int, count: int, n_steps: int
) -> np.ndarray:
    """Standard normals for trajectories ``start .. start + count - 1``.

    Returns:
        Array of shape ``(count, n_steps)``.
    """
    out = np.empty((max(count, 0), n_steps))
    for row in range(count):
        out[row] = _uniforms_for_trajectory(seed, stream, start + row, n_steps)
    return ndtri(out, out=out)

"""Binary dump of increment grids for cross-language comparison.

Layout, little-endian: ``n_steps`` (u8), ``dt`` (f8), ``seed``, ``stream``,
``trajectory`` (u8 each, all ones when the grid carries no seed descriptor),
then ``n_steps`` increments (f8).
"""

from pathlib import Path

import numpy as np
import structlog

from .grid import BrownianGrid, GridSpec
from .rng import SeedId

logger = structlog.get_logger(__name__)

_HEADER = np.dtype(
    [
        ("n_steps", "<u8"),
        ("dt", "<f8"),
        ("seed", "<u8"),
        ("stream", "<u8"),
        ("trajectory", "<u8"),
    ]
)
_NO_SEED = int(np.iinfo(np.uint64).max)


def dump_grid(g: BrownianGrid, out_path: Path) -> Path:
    header = np.zeros(1, dtype=_HEADER)
    header["n_steps"] = g.n_steps
    header["dt"] = g.dt
    if g.seed_id is None:
        header["seed"] = header["stream"] = header["trajectory"] = _NO_SEED
    else:
        header["seed"] = g.seed_id.seed
        header["stream"] = g.seed_id.stream
        header["trajectory"] = g.seed_id.trajectory

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "wb") as f:
        f.write(header.tobytes())
        f.write(g.increments.astype("<f8").tobytes())
    logger.info("grid_dumped", path=str(out_path), n_steps=g.n_steps)
    return out_path


def load_grid(in_path: Path) -> BrownianGrid:
    payload = Path(in_path).read_bytes()
    header = np.frombuffer(payload[: _HEADER.itemsize], dtype=_HEADER)[0]
    n_steps = int(header["n_steps"])
    increments = np.frombuffer(payload[_HEADER.itemsize :], dtype="<f8")
    if increments.size != n_steps:
        raise ValueError(
            f"{in_path}: header announces {n_steps} increments, found {increments.size}"
        )
    seed_id = None
    if int(header["seed"]) != _NO_SEED:
        seed_id = SeedId(
            seed=int(header["seed"]),
            stream=int(header["stream"]),
            trajectory=int(header["trajectory"]),
        )
    spec = GridSpec(T=float(header["dt"]) * n_steps, n_steps=n_steps)
    return BrownianGrid(spec=spec, increments=increments, seed_id=seed_id)

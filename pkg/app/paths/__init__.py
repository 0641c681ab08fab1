from .batching import (
    MAX_CHUNK_ELEMENTS,
    MAX_CHUNK_ROWS,
    TrajectoryChunk,
    default_threads,
    run_chunks,
    trajectory_chunks,
)
from .dump import dump_grid, load_grid
from .grid import (
    BrownianGrid,
    GridSpec,
    coarsen,
    coarsen_increments,
    generate,
    generate_increments,
    restrict_to_ladder,
    tree_sum,
)
from .rng import SeedId

__all__ = [
    "BrownianGrid",
    "GridSpec",
    "MAX_CHUNK_ELEMENTS",
    "MAX_CHUNK_ROWS",
    "SeedId",
    "TrajectoryChunk",
    "coarsen",
    "coarsen_increments",
    "default_threads",
    "dump_grid",
    "generate",
    "generate_increments",
    "load_grid",
    "restrict_to_ladder",
    "run_chunks",
    "trajectory_chunks",
    "tree_sum",
]

import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, List, Optional, TypeVar

import structlog

logger = structlog.get_logger(__name__)

# bounds on one chunk; chunking never changes the numbers
MAX_CHUNK_ROWS = 4096
MAX_CHUNK_ELEMENTS = 2**22

T = TypeVar("T")


@dataclass(frozen=True)
class TrajectoryChunk:
    index: int
    start: int
    count: int


def default_threads() -> int:
    return os.cpu_count() or 1


def trajectory_chunks(start: int, count: int, n_steps: int) -> List[TrajectoryChunk]:
    """Split trajectory ids ``start .. start + count - 1`` into chunks.

    Chunks never exceed ``MAX_CHUNK_ROWS`` rows nor
    ``MAX_CHUNK_ELEMENTS`` increments of the finest grid.
    """
    rows = max(1, min(MAX_CHUNK_ROWS, MAX_CHUNK_ELEMENTS // max(n_steps, 1)))
    chunks = []
    for index, offset in enumerate(range(0, count, rows)):
        chunks.append(
            TrajectoryChunk(index=index, start=start + offset, count=min(rows, count - offset))
        )
    return chunks


def run_chunks(
    work: Callable[[TrajectoryChunk], T],
    chunks: List[TrajectoryChunk],
    threads: Optional[int] = None,
) -> List[T]:
    """Run ``work`` on every chunk and return the results in chunk order."""
    threads = threads or default_threads()
    if threads == 1 or len(chunks) <= 1:
        return [work(chunk) for chunk in chunks]

    results: List[Optional[T]] = [None] * len(chunks)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(work, chunk): chunk.index for chunk in chunks}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    logger.debug("chunks_completed", n_chunks=len(chunks), threads=threads)
    return results  # type: ignore[return-value]

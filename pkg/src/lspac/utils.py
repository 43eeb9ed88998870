"""Logging setup, worker pools and word enumeration helpers."""

import logging
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None):
    """Set up logging configuration.

    Console output goes to stderr so stdout stays reserved for reports.
    """
    log_level = getattr(logging, level.upper(), logging.INFO)

    handlers: List[logging.Handler] = []

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handlers.append(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=log_level, handlers=handlers, force=True)


def format_duration(seconds: float) -> str:
    """Format duration in seconds to human readable string."""
    if seconds < 60:
        return f"{seconds:.1f}s"
    elif seconds < 3600:
        return f"{seconds / 60:.1f}m"
    return f"{seconds / 3600:.1f}h"


def _run_chunk(func: Callable[[T], R], chunk: List[T]) -> List[R]:
    return [func(item) for item in chunk]


def parallel_map(
    func: Callable[[T], R], items: Iterable[T], workers: int = 0, chunk_size: int = 256
) -> List[R]:
    """Apply ``func`` to every item, keeping input order.

    Args:
        func: Module-level (picklable) function.
        items: Inputs.
        workers: Process count; 0 runs in this process.
        chunk_size: Items per dispatched task.
    """
    items = list(items)
    chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
    worker = partial(_run_chunk, func)
    if workers > 0 and len(chunks) > 1:
        logger.info(f"Dispatching {len(items)} items to {workers} workers")
        with Pool(processes=workers) as pool:
            results = pool.map(worker, chunks)
    else:
        results = [worker(chunk) for chunk in chunks]
    return [r for chunk in results for r in chunk]


def lyndon_words(alphabet: Iterable[int], max_length: int) -> Iterator[Tuple[int, ...]]:
    """Lyndon words over ``alphabet`` of length 1..max_length in lexicographic order.

    Every periodic sequence has exactly one Lyndon word among the rotations of
    its minimal period.
    """
    letters = sorted(set(alphabet))
    k = len(letters)
    if k == 0 or max_length < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(letters[i] for i in w)
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def rotations(word: Sequence[int]) -> List[Tuple[int, ...]]:
    """All cyclic rotations ``word[i:] + word[:i]``, starting with the word itself."""
    word = tuple(word)
    return [word[i:] + word[:i] for i in range(len(word))]


def occurs_cyclically(pattern: Sequence[int], period: Sequence[int]) -> bool:
    """True when ``pattern`` is a factor of the bi-infinite repetition of ``period``."""
    pattern, period = tuple(pattern), tuple(period)
    if not pattern:
        return True
    reps = len(pattern) // len(period) + 2
    text = period * reps
    n = len(pattern)
    return any(text[i : i + n] == pattern for i in range(len(period)))

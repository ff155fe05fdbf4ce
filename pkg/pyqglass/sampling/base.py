"""
Seeded sample streams and worker-count-independent reduction of Monte Carlo moments.

Samples are grouped in fixed blocks of ``BLOCK_SIZE``. Block ``b`` draws from its own
generator seeded by ``SeedSequence(master_seed, spawn_key=(b,))``, so the value of sample
``i`` depends only on ``(master_seed, i)``. Per-block moments are merged in block order
(Chan et al. update), which makes results bit-identical for any worker count.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1024
WORKERS_ENV = "PYQGLASS_WORKERS"
RNG_TRANSFORM = (
    "numpy PCG64 seeded by SeedSequence(master_seed, spawn_key=(block,)), "
    f"block size {BLOCK_SIZE}; normals via Generator.standard_normal (ziggurat), x = J + sigma*z; "
    "fair signs via Generator.integers(0, 2)*2-1"
)


def block_generator(master_seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(master_seed), spawn_key=(int(block),))))


def iter_blocks(n_samples: int, block_size: int = BLOCK_SIZE) -> Iterator[Tuple[int, int]]:
    """Yield ``(block_index, count)`` covering ``n_samples`` samples."""
    n_blocks = (n_samples + block_size - 1) // block_size
    for b in range(n_blocks):
        yield b, min(block_size, n_samples - b * block_size)


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", WORKERS_ENV, raw)
        return 1


@dataclass
class Moments:
    """Count, mean and summed squared deviation of a sample of (possibly complex) arrays."""

    count: int
    mean: np.ndarray
    m2: np.ndarray

    @classmethod
    def of(cls, samples: np.ndarray) -> "Moments":
        samples = np.asarray(samples)
        mean = samples.mean(axis=0)
        m2 = np.sum(np.abs(samples - mean) ** 2, axis=0)
        return cls(samples.shape[0], mean, m2)

    def merge(self, other: "Moments") -> "Moments":
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / total)
        m2 = self.m2 + other.m2 + np.abs(delta) ** 2 * (self.count * other.count / total)
        return Moments(total, mean, m2)

    @property
    def std(self) -> np.ndarray:
        # population std; sem uses the same value over sqrt(n)
        return np.sqrt(self.m2 / self.count)

    @property
    def sem(self) -> np.ndarray:
        return self.std / np.sqrt(self.count)


BlockFunction = Callable[[np.random.Generator, int], np.ndarray]


def _run_block(task: Tuple[BlockFunction, int, int, int]) -> Moments:
    func, master_seed, block, count = task
    samples = func(block_generator(master_seed, block), count)
    logger.debug("block %d: %d samples", block, count)
    return Moments.of(samples)


def sample_moments(
    func: BlockFunction,
    n_samples: int,
    master_seed: int,
    workers: Optional[int] = None,
    block_size: int = BLOCK_SIZE,
) -> Moments:
    """Moments of ``func(generator, count)`` outputs (shape ``(count, ...)``) over all samples.

    ``func`` must be picklable (a module-level function or a ``functools.partial`` of one)
    when ``workers > 1``.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    workers = default_workers() if workers is None else max(1, int(workers))
    tasks = [(func, master_seed, b, count) for b, count in iter_blocks(n_samples, block_size)]
    if workers == 1 or len(tasks) == 1:
        partials: List[Moments] = [_run_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_run_block, tasks))
    total = partials[0]
    for part in partials[1:]:
        total = total.merge(part)
    return total


def gaussian(rng: np.random.Generator, mean: float, variance: float, size) -> np.ndarray:
    return mean + np.sqrt(variance) * rng.standard_normal(size)


def fair_signs(rng: np.random.Generator, size) -> np.ndarray:
    return rng.integers(0, 2, size=size, dtype=np.int64) * 2 - 1

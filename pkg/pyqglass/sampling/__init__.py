from .base import (
    BLOCK_SIZE,
    RNG_TRANSFORM,
    WORKERS_ENV,
    Moments,
    block_generator,
    default_workers,
    fair_signs,
    gaussian,
    iter_blocks,
    sample_moments,
)

__all__ = [
    "BLOCK_SIZE",
    "RNG_TRANSFORM",
    "WORKERS_ENV",
    "Moments",
    "block_generator",
    "default_workers",
    "fair_signs",
    "gaussian",
    "iter_blocks",
    "sample_moments",
]

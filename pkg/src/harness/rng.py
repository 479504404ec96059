"""
Per-sample random streams.

Every sample owns an independent Philox stream keyed by
(master_seed, dim_index, sample_index), so any record can be regenerated in
isolation and the worker layout never changes what is drawn.
"""
import math

import numpy as np

from src.errors import ParamOutOfRange


def stream_for(master_seed: int, dim_index: int, sample_index: int) -> np.random.Generator:
    """Generator for one sample; two calls with the same key yield the same draws"""
    if dim_index < 0 or sample_index < 0:
        raise ParamOutOfRange(f"stream key ({dim_index}, {sample_index}) must be non-negative")
    seed = np.random.SeedSequence(master_seed, spawn_key=(dim_index, sample_index))
    return np.random.Generator(np.random.Philox(seed))


def log_uniform(rng: np.random.Generator, low: float, high: float) -> float:
    """Draw from the log-uniform distribution on [low, high)"""
    if not (0 < low < high):
        raise ParamOutOfRange(f"log-uniform range ({low}, {high}) must satisfy 0 < low < high")
    return float(math.exp(rng.uniform(math.log(low), math.log(high))))


__all__ = ["stream_for", "log_uniform"]

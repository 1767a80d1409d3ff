"""Seed derivation and random generator construction."""

import hashlib
from typing import Any

import numpy as np

MAX_SEED = 2**64 - 1


def validate_seed(seed: int) -> int:
    """Return the seed if it fits in an unsigned 64-bit integer."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError(f"Seed must be an integer, got {type(seed).__name__}")
    if not 0 <= int(seed) <= MAX_SEED:
        raise ValueError(f"Seed must be in [0, 2**64 - 1], got {seed}")
    return int(seed)


def derive_seed(base_seed: int, *parts: Any) -> int:
    """Hash a base seed and any number of labels into a new 64-bit seed.

    The derivation only depends on the values passed in, so a trial can be
    reproduced in isolation from (base_seed, algorithm, x_value, trial).
    """
    digest = hashlib.blake2b(digest_size=8)
    digest.update(str(validate_seed(base_seed)).encode("utf-8"))
    for part in parts:
        digest.update(b"\x1f")
        digest.update(_canonical(part).encode("utf-8"))
    return int.from_bytes(digest.digest(), "big")


def make_rng(seed: int) -> np.random.Generator:
    """Create the generator used everywhere in the library (PCG64)."""
    return np.random.Generator(np.random.PCG64(validate_seed(seed)))


def _canonical(part: Any) -> str:
    # 20 and 20.0 must derive the same seed
    if isinstance(part, float) and part.is_integer():
        return str(int(part))
    if hasattr(part, "value"):
        return str(part.value)
    return str(part)

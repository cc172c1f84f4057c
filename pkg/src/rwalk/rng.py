"""Seed discipline: one 64-bit seed per invocation, split by stage labels.

Every generator in the package is ``numpy.random.Generator`` over PCG64.
Child streams are derived deterministically from (seed, label) so that
independent pipeline stages never share a stream, and the whole run is
reproducible from the single top-level seed.
"""

import hashlib

import numpy as np


def label_entropy(label: str) -> int:
    """Stable 64-bit integer derived from a stage label."""
    h = hashlib.sha256(label.encode("utf-8")).digest()
    return int.from_bytes(h[:8], "little")


def rng_for(seed: int, label: str) -> np.random.Generator:
    """PCG64 generator for the stage ``label`` of a run seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, label_entropy(label)]))

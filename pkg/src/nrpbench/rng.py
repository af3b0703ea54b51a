"""Reproducible random streams.

Every random decision in this package is drawn from a PCG64 generator
seeded through ``numpy.random.SeedSequence``.  Independent streams are
addressed by a (seed, *path) tuple, where the first path element is one
of the purpose constants below and the remaining elements identify the
sub-stream (iteration, ant index, restart index, ...).  The same address
always yields the same stream, on every platform, so results do not
depend on call order or on how work is scheduled across workers.
"""

from __future__ import annotations

import numpy as np

# purpose tags (first spawn-key element)
GEN_COSTS = 1
GEN_EDGES = 2
GEN_CUSTOMERS = 3
ANT = 4
FHC_RESTART = 5
GRASP_RESTART = 6
SA_CHAIN = 7
SA_PROBE = 8


def substream(seed: int, *path: int) -> np.random.Generator:
    """Return the PCG64 generator addressed by (seed, *path).

    ``seed`` must be a non-negative integer; path elements are small
    non-negative integers.
    """
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(path))
    return np.random.Generator(np.random.PCG64(ss))

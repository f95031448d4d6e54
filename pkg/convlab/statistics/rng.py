"""
Named, versioned pseudo-random streams.

All randomness goes through numpy's PCG64 bit generator. Independent
per-grid-point streams are spawned from one SeedSequence built on the
master seed, so results do not depend on evaluation order.
"""

from typing import List

import numpy as np

BIT_GENERATOR = "PCG64"


def prng_id() -> str:
    """Identifier recorded in every report."""
    return f"numpy-{np.__version__}/{BIT_GENERATOR}/SeedSequence"


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def child_generators(master_seed: int, count: int) -> List[np.random.Generator]:
    """`count` independent generators spawned from the master seed."""
    children = np.random.SeedSequence(master_seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]

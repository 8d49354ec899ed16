"""
Counter-based random streams.

Every random choice in a run derives from one 64-bit seed. Each consumer asks
for its own stream index, so adding a draw in one place never shifts the
numbers another place sees.
"""

import numpy as np

_KEY_MASK = (1 << 128) - 1


def rng_for(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox generator keyed by seed, with the stream index in the top counter word."""
    return np.random.Generator(np.random.Philox(key=seed & _KEY_MASK, counter=stream << 192))


def shuffled(items: list, seed: int, stream: int = 0) -> list:
    order = rng_for(seed, stream).permutation(len(items))
    return [items[i] for i in order]

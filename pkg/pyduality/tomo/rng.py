"""
Keyed random substreams.

Every random draw is made from a generator derived from the run seed and
a tuple of integer keys naming the draw, e.g. ``(setting,)`` for a
simulated count or ``(setting, sample)`` for a Monte-Carlo resample. The
streams are independent of each other and of the order in which they are
requested, so serial and parallel runs agree bit for bit.
"""

import numpy as np


def substream(seed: int, *keys: int) -> np.random.Generator:
    """
    The generator for the draw named by ``keys`` under ``seed``.
    """
    if seed is None or int(seed) < 0:
        raise ValueError(f"Seed must be a non-negative integer, got {seed}.")
    spawn_key = tuple(int(k) for k in keys)
    return np.random.default_rng(
        np.random.SeedSequence(int(seed), spawn_key=spawn_key))


def derive_seed(seed: int, *keys: int) -> int:
    """
    An integer seed for a child computation, e.g. the Monte-Carlo run of
    one sweep grid point.
    """
    sequence = np.random.SeedSequence(
        int(seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint32)[0])

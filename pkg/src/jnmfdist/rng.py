"""Seeded random number streams.

Every stochastic operation in the package takes an explicit
``numpy.random.Generator``. Generators are built on PCG64, so runs with the
same seed and the same call sequence reproduce bit for bit across platforms.
Independent streams (per trial, per worker) are derived with
:func:`child_rng`, which hashes (parent seed, child index) through
``numpy.random.SeedSequence`` rather than trusting arithmetic on raw seeds.
"""

from __future__ import annotations

import numpy as np

RandomSource = np.random.Generator


def make_rng(seed: int) -> RandomSource:
    """Fresh PCG64 generator for the given 64-bit seed."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def child_rng(seed: int, index: int) -> RandomSource:
    """Independent stream number ``index`` derived from a parent seed."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))

"""Seeded, splittable randomness.

Every randomized operation in the package takes a RandomStream explicitly,
so results are reproducible and independent solves can run concurrently on
their own streams.
"""
from __future__ import annotations

import numpy as np


class RandomStream:
    """Uniform-randomness source backed by PCG64.

    Child streams are derived from the seed data, not the generator state:
    ``child(i)`` yields the same stream no matter how much the parent has
    already been consumed. This is what makes parallel trials reproducible.
    """

    def __init__(self, seed: int = 0, *, _seq: np.random.SeedSequence | None = None):
        self._seq = np.random.SeedSequence(seed) if _seq is None else _seq
        self._gen = np.random.Generator(np.random.PCG64(self._seq))

    def child(self, index: int) -> "RandomStream":
        seq = np.random.SeedSequence(
            entropy=self._seq.entropy, spawn_key=tuple(self._seq.spawn_key) + (index,)
        )
        return RandomStream(_seq=seq)

    def uniform(self) -> float:
        """One double in [0, 1)."""
        return float(self._gen.random())

    def uniforms(self, size: int) -> np.ndarray:
        return self._gen.random(size)

    def normals(self, shape) -> np.ndarray:
        return self._gen.standard_normal(shape)

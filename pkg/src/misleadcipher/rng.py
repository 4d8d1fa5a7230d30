"""Random sources feeding the encryptor.

The encryptor only needs two draws: a payload start position in [1, 7]
and a misleading digit in [0, 9]. The default source is numpy's Philox,
a counter-based generator whose output for a given seed is the same on
every platform.
"""

from __future__ import annotations

from typing import Iterable, Optional, Protocol

import numpy as np

MAX_START = 7


class RandomSource(Protocol):
    def start_position(self) -> int: ...

    def mislead_digit(self) -> int: ...


class PhiloxSource:
    """Seeded (reproducible) or entropy-seeded source. Not thread-safe."""

    def __init__(self, seed: Optional[int] = None):
        self.seed = seed
        self._gen = np.random.Generator(np.random.Philox(seed))

    def start_position(self) -> int:
        return int(self._gen.integers(1, MAX_START + 1))

    def mislead_digit(self) -> int:
        return int(self._gen.integers(0, 10))


class ScriptedSource:
    """Replays fixed start positions and digits; raises once either runs out."""

    def __init__(self, starts: Iterable[int], digits: Iterable[int] | str):
        self._starts = iter(list(starts))
        self._digits = iter([int(d) for d in digits])

    def start_position(self) -> int:
        try:
            return next(self._starts)
        except StopIteration:
            raise RuntimeError("scripted start positions exhausted") from None

    def mislead_digit(self) -> int:
        try:
            return next(self._digits)
        except StopIteration:
            raise RuntimeError("scripted mislead digits exhausted") from None


def make_source(seed: Optional[int] = None) -> PhiloxSource:
    return PhiloxSource(seed)

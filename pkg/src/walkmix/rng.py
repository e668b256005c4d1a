"""Seedable random source shared by all walk kernels.

Every walk owns one :class:`RandomStream`: a PCG64 generator whose 53-bit
uniforms are consumed one at a time. Integer picks use ``floor(u * n)`` so
any kernel that draws one uniform per step occupies identical stream
positions regardless of how many neighbors the current node has; this is
what makes the alpha=0 inverse-degree walk reproduce a plain random walk's
node sequence under a shared seed.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RandomStream"]

_BLOCK = 4096


class RandomStream:
    """Buffered stream of U(0,1) draws from a seeded PCG64 generator."""

    __slots__ = ("seed", "_gen", "_buf", "_pos")

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self._buf: list[float] = self._gen.random(_BLOCK).tolist()
        self._pos = 0

    def uniform(self) -> float:
        """Next U(0,1) draw (53-bit resolution)."""
        pos = self._pos
        buf = self._buf
        if pos == _BLOCK:
            self._buf = buf = self._gen.random(_BLOCK).tolist()
            pos = 0
        self._pos = pos + 1
        return buf[pos]

    def pick(self, n: int) -> int:
        """Uniform index in [0, n) as floor(u * n)."""
        return int(self.uniform() * n)

    def __repr__(self) -> str:  # pragma: no cover
        return f"RandomStream(seed={self.seed})"

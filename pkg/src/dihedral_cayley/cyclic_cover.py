"""Diameter-2 generating sets for cyclic groups ``Z_n``.

With ``K = ceil(sqrt(n))`` and ``M = floor(K/2)`` the set
``{±1, ..., ±M, ±K, ±2K, ..., ±MK}`` (reduced mod ``n``) gives every residue as
``a + bK`` with ``|a|, |b| <= M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

NOT_CONNECTED = math.inf


@dataclass(frozen=True)
class CyclicCover:
    n: int
    K: int
    M: int
    residues: frozenset[int]
    augmented: int = 0

    def sorted_residues(self) -> list[int]:
        return sorted(self.residues)

    def __len__(self) -> int:
        return len(self.residues)


def _check_residues(n: int, residues) -> list[int]:
    res = sorted({int(r) for r in residues})
    for r in res:
        if not 0 < r < n:
            raise ValueError(f"residue {r} not a nonzero residue mod {n}")
        if (-r) % n not in res:
            raise ValueError(f"residue set not closed under negation: {-r % n} missing")
    return res


def cyclic_distances(n: int, residues) -> np.ndarray:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return kernels.cyclic_distances(n, np.asarray(sorted(residues), dtype=np.int64))


def cyclic_diameter(n: int, residues) -> float:
    """Diameter of ``Cay(Z_n, residues)``; ``math.inf`` when the set does not generate."""
    res = _check_residues(n, residues)
    dist = cyclic_distances(n, res)
    if (dist < 0).any():
        return NOT_CONNECTED
    return int(dist.max())


def cover_set(n: int) -> CyclicCover:
    if n < 2:
        raise ValueError(f"cover_set needs n >= 2, got {n}")
    K = math.isqrt(n - 1) + 1
    M = K // 2
    res: set[int] = set()
    for j in range(1, M + 1):
        for r in (j, j * K):
            res.add(r % n)
            res.add(-r % n)
    res.discard(0)

    augmented = 0
    while True:
        dist = cyclic_distances(n, res)
        bad = np.flatnonzero((dist < 0) | (dist > 2))
        if bad.size == 0:
            break
        u = int(bad[0])
        res.update((u, -u % n))
        augmented += 1
    return CyclicCover(n, K, M, frozenset(res), augmented)


def decompose_residue(cover: CyclicCover, x: int) -> list[int]:
    """Write ``x`` as a sum of at most two cover residues (empty for 0)."""
    n = cover.n
    x %= n
    if x == 0:
        return []
    if x in cover.residues:
        return [x]
    for r in sorted(cover.residues):
        if (x - r) % n in cover.residues:
            return [r, (x - r) % n]
    raise ValueError(f"{x} is not a sum of two residues of the cover of Z_{n}")

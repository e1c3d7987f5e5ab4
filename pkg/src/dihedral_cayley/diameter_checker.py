"""Diameter computation and diameter-2 certification for Cayley graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .group_core import (
    ENUMERATION_CAP,
    CapExceededError,
    GDElement,
    GroupSpec,
    check_element,
    decode_indices,
    index_element,
    indices_of,
    inverse,
    multiply,
)

NOT_CONNECTED = math.inf


class InvalidGeneratingSetError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass
class CayleyCheck:
    spec: GroupSpec
    S: list[GDElement]
    diameter: float
    witnesses: dict[GDElement, tuple[GDElement, ...]] | None = field(default=None, repr=False)

    @property
    def degree(self) -> int:
        return len(self.S)

    @property
    def connected(self) -> bool:
        return self.diameter != NOT_CONNECTED


def validate_generating_set(spec: GroupSpec, S: Iterable[GDElement]) -> list[str]:
    """Return violations (empty list means the set is a valid connection set)."""
    S = list(S)
    out: list[str] = []
    for s in S:
        try:
            check_element(spec, s)
        except ValueError as exc:
            out.append(f"invalid element: {exc}")
    if out:
        return out
    members = set(S)
    if len(members) != len(S):
        out.append("duplicate elements")
    if spec.identity in members:
        out.append(f"identity {spec.identity} in S")
    for s in S:
        t = inverse(spec, s)
        if t not in members:
            out.append(f"inverse {t} of {s} missing")
    return out


def _prepare(spec: GroupSpec, S) -> tuple[np.ndarray, np.ndarray]:
    if spec.order > ENUMERATION_CAP:
        raise CapExceededError(f"group order {spec.order} exceeds cap {ENUMERATION_CAP}")
    S = list(S)
    problems = validate_generating_set(spec, S)
    if problems:
        raise InvalidGeneratingSetError(problems)
    idx = indices_of(spec, S)
    digits, sign = decode_indices(spec, idx)
    return np.ascontiguousarray(digits), np.ascontiguousarray(sign)


def distances(spec: GroupSpec, S) -> np.ndarray:
    """Word length of every element (by index); -1 where unreachable."""
    digits, sign = _prepare(spec, S)
    return kernels.bfs_distances(spec.radix_array(), spec.n, digits, sign)


def diameter(spec: GroupSpec, S) -> float:
    """Exact diameter (vertex-transitive, so the identity's eccentricity); inf if disconnected."""
    dist = distances(spec, S)
    if (dist < 0).any():
        return NOT_CONNECTED
    return int(dist.max())


def cayley_check(spec: GroupSpec, S, with_witnesses: bool = False) -> CayleyCheck:
    S = list(S)
    if not with_witnesses:
        return CayleyCheck(spec, S, diameter(spec, S))
    dist = distances(spec, S)
    diam = NOT_CONNECTED if (dist < 0).any() else int(dist.max())
    return CayleyCheck(spec, S, diam, _witness_words(spec, S, dist))


def _witness_words(spec, S, dist) -> dict[GDElement, tuple[GDElement, ...]]:
    words: dict[GDElement, tuple[GDElement, ...]] = {spec.identity: ()}
    order = np.argsort(dist, kind="stable")
    for i in order:
        if dist[i] <= 0:
            continue
        x = index_element(spec, int(i))
        for s in S:
            # x = y s  =>  y = x s^-1
            y = multiply(spec, x, inverse(spec, s))
            if y in words and len(words[y]) == dist[i] - 1:
                words[x] = words[y] + (s,)
                break
    return words


def coverage(spec: GroupSpec, S) -> np.ndarray:
    """Bitset (uint8 per element) of identity ∪ S ∪ S·S."""
    digits, sign = _prepare(spec, S)
    return kernels.product_cover(spec.radix_array(), spec.n, digits, sign)


def is_diameter_two(spec: GroupSpec, S) -> tuple[bool, list[GDElement]]:
    """``(True, [])`` iff every element is a product of at most two generators."""
    cov = coverage(spec, S)
    gaps = [index_element(spec, int(i)) for i in np.flatnonzero(cov == 0)]
    return not gaps, gaps


def split_counts(spec: GroupSpec, S) -> tuple[int, int]:
    """``(m1, m2)``: number of rotations and of reflections in ``S``."""
    S = list(S)
    for s in S:
        check_element(spec, s)
    m2 = sum(1 for s in S if s.sign == -1)
    return len(S) - m2, m2

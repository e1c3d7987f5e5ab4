"""Exhaustive certification of small cases.

Inverse-closed, identity-free sets are unions of *atoms*: an involution, or a
pair ``{x, x^-1}``.  Atoms are listed by the index of their smaller element and
candidate sets of a given size are visited in lexicographic atom order, so the
first diameter-2 set found (the witness) is the same on every run and on
either kernel backend.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import kernels
from .bounds_primes import dihedral_upper_bound, min_degree_bound
from .diameter_checker import is_diameter_two, split_counts, validate_generating_set
from .group_core import (
    GDElement,
    GroupSpec,
    decode_indices,
    generalised_dihedral_specs,
    index_element,
)

log = logging.getLogger(__name__)

SEARCH_ORDER_CAP = 64
EXACT_DC_MAX_DEGREE = 7

GroupClass = Literal["dihedral", "generalised"]


class SearchCapError(ValueError):
    pass


@dataclass
class SearchResult:
    spec: GroupSpec
    d_min: int
    witness: list[GDElement]
    sets_examined: int
    start_size: int = 1
    examined_by_size: dict[int, int] = field(default_factory=dict)

    @property
    def split(self) -> tuple[int, int]:
        return split_counts(self.spec, self.witness)


@dataclass
class ExactDC:
    d: int
    group_class: str
    order: int
    spec: GroupSpec
    witness: list[GDElement]
    sets_examined: int


def cayley_table(spec: GroupSpec) -> np.ndarray:
    """``table[i, j]`` = index of ``element(i) * element(j)``."""
    idx = np.arange(spec.order, dtype=np.int64)
    digits, sign = decode_indices(spec, idx)
    orders = spec.radix_array()
    weights = np.asarray(spec.weights, dtype=np.int64)
    s = sign.astype(np.int64)
    h = (digits[:, None, :] + s[:, None, None] * digits[None, :, :]) % orders
    table = h @ weights if len(orders) else np.zeros((spec.order, spec.order), np.int64)
    table = table + np.where(s[:, None] * s[None, :] < 0, spec.n, 0)
    return np.ascontiguousarray(table, dtype=np.int32)


def atoms(spec: GroupSpec, table: np.ndarray | None = None) -> np.ndarray:
    """``(x, x^-1)`` rows, ``x^-1 = -1`` for involutions, ordered by ``x``."""
    if table is None:
        table = cayley_table(spec)
    inv = np.argmax(table == 0, axis=1)
    rows = []
    for x in range(1, spec.order):
        y = int(inv[x])
        if y == x:
            rows.append((x, -1))
        elif x < y:
            rows.append((x, y))
    return np.asarray(rows, dtype=np.int32).reshape(-1, 2)


def _check_cap(spec: GroupSpec) -> None:
    if spec.order > SEARCH_ORDER_CAP:
        raise SearchCapError(f"exhaustive search is capped at order {SEARCH_ORDER_CAP}, got {spec.order}")


def search_size(spec: GroupSpec, size: int, table=None, atom_rows=None) -> tuple[list[GDElement] | None, int]:
    """First diameter-2 set of exactly ``size`` elements, or None; plus sets examined."""
    _check_cap(spec)
    if table is None:
        table = cayley_table(spec)
    if atom_rows is None:
        atom_rows = atoms(spec, table)
    chosen, examined = kernels.atom_search(table, atom_rows, int(size))
    if chosen is None:
        return None, examined
    S = []
    for a in chosen:
        x, y = atom_rows[a]
        S.append(index_element(spec, int(x)))
        if y >= 0:
            S.append(index_element(spec, int(y)))
    return S, examined


def min_degree_diameter2(spec: GroupSpec, start_at_bound: bool = False,
                         max_size: int | None = None) -> SearchResult | None:
    """Exact minimum degree of a diameter-2 Cayley graph on ``spec``.

    Sizes are tried in ascending order from 1, so every smaller size is
    exhaustively refuted.  ``start_at_bound`` starts at ``min_degree_bound(n)``
    instead, which is faster but takes the lower bound on trust.  Returns None
    when ``max_size`` is given and no set up to that size works.
    """
    start = min_degree_bound(spec.n) if start_at_bound else 1
    stop = spec.order - 1 if max_size is None else min(max_size, spec.order - 1)
    S, size, by_size = _ascending_search(spec, start, stop)
    if S is None:
        return None
    log.debug("%s: d_min=%d after %d sets", spec, size, sum(by_size.values()))
    return SearchResult(spec, size, S, sum(by_size.values()), start, by_size)


def _ascending_search(spec: GroupSpec, start: int, stop: int):
    _check_cap(spec)
    table = cayley_table(spec)
    atom_rows = atoms(spec, table)
    by_size: dict[int, int] = {}
    for size in range(start, stop + 1):
        S, examined = search_size(spec, size, table, atom_rows)
        by_size[size] = examined
        if S is not None:
            return S, size, by_size
    return None, None, by_size


def specs_of_order(order: int, group_class: GroupClass) -> list[GroupSpec]:
    if order % 2:
        return []
    n = order // 2
    if group_class == "dihedral":
        return [GroupSpec.dihedral(n)]
    if group_class == "generalised":
        return generalised_dihedral_specs(n)
    raise ValueError(f"unknown group class {group_class!r}")


def exact_dc(d: int, group_class: GroupClass = "dihedral") -> ExactDC:
    """Largest order of a group in the class with a diameter-2 Cayley graph of degree <= d.

    Orders are scanned downward from the generalised-dihedral upper bound.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if d > EXACT_DC_MAX_DEGREE:
        raise SearchCapError(f"exact DC search is capped at d <= {EXACT_DC_MAX_DEGREE}, got {d}")
    total = 0
    top = dihedral_upper_bound(d)
    for order in range(top - top % 2, 1, -2):
        for spec in specs_of_order(order, group_class):
            S, _, by_size = _ascending_search(spec, 1, min(d, spec.order - 1))
            total += sum(by_size.values())
            if S is not None:
                return ExactDC(d, group_class, order, spec, S, total)
    raise AssertionError("unreachable: order 2 always has a diameter-1 set")


def verify_witness(spec: GroupSpec, S: list[GDElement]) -> bool:
    return not validate_generating_set(spec, S) and is_diameter_two(spec, S)[0]

"""Closed-form bounds on DC(d,2), prime selection and involution padding."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .group_core import (
    GDElement,
    GroupSpec,
    check_element,
    index_element,
)

ASYMPTOTIC_CONSTANT = 1.39
ASYMPTOTIC_EXPONENT = 1.525
MIN_DEGREE = 6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class InfeasibleError(ValueError):
    pass


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin; the first twelve prime bases are exact below 3.18e23."""
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def ceil_sqrt(m: int) -> int:
    return 0 if m <= 0 else math.isqrt(m - 1) + 1


def moore_bound(d: int) -> int:
    return d * d + 1


def dihedral_upper_bound(d: int) -> int:
    """Largest order of a generalised dihedral group with a degree-d diameter-2 Cayley graph."""
    return (d + 1) ** 2 // 2


def min_degree_bound(n: int) -> int:
    """Smallest integer d with d >= 2*sqrt(n) - 1, computed exactly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # d >= 2 sqrt(n) - 1  <=>  (d + 1)^2 >= 4n  for d >= 0
    d = max(0, 2 * math.isqrt(n) - 1)
    while (d + 1) ** 2 < 4 * n:
        d += 1
    while d > 0 and d ** 2 >= 4 * n:
        d -= 1
    return d


def nominal_degree(p: int) -> int:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return 2 * (p + ceil_sqrt(p) - 1)


def best_prime_for_degree(d: int) -> int | None:
    """Largest prime p with nominal_degree(p) <= d."""
    if d < MIN_DEGREE:
        raise ValueError(f"degree must be >= {MIN_DEGREE}, got {d}")
    m = d // 2
    while m >= 2 and nominal_degree(m) > d:
        m -= 1
    while m >= 2 and not is_prime(m):
        m -= 1
    return m if m >= 2 else None


def lower_bound_order(d: int) -> int:
    p = best_prime_for_degree(d)
    return 0 if p is None else 2 * p * (p - 1)


def asymptotic_lower(d: float) -> float:
    return 0.5 * d * d - ASYMPTOTIC_CONSTANT * d ** ASYMPTOTIC_EXPONENT


@dataclass(frozen=True)
class BoundReport:
    d: int
    p: int | None
    nominal_degree_Dp: int | None
    actual_degree: int | None
    constructed_order: int
    moore: int
    dihedral_upper: int
    asymptotic_lower: float
    ratio: float
    degenerate: bool
    asymptotic_holds: bool
    exact_order: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def construction_degree(p: int) -> int:
    """Number of distinct generators of the GF(p) construction (families are disjoint)."""
    from .cyclic_cover import cover_set

    return 1 + (p - 2) + (p - 1) + len(cover_set(p))


def build_report(d: int, exact_small: bool = False) -> BoundReport:
    """Aggregate every bound for degree ``d``.

    ``degenerate`` marks p < 5, where the field construction is not supported;
    with ``exact_small`` the exhaustive search value is attached for those
    degrees when it is within the search cap.
    """
    p = best_prime_for_degree(d)
    order = 0 if p is None else 2 * p * (p - 1)
    lower = asymptotic_lower(d)
    exact = None
    degenerate = p is None or p < 5
    if exact_small and degenerate:
        from .search_oracle import EXACT_DC_MAX_DEGREE, exact_dc

        if d <= EXACT_DC_MAX_DEGREE:
            exact = exact_dc(d, "dihedral").order
    return BoundReport(
        d=d,
        p=p,
        nominal_degree_Dp=None if p is None else nominal_degree(p),
        actual_degree=None if p is None else construction_degree(p),
        constructed_order=order,
        moore=moore_bound(d),
        dihedral_upper=dihedral_upper_bound(d),
        asymptotic_lower=lower,
        ratio=order / (d * d),
        degenerate=degenerate,
        asymptotic_holds=order >= lower,
        exact_order=exact,
    )


def pad_with_involutions(spec: GroupSpec, S: Iterable[GDElement], target_d: int) -> list[GDElement]:
    """Extend ``S`` to ``target_d`` elements with involutions taken in index order.

    Adding generators never lengthens a shortest word, so a diameter-2 set stays
    diameter 2.
    """
    current = list(dict.fromkeys(S))
    for s in current:
        check_element(spec, s)
    if target_d < len(current):
        raise InfeasibleError(f"target degree {target_d} below current degree {len(current)}")
    have = set(current)
    out = list(current)
    need = target_d - len(current)
    for x in iter_involutions(spec):
        if not need:
            break
        if x not in have:
            out.append(x)
            need -= 1
    if need:
        raise InfeasibleError(f"not enough involutions outside S to reach degree {target_d} "
                              f"({need} short)")
    return out


def iter_involutions(spec: GroupSpec) -> Iterator[GDElement]:
    """All involutions in canonical index order, without scanning the whole group."""
    halves = [(0, m // 2) if m % 2 == 0 else (0,) for m in spec.factor_orders]
    for h in itertools.product(*halves):
        if any(h):
            yield GDElement(h, 1)
    for i in range(spec.n, spec.order):
        yield index_element(spec, i)


def asymptotic_failures(d_max: int, d_min: int = MIN_DEGREE) -> list[int]:
    """Degrees in ``[d_min, d_max]`` where the constructed order is below ``asymptotic_lower``.

    The constructed order is constant between consecutive nominal degrees
    while ``asymptotic_lower`` increases (for d >= 3), so each such interval
    fails on a suffix found by bisection.
    """
    d_min = max(d_min, MIN_DEGREE)
    primes = [p for p in range(2, d_max // 2 + 2) if is_prime(p)]
    starts = [nominal_degree(p) for p in primes]
    out: list[int] = []
    for i, p in enumerate(primes):
        lo = max(starts[i], d_min)
        hi = min(starts[i + 1] - 1 if i + 1 < len(primes) else d_max, d_max)
        if lo > hi:
            continue
        order = 2 * p * (p - 1)
        if asymptotic_lower(hi) <= order:
            continue
        a, b = lo, hi  # first failing degree lies in [a, b]
        while a < b:
            mid = (a + b) // 2
            if asymptotic_lower(mid) > order:
                b = mid
            else:
                a = mid + 1
        out.extend(range(a, hi + 1))
    return out

"""Arithmetic in generalised dihedral groups ``H x| C2``.

``H`` is a finite abelian group given as a product of cyclic factors, written
additively; the sign component acts on ``H`` by negation.  Elements carry a
dense index so that sets of elements can be handled as bitsets:

    index = sign_digit * n + mixed_radix(h)

with ``sign_digit`` 0 for ``+1`` and 1 for ``-1`` and the first factor the most
significant digit of ``h``.  The identity therefore has index 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

ENUMERATION_CAP = 1 << 24


class GroupError(ValueError):
    """Base class for group-level errors."""


class InvalidElementError(GroupError):
    pass


class CapExceededError(GroupError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """A generalised dihedral group given by the cyclic factor orders of ``H``.

    An empty ``factor_orders`` is the trivial ``H``; the group is then ``C2``.
    """

    factor_orders: tuple[int, ...]
    n: int = field(init=False)
    order: int = field(init=False)

    def __init__(self, factor_orders: Iterable[int] = ()):
        orders = tuple(int(m) for m in factor_orders)
        for m in orders:
            if m < 2:
                raise GroupError(f"cyclic factor orders must be >= 2, got {m}")
        object.__setattr__(self, "factor_orders", orders)
        object.__setattr__(self, "n", math.prod(orders))
        object.__setattr__(self, "order", 2 * math.prod(orders))

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        """The dihedral group of order ``2n``."""
        if n < 1:
            raise GroupError(f"n must be >= 1, got {n}")
        return cls(() if n == 1 else (n,))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"5,4"`` / ``"5x4"`` / ``""`` into a spec."""
        text = text.strip().replace("x", ",").replace("*", ",")
        if not text or text == "1":
            return cls(())
        return cls(int(t) for t in text.split(",") if t.strip())

    @property
    def identity(self) -> "GDElement":
        return GDElement((0,) * len(self.factor_orders), 1)

    @property
    def weights(self) -> tuple[int, ...]:
        w = []
        acc = 1
        for m in reversed(self.factor_orders):
            w.append(acc)
            acc *= m
        return tuple(reversed(w))

    def radix_array(self) -> np.ndarray:
        return np.asarray(self.factor_orders, dtype=np.int64)

    def __str__(self) -> str:
        if not self.factor_orders:
            return "Z1"
        return "x".join(f"Z{m}" for m in self.factor_orders)


@dataclass(frozen=True, order=True)
class GDElement:
    """Element ``(h, sign)``; ``sign`` is ``+1`` (rotation) or ``-1`` (reflection)."""

    h: tuple[int, ...]
    sign: int

    @property
    def is_reflection(self) -> bool:
        return self.sign == -1

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.h) + (";+1" if self.sign == 1 else ";-1")

    @classmethod
    def from_text(cls, text: str) -> "GDElement":
        try:
            hpart, spart = text.strip().split(";")
        except ValueError:
            raise InvalidElementError(f"malformed element {text!r}") from None
        spart = spart.strip()
        if spart not in ("+1", "1", "-1"):
            raise InvalidElementError(f"bad sign in {text!r}")
        h = tuple(int(t) for t in hpart.split(",") if t.strip() != "")
        return cls(h, -1 if spart == "-1" else 1)

    def __str__(self) -> str:
        return self.to_text()


def element(spec: GroupSpec, h: int | Sequence[int], sign: int = 1) -> GDElement:
    """Build and reduce an element; ints are accepted for single-factor specs."""
    if isinstance(h, (int, np.integer)):
        h = (int(h),)
    if len(h) != len(spec.factor_orders):
        raise InvalidElementError(f"expected {len(spec.factor_orders)} residues, got {len(h)}")
    if sign not in (1, -1):
        raise InvalidElementError(f"sign must be +1 or -1, got {sign}")
    return GDElement(tuple(int(x) % m for x, m in zip(h, spec.factor_orders)), sign)


def check_element(spec: GroupSpec, x: GDElement) -> None:
    if len(x.h) != len(spec.factor_orders):
        raise InvalidElementError(f"{x} has wrong arity for {spec}")
    if x.sign not in (1, -1):
        raise InvalidElementError(f"{x} has sign {x.sign}")
    for r, m in zip(x.h, spec.factor_orders):
        if not 0 <= r < m:
            raise InvalidElementError(f"residue {r} out of range for Z{m} in {x}")


def multiply(spec: GroupSpec, x: GDElement, y: GDElement) -> GDElement:
    """``(h, e)(h', e') = (h + e*h', e*e')``."""
    check_element(spec, x)
    check_element(spec, y)
    e = x.sign
    h = tuple((a + e * b) % m for a, b, m in zip(x.h, y.h, spec.factor_orders))
    return GDElement(h, e * y.sign)


def inverse(spec: GroupSpec, x: GDElement) -> GDElement:
    check_element(spec, x)
    if x.sign == -1:
        return x
    return GDElement(tuple((-a) % m for a, m in zip(x.h, spec.factor_orders)), 1)


def is_identity(x: GDElement) -> bool:
    return x.sign == 1 and not any(x.h)


def is_involution(spec: GroupSpec, x: GDElement) -> bool:
    check_element(spec, x)
    if is_identity(x):
        return False
    if x.sign == -1:
        return True
    return all((2 * a) % m == 0 for a, m in zip(x.h, spec.factor_orders))


def element_index(spec: GroupSpec, x: GDElement) -> int:
    check_element(spec, x)
    idx = sum(a * w for a, w in zip(x.h, spec.weights))
    return idx + (spec.n if x.sign == -1 else 0)


def index_element(spec: GroupSpec, i: int) -> GDElement:
    if not 0 <= i < spec.order:
        raise InvalidElementError(f"index {i} out of range [0, {spec.order})")
    sign = 1
    if i >= spec.n:
        sign = -1
        i -= spec.n
    h = []
    for w in spec.weights:
        q, i = divmod(i, w)
        h.append(q)
    return GDElement(tuple(h), sign)


def iter_elements(spec: GroupSpec, cap: int = ENUMERATION_CAP) -> Iterator[GDElement]:
    if spec.order > cap:
        raise CapExceededError(f"group order {spec.order} exceeds enumeration cap {cap}")
    for i in range(spec.order):
        yield index_element(spec, i)


def enumerate_elements(spec: GroupSpec, cap: int = ENUMERATION_CAP) -> list[GDElement]:
    return list(iter_elements(spec, cap))


def decode_indices(spec: GroupSpec, indices: Sequence[int] | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised index -> (digits[len, k], sign[len]) for the kernels."""
    idx = np.asarray(indices, dtype=np.int64)
    sign = np.where(idx >= spec.n, -1, 1).astype(np.int8)
    rem = idx % spec.n if spec.n > 1 else np.zeros_like(idx)
    digits = np.empty((idx.size, len(spec.factor_orders)), dtype=np.int64)
    for j, w in enumerate(spec.weights):
        digits[:, j], rem = np.divmod(rem, w)
    return digits, sign


def indices_of(spec: GroupSpec, S: Iterable[GDElement]) -> np.ndarray:
    return np.fromiter((element_index(spec, s) for s in S), dtype=np.int64)


def abelian_invariant_factors(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order ``n`` as invariant-factor chains ``d1 | d2 | ...``.

    Cyclic group first, then by number of factors and lexicographically.
    """
    if n < 1:
        raise GroupError(f"n must be >= 1, got {n}")
    out: list[tuple[int, ...]] = []

    def rec(rest: int, chain: tuple[int, ...]) -> None:
        if rest == 1:
            out.append(chain)
            return
        last = chain[-1] if chain else 1
        for d in range(max(2, last), rest + 1):
            if d % last == 0 and rest % d == 0:
                rec(rest // d, chain + (d,))

    rec(n, ())
    return sorted(out, key=lambda g: (len(g), g))


def generalised_dihedral_specs(n: int) -> list[GroupSpec]:
    """Every generalised dihedral group of order ``2n`` up to isomorphism."""
    return [GroupSpec(g) for g in abelian_invariant_factors(n)]

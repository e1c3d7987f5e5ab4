"""Diameter-2 generating set on ``(GF(p)^+ x GF(p)^*) x| C2`` for a prime ``p``.

Elements are triples ``(a, b, c)`` with ``a`` additive mod ``p``, ``b`` a unit
mod ``p`` and ``c = ±1``, multiplied by

    (a, b, c)(α, β, γ) = (a + cα, b β^c, cγ).

The generating set is the union of four families::

    V    = (0, 1, -1)
    A(x) = (0, x, +1)      x in GF(p)* minus {1}
    B(x) = (x, x, -1)      x in GF(p)*
    C(k) = (k, 1, +1)      k in the cyclic cover of Z_p
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import group_core as gc
from .bounds_primes import is_prime, nominal_degree
from .cyclic_cover import CyclicCover, cover_set, decompose_residue

MIN_PRIME = 5
DLOG_CAP = 10 ** 6


class FieldConstructionError(ValueError):
    pass


class FieldTriple(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c:+d}"


class LabelledGenerator(NamedTuple):
    label: str  # "V", "A", "B", "C" or "P" (padding)
    param: int | None
    element: FieldTriple

    @property
    def name(self) -> str:
        return self.label if self.param is None else f"{self.label}({self.param})"


@dataclass(frozen=True)
class FieldGenSet:
    p: int
    generators: tuple[LabelledGenerator, ...]
    cover: CyclicCover

    @property
    def nominal_degree(self) -> int:
        return nominal_degree(self.p)

    @property
    def actual_degree(self) -> int:
        return len({g.element for g in self.generators})

    @property
    def spec(self) -> gc.GroupSpec:
        return gc.GroupSpec((self.p, self.p - 1))

    @property
    def order(self) -> int:
        return 2 * self.p * (self.p - 1)

    def family(self, label: str) -> list[LabelledGenerator]:
        return [g for g in self.generators if g.label == label]

    @functools.cached_property
    def _by_name(self) -> dict[tuple[str, int | None], LabelledGenerator]:
        return {(g.label, g.param): g for g in self.generators}

    def lookup(self, label: str, param: int | None = None) -> LabelledGenerator:
        try:
            return self._by_name[label, param]
        except KeyError:
            raise KeyError(f"no generator {label}({param})") from None


def check_triple(p: int, t: FieldTriple) -> None:
    if not 0 <= t.a < p:
        raise FieldConstructionError(f"a={t.a} out of range mod {p}")
    if not 0 < t.b < p:
        raise FieldConstructionError(f"b={t.b} is not in GF({p})*")
    if t.c not in (1, -1):
        raise FieldConstructionError(f"c={t.c} must be ±1")


def triple_multiply(p: int, x: FieldTriple, y: FieldTriple) -> FieldTriple:
    check_triple(p, x)
    check_triple(p, y)
    b = x.b * (y.b if x.c == 1 else pow(y.b, -1, p)) % p
    return FieldTriple((x.a + x.c * y.a) % p, b, x.c * y.c)


def triple_inverse(p: int, x: FieldTriple) -> FieldTriple:
    check_triple(p, x)
    if x.c == -1:
        return x
    return FieldTriple(-x.a % p, pow(x.b, -1, p), 1)


def identity_triple() -> FieldTriple:
    return FieldTriple(0, 1, 1)


def iter_triples(p: int) -> Iterator[FieldTriple]:
    for c in (1, -1):
        for a in range(p):
            for b in range(1, p):
                yield FieldTriple(a, b, c)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise FieldConstructionError(f"{p} is not prime")
    if p < MIN_PRIME:
        raise FieldConstructionError(f"p={p} unsupported; the construction needs p >= {MIN_PRIME}")


def build_generating_set(p: int) -> FieldGenSet:
    _require_prime(p)
    cover = cover_set(p)
    gens = [LabelledGenerator("V", None, FieldTriple(0, 1, -1))]
    gens += [LabelledGenerator("A", x, FieldTriple(0, x, 1)) for x in range(2, p)]
    gens += [LabelledGenerator("B", x, FieldTriple(x, x, -1)) for x in range(1, p)]
    gens += [LabelledGenerator("C", k, FieldTriple(k, 1, 1)) for k in cover.sorted_residues()]
    return FieldGenSet(p, tuple(gens), cover)


def decompose(p: int, target: FieldTriple, S: FieldGenSet) -> list[LabelledGenerator]:
    """Word of one or two generators whose product is ``target``, following the case split."""
    check_triple(p, target)
    if S.p != p:
        raise FieldConstructionError(f"generating set is for p={S.p}, not {p}")
    x, y, c = target
    if target == identity_triple():
        raise FieldConstructionError("identity has the empty word; handle it separately")
    inv = functools.partial(pow, exp=-1, mod=p)
    if c == -1:
        if x != 0 and x != y:
            return [S.lookup("A", y * inv(x) % p), S.lookup("B", x)]
        if x != 0:
            return [S.lookup("B", x)]
        if y != 1:
            return [S.lookup("A", y), S.lookup("V")]
        return [S.lookup("V")]
    if y != 1 and x != 0:
        w = inv(y - 1)
        return [S.lookup("B", y * x * w % p), S.lookup("B", x * w % p)]
    if y != 1:
        return [S.lookup("A", y)]
    return [S.lookup("C", k) for k in decompose_residue(S.cover, x)]


def word_product(p: int, word: list[LabelledGenerator]) -> FieldTriple:
    out = identity_triple()
    for g in word:
        out = triple_multiply(p, out, g.element)
    return out


def find_primitive_root(p: int) -> int:
    if not is_prime(p):
        raise FieldConstructionError(f"{p} is not prime")
    if p == 2:
        return 1
    phi = p - 1
    factors = _prime_factors(phi)
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def _prime_factors(m: int) -> list[int]:
    out = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


@functools.lru_cache(maxsize=64)
def dlog_table(p: int, g: int) -> tuple[int, ...]:
    """``table[b] = log_g(b)`` for ``b`` in ``1..p-1`` (``table[0]`` unused)."""
    if p > DLOG_CAP:
        raise FieldConstructionError(f"p={p} exceeds discrete-log table cap {DLOG_CAP}")
    table = [-1] * p
    x = 1
    for e in range(p - 1):
        if table[x] != -1:
            raise FieldConstructionError(f"{g} is not a primitive root mod {p}")
        table[x] = e
        x = x * g % p
    return tuple(table)


def to_gd_element(p: int, t: FieldTriple, g: int | None = None) -> gc.GDElement:
    """Image of ``t`` in the generalised dihedral group over ``Z_p x Z_(p-1)``."""
    check_triple(p, t)
    g = find_primitive_root(p) if g is None else g
    return gc.GDElement((t.a, dlog_table(p, g)[t.b]), t.c)


def from_gd_element(p: int, x: gc.GDElement, g: int | None = None) -> FieldTriple:
    g = find_primitive_root(p) if g is None else g
    dlog_table(p, g)  # validates g
    return FieldTriple(x.h[0], pow(g, x.h[1], p), x.sign)


def transported_set(S: FieldGenSet, g: int | None = None) -> list[gc.GDElement]:
    return [to_gd_element(S.p, gen.element, g) for gen in S.generators]


# --- generating-set files -------------------------------------------------

def format_genset(p: int, generators: list[LabelledGenerator]) -> str:
    lines = [f"p={p}"]
    lines += [f"{gen.name} {gen.element}" for gen in generators]
    return "\n".join(lines) + "\n"


def parse_genset(text: str) -> tuple[int, list[LabelledGenerator]]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("p="):
        raise FieldConstructionError("generating-set file must start with 'p=<prime>'")
    p = int(lines[0][2:])
    gens = []
    for ln in lines[1:]:
        try:
            name, a, b, c = ln.split()
        except ValueError:
            raise FieldConstructionError(f"malformed generator line {ln!r}") from None
        label, param = name, None
        if "(" in name:
            label, rest = name.split("(", 1)
            param = int(rest.rstrip(")"))
        if label not in ("V", "A", "B", "C", "P"):
            raise FieldConstructionError(f"unknown generator label {label!r}")
        t = FieldTriple(int(a), int(b), int(c))
        check_triple(p, t)
        gens.append(LabelledGenerator(label, param, t))
    return p, gens

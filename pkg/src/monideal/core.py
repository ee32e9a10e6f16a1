"""Monomials and monomial ideals in k[x_1, ..., x_d].

A monomial is a plain tuple of nonnegative exponents.  A ``MonomialIdeal``
always stores its minimal generating set, sorted in descending lexicographic
order on exponent vectors, so two equal ideals compare equal as values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch, DomainError, ParseError
from .unipoly import is_prime

Monomial = Tuple[int, ...]

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")

# Test-only hook: when set, applied to every minimalized generator tuple.
_fault_hook: Optional[Callable[[tuple], tuple]] = None


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over a field: ordered variable names plus characteristic."""

    variable_names: Tuple[str, ...]
    characteristic: int = 0

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ParseError("a ring needs at least one variable")
        for n in names:
            if not _NAME.fullmatch(n):
                raise ParseError(f"bad variable name {n!r}")
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate variable names in {names}")
        if self.characteristic and not is_prime(self.characteristic):
            raise DomainError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    @classmethod
    def from_names(cls, names: str | Sequence[str], characteristic: int = 0) -> "Ring":
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        return cls(tuple(names), characteristic)

    @property
    def dim(self) -> int:
        return len(self.variable_names)

    def one(self) -> Monomial:
        return (0,) * self.dim

    def var(self, i: int, power: int = 1) -> Monomial:
        e = [0] * self.dim
        e[i] = power
        return tuple(e)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    # text I/O

    def parse_monomial(self, text: str) -> Monomial:
        return _parse_gen(self, text.strip())

    def parse_ideal(self, text: str) -> "MonomialIdeal":
        return parse_ideal(self, text)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, a in zip(self.variable_names, m):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"


# exponent-vector arithmetic


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b): the part of a not covered by b."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, a in enumerate(m) if a > 0)


def _check_dims(d: int, monomials: Iterable[Monomial]) -> None:
    for m in monomials:
        if len(m) != d:
            raise DimensionMismatch(f"monomial {m} does not live in a ring of dimension {d}")
        if any(a < 0 for a in m):
            raise ValueError(f"negative exponent in {m}")


def _minimal(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    kept: list = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    result = tuple(sorted(kept, reverse=True))
    if _fault_hook is not None:
        result = tuple(_fault_hook(result))
    return result


@dataclass(frozen=True)
class MonomialIdeal:
    ring: Ring
    gens: Tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, ring: Ring, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(a) for a in g) for g in gens]
        _check_dims(ring.dim, gens)
        return cls(ring, _minimal(gens))

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, (ring.one(),))

    @classmethod
    def variables(cls, ring: Ring, indices: Iterable[int]) -> "MonomialIdeal":
        return cls.from_generators(ring, [ring.var(i) for i in indices])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (self.ring.one(),)

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return contains_ideal(other, self)

    def __ge__(self, other: "MonomialIdeal") -> bool:
        return contains_ideal(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(self.ring.format_monomial(g) for g in self.gens)

    def parenthesized(self) -> str:
        return f"({self})"

    def lcm(self) -> Monomial:
        out = self.ring.one()
        for g in self.gens:
            out = mono_lcm(out, g)
        return out


def _same_ring(*ideals: MonomialIdeal) -> Ring:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring.variable_names != ring.variable_names:
            raise DimensionMismatch(
                f"ideals live in different rings: {ring.variable_names} vs "
                f"{other.ring.variable_names}")
    return ring


def _check_mono(I: MonomialIdeal, m: Sequence[int]) -> Monomial:
    m = tuple(m)
    _check_dims(I.ring.dim, [m])
    return m


def minimalize(ring: Ring, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Canonical minimal form of the ideal generated by ``gens``."""
    return MonomialIdeal.from_generators(ring, gens)


def contains_monomial(I: MonomialIdeal, m: Sequence[int]) -> bool:
    m = _check_mono(I, m)
    return any(divides(g, m) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return all(any(divides(g, h) for g in I.gens) for h in J.gens)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(*ideals)
    return MonomialIdeal.from_generators(ring, [g for I in ideals for g in I.gens])


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal.from_generators(
        ring, [mono_mul(g, h) for g in I.gens for h in J.gens])


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n; power(I, 0) is the unit ideal."""
    if n < 0:
        raise ValueError("power needs n >= 0")
    result = MonomialIdeal.unit(I.ring)
    for _ in range(n):
        result = product(result, I)
    return result


def power_by_multisets(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n straight from the definition: all products of n generators."""
    gens = []
    for combo in combinations_with_replacement(I.gens, n):
        m = I.ring.one()
        for g in combo:
            m = mono_mul(m, g)
        gens.append(m)
    return MonomialIdeal.from_generators(I.ring, gens)


def frobenius_power(I: MonomialIdeal, q: int) -> MonomialIdeal:
    if q < 1:
        raise ValueError("Frobenius power needs q >= 1")
    return MonomialIdeal.from_generators(I.ring, [tuple(q * a for a in g) for g in I.gens])


def colon(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """I : m, generated by g / gcd(g, m)."""
    m = _check_mono(I, m)
    return MonomialIdeal.from_generators(I.ring, [mono_quotient(g, m) for g in I.gens])


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J.  By convention I : 0 is the unit ideal."""
    ring = _same_ring(I, J)
    result = MonomialIdeal.unit(ring)
    for g in J.gens:
        result = intersect(result, colon(I, g))
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal.from_generators(
        ring, [mono_lcm(g, h) for g in I.gens for h in J.gens])


def intersect_all(ring: Ring, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the unit ideal."""
    result = MonomialIdeal.unit(ring)
    for J in ideals:
        result = intersect(result, J)
    return result


def saturate(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """I : u^infinity."""
    u = _check_mono(I, u)
    current = I
    while True:
        nxt = colon(current, u)
        if nxt == current:
            return current
        current = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_generators(
        I.ring, [tuple(min(a, 1) for a in g) for g in I.gens])


def max_exponent(ideals: Iterable[MonomialIdeal]) -> int:
    return max((a for I in ideals for g in I.gens for a in g), default=0)


def radical_variables(I: MonomialIdeal) -> frozenset:
    """Indices i with x_i in the radical of I, i.e. some generator is a power of x_i."""
    found = set()
    for g in I.gens:
        supp = support(g)
        if not supp:
            return frozenset(range(I.ring.dim))
        if len(supp) == 1:
            found.add(supp[0])
    return frozenset(found)


def monomials_of_degree(d: int, deg: int):
    """All exponent vectors of length d and total degree deg."""
    if d == 1:
        yield (deg,)
        return
    for a in range(deg, -1, -1):
        for rest in monomials_of_degree(d - 1, deg - a):
            yield (a,) + rest


def max_ideal_power(ring: Ring, n: int, indices: Optional[Iterable[int]] = None) -> MonomialIdeal:
    """(x_i : i in indices)^n, all variables by default."""
    idx = sorted(range(ring.dim) if indices is None else indices)
    if not idx:
        return MonomialIdeal.zero(ring) if n > 0 else MonomialIdeal.unit(ring)
    gens = []
    for e in monomials_of_degree(len(idx), n):
        m = [0] * ring.dim
        for i, a in zip(idx, e):
            m[i] = a
        gens.append(tuple(m))
    return MonomialIdeal.from_generators(ring, gens)


# text grammar:  ideal := gen (',' gen)* ; gen := term ('*' term)* ; term := var ('^' uint)?

_TERM = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def _parse_gen(ring: Ring, text: str) -> Monomial:
    text = re.sub(r"\s+", "", text)
    if text == "1":
        return ring.one()
    if not text:
        raise ParseError("empty generator")
    e = [0] * ring.dim
    for term in text.split("*"):
        match = _TERM.match(term)
        if not match:
            raise ParseError(f"cannot parse term {term!r}")
        i = ring.index(match.group(1))
        e[i] += int(match.group(2)) if match.group(2) is not None else 1
    return tuple(e)


def parse_ideal(ring: Ring, text: str) -> MonomialIdeal:
    body = re.sub(r"\s+", "", text)
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if body == "0":
        return MonomialIdeal.zero(ring)
    if not body:
        raise ParseError("empty ideal text; spell the zero ideal as 0")
    return MonomialIdeal.from_generators(ring, [_parse_gen(ring, g) for g in body.split(",")])

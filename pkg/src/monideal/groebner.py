"""Multivariate polynomials over F_p and Buchberger's algorithm.

Just enough machinery for ideal membership, intersection, colon and
saturation in small rings like F_p[t, x, y].
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import unipoly
from .core import Monomial, divides, mono_lcm, mono_mul
from .errors import DomainError, EngineError, ParseError, ResourceLimitError

DEFAULT_SPAIR_BUDGET = int(os.environ.get("MONIDEAL_SPAIR_BUDGET", str(10 ** 6)))


class PolyRing:
    """F_p[names] with a term order.

    ``order`` is "grevlex" or "elim"; the elimination order compares the
    first ``block`` variables by grevlex first and breaks ties by grevlex on
    the remaining variables.
    """

    def __init__(self, names: Sequence[str], p: int, order: str = "grevlex", block: int = 0):
        if not unipoly.is_prime(p):
            raise DomainError(f"{p} is not prime")
        if order not in ("grevlex", "elim"):
            raise ValueError(f"unknown term order {order!r}")
        self.names = tuple(names)
        self.p = p
        self.order = order
        self.block = block
        self.key = lru_cache(maxsize=None)(self._key)

    def _key(self, e: Monomial):
        if self.order == "grevlex":
            return _grevlex(e)
        return _grevlex(e[:self.block]) + _grevlex(e[self.block:])

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.p == other.p and self.order == other.order
                and self.block == other.block)

    def __hash__(self):
        return hash((self.names, self.p, self.order, self.block))

    def __repr__(self):
        return f"PolyRing({self.names}, p={self.p}, order={self.order!r})"

    def poly(self, terms: Dict[Monomial, int]) -> "Poly":
        return Poly(self, terms)

    def const(self, c: int) -> "Poly":
        return Poly(self, {(0,) * self.nvars: c})

    def one(self) -> "Poly":
        return self.const(1)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def var(self, name: str, power: int = 1) -> "Poly":
        e = [0] * self.nvars
        e[self.names.index(name)] = power
        return Poly(self, {tuple(e): 1})

    def monomial(self, e: Sequence[int], c: int = 1) -> "Poly":
        return Poly(self, {tuple(e): c})

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


def _grevlex(e: Monomial):
    return (sum(e),) + tuple(-a for a in reversed(e))


class Poly:
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, int]):
        p = ring.p
        self.ring = ring
        self.terms = {e: c % p for e, c in terms.items() if c % p}
        self._lead = None

    # leading data

    def lead(self) -> Tuple[Monomial, int]:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            e = max(self.terms, key=self.ring.key)
            self._lead = (e, self.terms[e])
        return self._lead

    def lm(self) -> Monomial:
        return self.lead()[0]

    def lc(self) -> int:
        return self.lead()[1]

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(pow(self.lc(), -1, self.ring.p))

    def scale(self, c: int) -> "Poly":
        return Poly(self.ring, {e: a * c for e, a in self.terms.items()})

    def shift(self, m: Monomial, c: int = 1) -> "Poly":
        """c * x^m * self."""
        return Poly(self.ring, {mono_mul(e, m): a * c for e, a in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> List[int]:
        return sorted({i for e in self.terms for i, a in enumerate(e) if a})

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise DomainError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Monomial, int] = {}
        p = self.ring.p
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if a == 1 else f"{n}^{a}"
                            for n, a in zip(self.ring.names, e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_ring(self, ring: PolyRing, positions: Sequence[int]) -> "Poly":
        """Re-embed: variable j of self becomes variable positions[j] of ``ring``."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for j, a in enumerate(e):
                f[positions[j]] = a
            out[tuple(f)] = c
        return Poly(ring, out)


_SIGNED_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """poly := term (('+'|'-') term)* ; term := coeff? monomial? (factors joined by '*')."""
    body = re.sub(r"\s+", "", text)
    if not body:
        raise ParseError("empty polynomial")
    pos = 0
    result: Dict[Monomial, int] = {}
    for match in _SIGNED_TERM.finditer(body):
        if match.start() != pos or (pos and not match.group(1)):
            raise ParseError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = 1
        e = [0] * ring.nvars
        for factor in match.group(2).split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", factor)
            if not m or m.group(1) not in ring.names:
                raise ParseError(f"cannot parse factor {factor!r}")
            e[ring.names.index(m.group(1))] += int(m.group(2) or 1)
        e = tuple(e)
        result[e] = result.get(e, 0) + sign * coeff
    if pos != len(body):
        raise ParseError(f"cannot parse polynomial {text!r}")
    return Poly(ring, result)


# reduction


def divide(f: Poly, G: Sequence[Poly]) -> Tuple[List[Poly], Poly]:
    """Multivariate division: f = sum(q_i * G[i]) + r with r fully reduced."""
    ring = f.ring
    p = ring.p
    leads = [g.lead() for g in G]
    invs = [pow(c, -1, p) for _, c in leads]
    quotients: List[Dict[Monomial, int]] = [{} for _ in G]
    work = dict(f.terms)
    rem: Dict[Monomial, int] = {}
    key = ring.key
    while work:
        e = max(work, key=key)
        c = work[e]
        for i, (lm, _) in enumerate(leads):
            if divides(lm, e):
                shift = tuple(a - b for a, b in zip(e, lm))
                factor = c * invs[i] % p
                quotients[i][shift] = (quotients[i].get(shift, 0) + factor) % p
                for ge, gc in G[i].terms.items():
                    m = mono_mul(ge, shift)
                    v = (work.get(m, 0) - factor * gc) % p
                    if v:
                        work[m] = v
                    else:
                        work.pop(m, None)
                break
        else:
            rem[e] = c
            del work[e]
    return [Poly(ring, q) for q in quotients], Poly(ring, rem)


def normal_form(f: Poly, G: Sequence[Poly]) -> Poly:
    if not G:
        return f
    return divide(f, G)[1]


def spoly(f: Poly, g: Poly) -> Poly:
    (ef, cf), (eg, cg) = f.lead(), g.lead()
    m = mono_lcm(ef, eg)
    p = f.ring.p
    a = f.shift(tuple(x - y for x, y in zip(m, ef)), pow(cf, -1, p))
    b = g.shift(tuple(x - y for x, y in zip(m, eg)), pow(cg, -1, p))
    return a - b


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def groebner_basis(gens: Iterable[Poly], budget: Optional[int] = None) -> List[Poly]:
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    budget = DEFAULT_SPAIR_BUDGET if budget is None else budget
    G: List[Poly] = []
    for g in gens:
        h = normal_form(g, G).monic()
        if not h.is_zero():
            G.append(h)
    if any(g.is_constant() for g in G):
        return [ring.one()]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: ring.key(mono_lcm(G[ij[0]].lm(), G[ij[1]].lm())) + ij)
        pairs.discard((i, j))
        li, lj = G[i].lm(), G[j].lm()
        if _coprime(li, lj):
            continue  # first criterion
        lcm = mono_lcm(li, lj)
        if any(k not in (i, j) and divides(G[k].lm(), lcm)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue  # second (chain) criterion
        processed += 1
        if processed > budget:
            raise ResourceLimitError(
                f"S-pair budget {budget} exhausted", processed=processed,
                basis_size=len(G), pending=len(pairs))
        h = normal_form(spoly(G[i], G[j]), G)
        if h.is_zero():
            continue
        h = h.monic()
        if h.is_constant():
            return [ring.one()]
        G.append(h)
        n = len(G) - 1
        pairs.update((k, n) for k in range(n))
    return _reduce_basis(G)


def _reduce_basis(G: List[Poly]) -> List[Poly]:
    minimal = []
    for i, g in enumerate(G):
        lm = g.lm()
        if any(divides(h.lm(), lm) and (h.lm() != lm or j < i)
               for j, h in enumerate(G) if j != i):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: g.ring.key(g.lm()), reverse=True)
    return reduced


def is_groebner(G: Sequence[Poly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    return all(normal_form(spoly(G[i], G[j]), G).is_zero()
               for j in range(len(G)) for i in range(j))


class IdealFp:
    """Ideal of a PolyRing given by generators, with a cached reduced basis."""

    def __init__(self, ring: PolyRing, gens: Iterable[Poly], budget: Optional[int] = None):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        for g in self.gens:
            if g.ring != ring:
                raise DomainError("generator from a different ring")
        self.budget = budget
        self._basis: Optional[List[Poly]] = None

    def basis(self) -> List[Poly]:
        if self._basis is None:
            self._basis = groebner_basis(self.gens, self.budget)
        return self._basis

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.basis())

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    __contains__ = contains

    def is_unit(self) -> bool:
        return self.basis() == [self.ring.one()]

    def __le__(self, other: "IdealFp") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, IdealFp) and self.ring == other.ring and \
            [g.terms for g in self.basis()] == [g.terms for g in other.basis()]

    def __hash__(self):
        return hash(tuple(frozenset(g.terms.items()) for g in self.basis()))

    def __add__(self, other) -> "IdealFp":
        extra = other.gens if isinstance(other, IdealFp) else list(other)
        return IdealFp(self.ring, self.gens + list(extra), self.budget)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")" if self.gens else "(0)"


def membership(f: Poly, I: IdealFp) -> bool:
    return I.contains(f)


def _elimination_ring(ring: PolyRing) -> PolyRing:
    name = "w"
    while name in ring.names:
        name += "_"
    return PolyRing((name,) + ring.names, ring.p, order="elim", block=1)


def intersect_fp(I: IdealFp, J: IdealFp) -> IdealFp:
    """I cap J by eliminating w from w*I + (1 - w)*J."""
    ring = I.ring
    if J.ring != ring:
        raise DomainError("ideals from different rings")
    big = _elimination_ring(ring)
    lift = list(range(1, big.nvars))
    w = big.var(big.names[0])
    gens = [w * g.to_ring(big, lift) for g in I.gens]
    gens += [(1 - w) * h.to_ring(big, lift) for h in J.gens]
    G = groebner_basis(gens, I.budget)
    out = []
    for g in G:
        if g.degree_in(big.names[0]) == 0:
            out.append(Poly(ring, {e[1:]: c for e, c in g.terms.items()}))
    return IdealFp(ring, out, I.budget)


def exact_quotient(f: Poly, g: Poly) -> Poly:
    q, r = divide(f, [g])
    if not r.is_zero():
        raise EngineError(f"{g} does not divide {f}")
    return q[0]


def colon_fp(I: IdealFp, f: Poly) -> IdealFp:
    """I : f, as (I cap (f)) / f."""
    ring = I.ring
    if f.is_zero():
        return IdealFp(ring, [ring.one()], I.budget)
    meet = intersect_fp(I, IdealFp(ring, [f], I.budget))
    return IdealFp(ring, [exact_quotient(g, f) for g in meet.basis()], I.budget)


def saturate_fp(I: IdealFp, f: Poly) -> Tuple[IdealFp, int]:
    """(I : f^infinity, number of colon steps that changed the ideal)."""
    current = I
    steps = 0
    while True:
        nxt = colon_fp(current, f)
        if nxt == current:
            return current, steps
        current = nxt
        steps += 1


def factor_univariate(f: Poly, seed: Optional[int] = 0) -> Tuple[int, List[Tuple[Poly, int]]]:
    """Leading coefficient and monic irreducible factors with multiplicities."""
    vs = f.variables()
    if f.is_zero():
        raise DomainError("cannot factor zero")
    if len(vs) > 1:
        raise DomainError(f"{f} is not univariate")
    ring = f.ring
    if not vs:
        return f.lc(), []
    v = vs[0]
    dense = [0] * (f.degree_in(ring.names[v]) + 1)
    for e, c in f.terms.items():
        dense[e[v]] = c
    lead, factors = unipoly.factor(dense, ring.p, seed)
    name = ring.names[v]
    out = []
    for g, m in factors:
        poly = ring.zero()
        for k, c in enumerate(g):
            if c:
                poly = poly + ring.var(name, k).scale(c) if k else poly + ring.const(c)
        out.append((poly, m))
    return lead, out


def is_squarefree_univariate(f: Poly) -> bool:
    vs = f.variables()
    if len(vs) != 1:
        return len(vs) == 0
    name = f.ring.names[vs[0]]
    dense = [0] * (f.degree_in(name) + 1)
    for e, c in f.terms.items():
        dense[e[vs[0]]] = c
    p = f.ring.p
    return unipoly.deg(unipoly.gcd(dense, unipoly.derivative(dense, p), p)) == 0

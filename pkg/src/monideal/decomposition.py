"""Irreducible and primary decomposition of monomial ideals.

Also home to the linear-growth verifiers for ordinary and Frobenius powers
and to tight closure in monomial quotient rings S/J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .core import (
    Monomial,
    MonomialIdeal,
    Ring,
    frobenius_power,
    ideal_sum,
    intersect_all,
    max_exponent,
    power,
    radical,
    saturate,
    support,
)
from .errors import DomainError, EngineError


@dataclass(frozen=True)
class IrreducibleComponent:
    """The irreducible ideal J_m = (x_i^{m_i} : m_i > 0)."""

    ring: Ring
    index_monomial: Monomial

    def __post_init__(self):
        if len(self.index_monomial) != self.ring.dim:
            raise DomainError("index monomial has the wrong length")
        if not any(self.index_monomial):
            raise DomainError("J_1 would be the unit ideal; not an irreducible component")

    @property
    def support(self) -> Tuple[int, ...]:
        return support(self.index_monomial)

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(
            self.ring, [self.ring.var(i, self.index_monomial[i]) for i in self.support])

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """J_self contains J_other."""
        a, b = self.index_monomial, other.index_monomial
        return all(a[i] and a[i] <= b[i] for i in other.support)

    def __str__(self):
        return self.ideal.parenthesized()


@dataclass(frozen=True)
class IrreducibleDecomposition:
    source: MonomialIdeal
    components: Tuple[IrreducibleComponent, ...]

    def intersection(self) -> MonomialIdeal:
        return intersect_all(self.source.ring, (c.ideal for c in self.components))

    def __str__(self):
        return " ∩ ".join(str(c) for c in self.components)


@dataclass(frozen=True)
class PrimaryComponent:
    radical_prime: Tuple[int, ...]
    ideal: MonomialIdeal
    components: Tuple[IrreducibleComponent, ...]

    def prime(self) -> MonomialIdeal:
        return MonomialIdeal.variables(self.ideal.ring, self.radical_prime)

    def radical_names(self) -> List[str]:
        names = self.ideal.ring.variable_names
        return [names[i] for i in self.radical_prime]


def _component_key(c: IrreducibleComponent):
    return (len(c.support), tuple(-a for a in c.index_monomial))


def _split_leaves(ring: Ring, gens: Tuple[Monomial, ...], memo: dict) -> frozenset:
    if gens in memo:
        return memo[gens]
    mixed = next((g for g in gens if len(support(g)) > 1), None)
    if mixed is None:
        # every generator is a pure power of a distinct variable
        index = tuple(map(sum, zip(*gens)))
        result = frozenset([index])
    else:
        i = support(mixed)[0]
        u = ring.var(i, mixed[i])
        v = mixed[:i] + (0,) + mixed[i + 1:]
        left = MonomialIdeal.from_generators(ring, gens + (u,)).gens
        right = MonomialIdeal.from_generators(ring, gens + (v,)).gens
        result = _split_leaves(ring, left, memo) | _split_leaves(ring, right, memo)
    memo[gens] = result
    return result


def _prune(indices) -> list:
    # An irreducible monomial ideal contains an intersection only if it
    # contains one of the intersected ideals, so pairwise tests suffice.
    comps = sorted(set(indices), key=lambda m: (sum(1 for a in m if a), m))
    kept = []
    for c in comps:
        if not any(_contains(c, o) for o in kept):
            kept = [o for o in kept if not _contains(o, c)]
            kept.append(c)
    return kept


def _contains(a: Monomial, b: Monomial) -> bool:
    """J_a contains J_b."""
    return all(a[i] and a[i] <= bi for i, bi in enumerate(b) if bi)


def _incremental_indices(I: MonomialIdeal) -> list:
    gens = sorted(I.gens, key=lambda g: (sum(g), g))
    first = gens[0]
    comps = [I.ring.var(i, first[i]) for i in support(first)]
    for g in gens[1:]:
        supp = support(g)
        out = []
        for c in comps:
            if any(c[i] and g[i] >= c[i] for i in supp):
                out.append(c)
                continue
            # g is outside J_c: J_c + (g) splits over the variables of g
            for i in supp:
                out.append(c[:i] + (g[i],) + c[i + 1:])
        comps = _prune(out)
    return comps


def irreducible_decompose(I: MonomialIdeal) -> IrreducibleDecomposition:
    """Unique irredundant decomposition of I into irreducible monomial ideals.

    Generators are added one at a time: each component J_c missing a new
    generator g = prod x_i^{g_i} is replaced by the ideals J_c + (x_i^{g_i}),
    then redundant components are dropped.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("irreducible decomposition needs a proper nonzero ideal")
    kept = [IrreducibleComponent(I.ring, m) for m in _incremental_indices(I)]
    kept.sort(key=_component_key)
    return IrreducibleDecomposition(I, tuple(kept))


def decompose_by_splitting(I: MonomialIdeal) -> IrreducibleDecomposition:
    """Reference decomposition by recursive generator splitting.

    Splits the first mixed generator g = x_i^a * v into I + (x_i^a) and
    I + (v) until only pure powers remain.  Exponential in the worst case;
    meant for cross-checking small inputs.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("irreducible decomposition needs a proper nonzero ideal")
    leaves = _prune(_split_leaves(I.ring, I.gens, {}))
    kept = sorted((IrreducibleComponent(I.ring, m) for m in leaves), key=_component_key)
    return IrreducibleDecomposition(I, tuple(kept))


def generator_component_exponents(I: MonomialIdeal) -> Tuple[int, int]:
    """(largest exponent in the index monomials, largest exponent among minimal generators).

    The two always agree; a disagreement raises ``EngineError``.
    """
    dec = irreducible_decompose(I)
    l = max(a for c in dec.components for a in c.index_monomial)
    k = max_exponent([I])
    if l != k:
        raise EngineError(f"index exponent {l} != generator exponent {k} for ({I})")
    return l, k


def primary_decompose(I: MonomialIdeal) -> List[PrimaryComponent]:
    dec = irreducible_decompose(I)
    groups: dict = {}
    for c in dec.components:
        groups.setdefault(c.support, []).append(c)
    out = []
    for supp in sorted(groups, key=lambda s: (len(s), s)):
        pieces = tuple(groups[supp])
        ideal = intersect_all(I.ring, (c.ideal for c in pieces))
        out.append(PrimaryComponent(supp, ideal, pieces))
    return out


def exponent_index(Q: PrimaryComponent) -> int:
    """Least N with (radical Q)^N inside Q."""
    return max(sum(c.index_monomial[i] - 1 for i in c.support) + 1 for c in Q.components)


# linear growth of powers


@dataclass
class ComponentReport:
    component: PrimaryComponent
    exponent_index: int

    def to_dict(self) -> dict:
        ring = self.component.ideal.ring
        return {
            "index_monomials": [ring.format_monomial(c.index_monomial)
                                for c in self.component.components],
            "radical": self.component.radical_names(),
            "ideal": str(self.component.ideal),
            "exponent_index": self.exponent_index,
        }


@dataclass
class GrowthCertificate:
    ideal_described: MonomialIdeal
    mode: str  # "ordinary" or "frobenius"
    n_or_q: int
    l: int
    d: int
    bound: int
    per_component: List[ComponentReport]
    strict: bool = False
    violations: List[ComponentReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "kind": "growth-certificate",
            "mode": self.mode,
            "ideal": str(self.ideal_described),
            "ring": list(self.ideal_described.ring.variable_names),
            "n_or_q": self.n_or_q,
            "l": self.l,
            "d": self.d,
            "bound": self.bound,
            "strict": self.strict,
            "verified": self.ok,
            "components": [r.to_dict() for r in self.per_component],
            "violations": [r.to_dict() for r in self.violations],
        }

    def render(self) -> str:
        head = "I^n + J" if self.mode == "ordinary" else "I^[q] + J"
        key = "n" if self.mode == "ordinary" else "q"
        lines = [
            f"{head} = ({self.ideal_described})",
            f"{key}={self.n_or_q} l={self.l} d={self.d} bound={self.bound}",
        ]
        for r in self.per_component:
            names = ",".join(r.component.radical_names())
            mark = "ok" if r.exponent_index <= self.bound else "VIOLATION"
            lines.append(f"  ({r.component.ideal})  radical=({names})  "
                         f"exponent_index={r.exponent_index}  {mark}")
        lines.append("verified" if self.ok else "COUNTEREXAMPLE")
        return "\n".join(lines)


def _certify(described, mode, k, l, strict):
    if described.is_zero or described.is_unit:
        raise DomainError(f"{mode} growth check needs a proper nonzero ideal, got ({described})")
    d = described.ring.dim
    bound = k * l * d
    reports = [ComponentReport(Q, exponent_index(Q)) for Q in primary_decompose(described)]
    cert = GrowthCertificate(described, mode, k, l, d, bound, reports, strict)
    cert.violations = [r for r in reports if r.exponent_index > bound]
    return cert


def verify_growth_ordinary(I: MonomialIdeal, J: MonomialIdeal, n: int,
                           strict: bool = False) -> GrowthCertificate:
    """Decompose I^n + J and compare each exponent index with n*l*d.

    With ``strict`` the exponent l is taken from I alone; that version is
    only claimed for large n, so a violation there is data, not a bug.
    """
    if n < 1:
        raise ValueError("n must be positive")
    l = max_exponent([I]) if strict else max_exponent([I, J])
    return _certify(ideal_sum(power(I, n), J), "ordinary", n, l, strict)


def verify_growth_frobenius(I: MonomialIdeal, J: MonomialIdeal, q: int,
                            strict: bool = False) -> GrowthCertificate:
    if q < 1:
        raise ValueError("q must be positive")
    l = max_exponent([I]) if strict else max_exponent([I, J])
    return _certify(ideal_sum(frobenius_power(I, q), J), "frobenius", q, l, strict)


def strict_threshold(I: MonomialIdeal, J: MonomialIdeal, values: Sequence[int],
                     mode: str = "ordinary") -> Optional[int]:
    """Smallest value in ``values`` from which the strict bound holds through the end.

    Returns None when it fails at the last value scanned.
    """
    check = verify_growth_ordinary if mode == "ordinary" else verify_growth_frobenius
    threshold = None
    for v in values:
        if check(I, J, v, strict=True).ok:
            if threshold is None:
                threshold = v
        else:
            threshold = None
    return threshold


# tight closure in S/J


def minimal_primes(J: MonomialIdeal) -> List[MonomialIdeal]:
    """Minimal primes of S/J as variable-generated ideals of S."""
    ring = J.ring
    if J.is_zero:
        return [MonomialIdeal.zero(ring)]
    if J.is_unit:
        return []
    return [c.ideal for c in irreducible_decompose(radical(J)).components]


def tight_closure(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Tight closure of I in S/J, returned as its preimage in S."""
    return intersect_all(I.ring, (ideal_sum(I, J, P) for P in minimal_primes(J)))


@dataclass
class LocalizationCheck:
    lhs: MonomialIdeal
    rhs: MonomialIdeal
    u: Monomial

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        ring = self.lhs.ring
        return {"kind": "localization-check", "u": ring.format_monomial(self.u),
                "closure_then_localize": str(self.lhs),
                "localize_then_closure": str(self.rhs), "verified": self.ok}


def check_localization(I: MonomialIdeal, J: MonomialIdeal, u: Sequence[int]) -> LocalizationCheck:
    """Compare closure-then-localize with localize-then-closure at powers of u.

    Both sides are computed as contractions to S: the left saturates the
    tight closure by u, the right intersects the saturations of I + J + P
    over the minimal primes P that survive (u not in P).
    """
    u = tuple(u)
    lhs = saturate(tight_closure(I, J), u)
    surviving = [P for P in minimal_primes(J) if u not in P]
    rhs = intersect_all(I.ring, (saturate(ideal_sum(I, J, P), u) for P in surviving))
    return LocalizationCheck(lhs, rhs, u)


def intersection_of(components: Sequence[PrimaryComponent]) -> MonomialIdeal:
    return intersect_all(components[0].ideal.ring, (c.ideal for c in components))

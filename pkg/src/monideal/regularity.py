"""Castelnuovo-Mumford regularity of monomial ideals.

Betti numbers come from upper Koszul simplicial complexes

    K^b(I) = {F subset of supp(b) : x^b / x^F in I},   beta_{i,b}(I) = dim H~_{i-1}(K^b(I)),

with reduced homology computed by exact elimination over Q or F_p.
Regularity is the regularity of the ideal (not of S/I): reg((x^a)) = a.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (
    Monomial,
    MonomialIdeal,
    colon,
    divides,
    ideal_sum,
    max_exponent,
    mono_lcm,
    power,
    radical_variables,
    support,
)
from .errors import DimensionMismatch, DomainError, ResourceLimitError

DEFAULT_MAX_GENERATORS = int(os.environ.get("MONIDEAL_MAX_GENERATORS", "400"))
DEFAULT_MAX_SUBSETS = int(os.environ.get("MONIDEAL_MAX_SUBSETS", "4096"))


def matrix_rank(rows: List[List[int]], p: int = 0) -> int:
    """Rank of an integer matrix over Q (p = 0) or F_p, by exact elimination."""
    if not rows or not rows[0]:
        return 0
    if p:
        m = [[a % p for a in r] for r in rows]
    else:
        m = [[Fraction(a) for a in r] for r in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        inv = pow(pr[col], -1, p) if p else 1 / pr[col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] * inv
                row = m[r]
                if p:
                    m[r] = [(a - f * b) % p for a, b in zip(row, pr)]
                else:
                    m[r] = [a - f * b for a, b in zip(row, pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def reduced_homology_ranks(faces: Sequence[Tuple[int, ...]], p: int = 0) -> Dict[int, int]:
    """Nonzero ranks of reduced homology {dimension: rank} of a simplicial complex.

    ``faces`` must be closed under taking subsets and lists every face,
    including the empty face ().  An empty list is the void complex.
    """
    if not faces:
        return {}
    by_dim: Dict[int, List[Tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    index = {k: {f: j for j, f in enumerate(sorted(v))} for k, v in by_dim.items()}
    top = max(by_dim)
    ranks = {}  # rank of the boundary map out of dimension k
    for k in range(0, top + 1):
        rows = []
        lower = index.get(k - 1, {})
        for f in sorted(by_dim.get(k, [])):
            row = [0] * len(lower)
            for j in range(len(f)):
                row[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
            rows.append(row)
        ranks[k] = matrix_rank(rows, p)
    out = {}
    for k in range(-1, top + 1):
        h = len(by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def upper_koszul_complex(I: MonomialIdeal, b: Monomial) -> List[Tuple[int, ...]]:
    supp = support(b)
    faces = []
    for size in range(len(supp) + 1):
        for F in combinations(supp, size):
            m = list(b)
            for i in F:
                m[i] -= 1
            if tuple(m) in I:
                faces.append(F)
    return faces


@dataclass
class BettiTable:
    ideal: MonomialIdeal
    entries: Dict[Tuple[int, Monomial], int]
    field: int = 0  # 0 for Q, else the prime p

    def regularity(self) -> int:
        return max(sum(b) - i for (i, b) in self.entries)

    def totals(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return dict(sorted(out.items()))

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Ranks by (homological index, total degree)."""
        out: Dict[Tuple[int, int], int] = {}
        for (i, b), r in self.entries.items():
            out[(i, sum(b))] = out.get((i, sum(b)), 0) + r
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        ring = self.ideal.ring
        return {
            "kind": "betti-table",
            "ideal": str(self.ideal),
            "field": "QQ" if not self.field else f"GF({self.field})",
            "entries": [{"i": i, "multidegree": ring.format_monomial(b), "rank": r}
                        for (i, b), r in sorted(self.entries.items(),
                                                key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))],
            "regularity": self.regularity(),
        }


def _divisors(b: Monomial):
    return cartesian(*(range(a + 1) for a in b))


def betti_table(I: MonomialIdeal, field: int = 0, *, lcm_lattice_only: bool = True,
                max_generators: Optional[int] = None) -> BettiTable:
    """Multigraded Betti numbers of I.

    With ``lcm_lattice_only`` only multidegrees that are the lcm of the
    generators dividing them are examined; every other multidegree has an
    acyclic complex, so the table is unchanged.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("Betti table needs a proper nonzero ideal")
    limit = DEFAULT_MAX_GENERATORS if max_generators is None else max_generators
    if len(I.gens) > limit:
        raise ResourceLimitError(f"{len(I.gens)} generators exceeds limit {limit}",
                                 generators=len(I.gens), limit=limit)
    entries = {}
    for b in _divisors(I.lcm()):
        below = [g for g in I.gens if divides(g, b)]
        if not below:
            continue
        if lcm_lattice_only:
            top = below[0]
            for g in below[1:]:
                top = mono_lcm(top, g)
            if top != b:
                continue
        for k, r in reduced_homology_ranks(upper_koszul_complex(I, b), field).items():
            entries[(k + 1, b)] = r
    return BettiTable(I, entries, field)


def regularity(I: MonomialIdeal, field: int = 0) -> int:
    """reg(I); the unit ideal has regularity 0 by convention."""
    if I.is_unit:
        return 0
    return betti_table(I, field).regularity()


def bs_primary_bound(I: MonomialIdeal) -> int:
    """Least N with (x_1, ..., x_d)^N inside I, for I primary to the maximal ideal."""
    d = I.ring.dim
    if I.is_unit:
        return 0
    if len(radical_variables(I)) != d:
        raise DomainError(f"({I}) is not primary to the maximal ideal")
    caps = [0] * d
    for g in I.gens:
        supp = support(g)
        if len(supp) == 1:
            i = supp[0]
            caps[i] = g[i] if not caps[i] else min(caps[i], g[i])
    # standard monomials live in the box below the pure powers
    top = -1
    for m in cartesian(*(range(c) for c in caps)):
        if m not in I:
            top = max(top, sum(m))
    return top + 1


def is_strongly_stable(I: MonomialIdeal) -> bool:
    for g in I.gens:
        for j in support(g):
            for i in range(j):
                h = list(g)
                h[j] -= 1
                h[i] += 1
                if tuple(h) not in I:
                    return False
    return True


# the linear regularity bound for sums of powers


@dataclass
class Witness:
    subset: Tuple[int, ...]
    pivot: int
    sub_ideal: MonomialIdeal
    sub_reg: int
    value: int

    def to_dict(self) -> dict:
        names = self.sub_ideal.ring.variable_names
        return {"S": [names[i] for i in self.subset], "x_q": names[self.pivot],
                "sub_ideal": str(self.sub_ideal), "sub_reg": self.sub_reg,
                "value": self.value}


@dataclass
class RegularityBoundReport:
    ideals: List[MonomialIdeal]
    l: int
    d: int
    r: int
    L: Optional[int]
    bound_B: int
    witnesses: List[Witness] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": "regularity-bound",
            "ideals": [str(I) for I in self.ideals],
            "ring": list(self.ideals[0].ring.variable_names),
            "l": self.l, "d": self.d, "r": self.r, "m": len(self.ideals),
            "L": self.L, "B": self.bound_B,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    def render(self) -> str:
        L = "none" if self.L is None else str(self.L)
        lines = [f"m={len(self.ideals)} d={self.d} l={self.l} r={self.r} "
                 f"dl={self.d * self.l} L={L} B={self.bound_B}"]
        names = self.ideals[0].ring.variable_names
        for w in self.witnesses:
            S = ",".join(names[i] for i in w.subset)
            lines.append(f"  S={{{S}}} x_q={names[w.pivot]}  ({w.sub_ideal})  "
                         f"reg={w.sub_reg}  value={w.value}")
        return "\n".join(lines)


def _check_family(ideals: Sequence[MonomialIdeal]):
    if not ideals:
        raise DomainError("need at least one ideal")
    ring = ideals[0].ring
    for I in ideals:
        if I.ring.variable_names != ring.variable_names:
            raise DimensionMismatch("ideals live in different rings")
        if I.is_zero or I.is_unit:
            raise DomainError(f"({I}) must be proper and nonzero")
    return ring


def linear_regularity_bound(ideals: Sequence[MonomialIdeal], field: int = 0,
                    max_subsets: Optional[int] = None) -> RegularityBoundReport:
    """B = max{dl, L} with reg(sum_j I_j^n) <= n*B for every n.

    L maximizes (d - |S| - r)*l + (m + |S| - 2 + d) * reg((I : x_q^l) + I_{S,x_q})
    over nonempty subsets S of the variables outside the radical of
    I = sum_j I_j and pivots x_q in S, where I_{S,x_q} = (x_i^l : x_i in S - {x_q}).
    """
    ring = _check_family(ideals)
    ideals = list(ideals)
    d, m = ring.dim, len(ideals)
    l = max_exponent(ideals)
    total = ideal_sum(*ideals)
    in_radical = radical_variables(total)
    r = len(in_radical)
    free = [i for i in range(d) if i not in in_radical]
    limit = DEFAULT_MAX_SUBSETS if max_subsets is None else max_subsets
    if 2 ** len(free) > limit:
        raise ResourceLimitError(f"2^{len(free)} subsets exceeds limit {limit}",
                                 free_variables=len(free), limit=limit)
    witnesses = []
    for size in range(1, len(free) + 1):
        for S in combinations(free, size):
            for q in S:
                sub = ideal_sum(colon(total, ring.var(q, l)),
                                MonomialIdeal.from_generators(
                                    ring, [ring.var(i, l) for i in S if i != q]))
                if any(g[q] for g in sub.gens):
                    raise AssertionError(f"x_{q} survived in ({sub})")
                sub_reg = regularity(sub, field)
                value = (d - size - r) * l + (m + size - 2 + d) * sub_reg
                witnesses.append(Witness(S, q, sub, sub_reg, value))
    L = max((w.value for w in witnesses), default=None)
    B = d * l if L is None else max(d * l, L)
    return RegularityBoundReport(ideals, l, d, r, L, B, witnesses)


@dataclass
class PowerCheck:
    n: int
    regularity: int
    bound: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.regularity, self.bound)

    @property
    def ok(self) -> bool:
        return self.regularity <= self.bound


@dataclass
class RegularityBoundVerification:
    report: RegularityBoundReport
    checks: List[PowerCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        out = self.report.to_dict()
        out["kind"] = "regularity-verification"
        out["checks"] = [{"n": c.n, "reg": c.regularity, "bound": c.bound,
                          "ratio": str(c.ratio), "ok": c.ok} for c in self.checks]
        out["verified"] = self.ok
        return out

    def render(self) -> str:
        lines = [self.report.render()]
        for c in self.checks:
            lines.append(f"n={c.n}: reg={c.regularity} <= {c.bound}  "
                         f"ratio={c.ratio}  {'ok' if c.ok else 'VIOLATION'}")
        lines.append("verified" if self.ok else "COUNTEREXAMPLE")
        return "\n".join(lines)


def verify_regularity_bound(ideals: Sequence[MonomialIdeal], n_max: int, field: int = 0,
                     report: Optional[RegularityBoundReport] = None) -> RegularityBoundVerification:
    report = report or linear_regularity_bound(ideals, field)
    checks = []
    for n in range(1, n_max + 1):
        total = ideal_sum(*(power(I, n) for I in ideals))
        checks.append(PowerCheck(n, regularity(total, field), n * report.bound_B))
    return RegularityBoundVerification(report, checks)

"""Randomized property suites shared by the CLI ``selftest`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional

from .core import (
    MonomialIdeal,
    colon,
    contains_ideal,
    divides,
    frobenius_power,
    ideal_sum,
    intersect,
    monomials_of_degree,
    mono_mul,
    power,
    product,
    radical,
)
from .decomposition import (
    check_localization,
    irreducible_decompose,
    generator_component_exponents,
    verify_growth_frobenius,
    verify_growth_ordinary,
)
from .errors import EngineError
from .randomgen import random_ideal, random_ideal_or_zero, random_monomial, ring_of_dim
from .regularity import regularity
from .unipoly import factor, is_irreducible_bruteforce, mul, norm


def monomials_up_to(d: int, D: int):
    for deg in range(D + 1):
        yield from monomials_of_degree(d, deg)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[dict] = None


def _minimalize_case(rng):
    ring = ring_of_dim(rng.randint(1, 4))
    raw = [random_monomial(rng, ring.dim, 4) for _ in range(rng.randint(1, 8))]
    I = MonomialIdeal.from_generators(ring, raw)
    ok = (all(g in raw for g in I.gens)
          and all(any(divides(g, h) for g in I.gens) for h in raw)
          and not any(g != h and divides(g, h) for g in I.gens for h in I.gens))
    return ok, {"generators": [ring.format_monomial(m) for m in raw], "minimal": str(I)}


def _colon_case(rng):
    ring = ring_of_dim(rng.randint(1, 3))
    I = random_ideal(rng, ring, 5, 3)
    m = random_monomial(rng, ring.dim, 3, nonunit=False)
    C = colon(I, m)
    ok = all((u in C) == (mono_mul(u, m) in I) for u in monomials_up_to(ring.dim, 6))
    return ok, {"ideal": str(I), "monomial": ring.format_monomial(m), "colon": str(C)}


def _intersect_case(rng):
    ring = ring_of_dim(rng.randint(1, 3))
    I, J = random_ideal(rng, ring, 4, 3), random_ideal(rng, ring, 4, 3)
    K = intersect(I, J)
    ok = all((u in K) == (u in I and u in J) for u in monomials_up_to(ring.dim, 6))
    return ok, {"I": str(I), "J": str(J), "intersection": str(K)}


def _power_case(rng):
    ring = ring_of_dim(rng.randint(1, 3))
    I = random_ideal(rng, ring, 4, 3)
    a, b = rng.randint(0, 2), rng.randint(0, 2)
    q, r = rng.choice([1, 2, 3]), rng.choice([1, 2])
    ok = (power(I, a + b) == product(power(I, a), power(I, b))
          and frobenius_power(I, q * r) == frobenius_power(frobenius_power(I, q), r)
          and contains_ideal(power(I, q), frobenius_power(I, q))
          and radical(power(I, q)) == radical(I))
    return ok, {"ideal": str(I), "a": a, "b": b, "q": q, "r": r}


def _decomposition_case(rng):
    ring = ring_of_dim(rng.randint(1, 5))
    I = random_ideal(rng, ring, 8, 4)
    dec = irreducible_decompose(I)
    ok = dec.intersection() == I
    try:
        generator_component_exponents(I)
    except EngineError:
        ok = False
    return ok, {"ideal": str(I), "decomposition": str(dec)}


def _growth_case(rng):
    ring = ring_of_dim(rng.randint(1, 3))
    I = random_ideal(rng, ring, 3, 3)
    J = random_ideal_or_zero(rng, ring, 3, 3)
    n, q = rng.randint(1, 3), rng.choice([2, 3, 4, 8])
    a, b = verify_growth_ordinary(I, J, n), verify_growth_frobenius(I, J, q)
    return a.ok and b.ok, {"I": str(I), "J": str(J), "n": n, "q": q}


def _localization_case(rng):
    ring = ring_of_dim(rng.randint(1, 4))
    I = random_ideal(rng, ring, 4, 3)
    J = random_ideal_or_zero(rng, ring, 3, 3)
    u = random_monomial(rng, ring.dim, 2, nonunit=False)
    res = check_localization(I, J, u)
    return res.ok, {"I": str(I), "J": str(J), **res.to_dict()}


def _colon_regularity_case(rng):
    ring = ring_of_dim(rng.randint(1, 3))
    I = random_ideal(rng, ring, 4, 3)
    qv, l = rng.randrange(ring.dim), rng.randint(1, 2)
    xl = MonomialIdeal.from_generators(ring, [ring.var(qv, l)])
    C = colon(I, ring.var(qv, l))
    regI, regC, regS = regularity(I), regularity(C), regularity(ideal_sum(I, xl))
    ok = (regularity(intersect(I, xl)) == l + regC
          and regC <= max(0, regI - l, regS + 1 - l)
          and regI <= max(regC + l, regS))
    return ok, {"ideal": str(I), "variable": ring.variable_names[qv], "l": l}


def _factor_case(rng):
    p = rng.choice([2, 3, 5, 7])
    f = norm([rng.randrange(p) for _ in range(rng.randint(2, 8))], p)
    if len(f) < 2:
        return True, {}
    lead, fs = factor(f, p, seed=rng.randrange(2 ** 31))
    prod = [lead]
    for g, m in fs:
        for _ in range(m):
            prod = mul(prod, g, p)
    ok = prod == f and all(is_irreducible_bruteforce(g, p) for g, _ in fs)
    return ok, {"p": p, "f": f}


SUITES: List[tuple] = [
    ("minimalize", _minimalize_case),
    ("colon", _colon_case),
    ("intersect", _intersect_case),
    ("power-laws", _power_case),
    ("decomposition", _decomposition_case),
    ("growth-bounds", _growth_case),
    ("localization", _localization_case),
    ("colon-regularity", _colon_regularity_case),
    ("factorization", _factor_case),
]


def run_suites(seed: int, budget: int,
               suites: Optional[List[tuple]] = None) -> List[SuiteResult]:
    out = []
    for name, case in suites or SUITES:
        rng = random.Random(f"{seed}:{name}")
        res = SuiteResult(name)
        for _ in range(budget):
            try:
                ok, payload = case(rng)
            except Exception as exc:  # a crash is a failed case, not a crashed run
                ok, payload = False, {"error": f"{type(exc).__name__}: {exc}"}
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                if res.counterexample is None:
                    res.counterexample = payload
        out.append(res)
    return out

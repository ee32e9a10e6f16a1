"""Katzman's ideals I_q = (x^q, y^q, xy(x-y)(x-ty)) in F_p[t, x, y].

``verify_katzman`` checks, for one (p, q = p^e), the splitting

    I_q = (I_q : tau_q) cap (I_q + (tau_q)),   tau_q = 1 + t + ... + t^(q-2),

the refinement of the second piece over the irreducible factors of tau_q,
and the 2q growth bound for every resulting component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .core import monomials_of_degree
from .errors import DomainError, ResourceLimitError
from .groebner import (
    IdealFp,
    Poly,
    PolyRing,
    colon_fp,
    factor_univariate,
    intersect_fp,
    is_squarefree_univariate,
)
from .unipoly import is_prime

DEFAULT_MAX_Q = 32


@dataclass
class KatzmanInstance:
    p: int
    e: int
    ring: PolyRing
    I: IdealFp
    J: IdealFp  # I : tau, computed
    tau: Poly
    G: Poly
    sigma: List[Poly]
    budget: Optional[int] = None

    @property
    def q(self) -> int:
        return self.p ** self.e

    def var(self, name):
        return self.ring.var(name)

    def sigma_components(self) -> List[IdealFp]:
        return [self.I + [s] for s in self.sigma]

    def components(self) -> List[IdealFp]:
        return [self.J] + self.sigma_components()


def build_instance(p: int, e: int, *, seed: int = 0, max_q: int = DEFAULT_MAX_Q,
                   budget: Optional[int] = None) -> KatzmanInstance:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if e < 1:
        raise DomainError("exponent e must be at least 1")
    q = p ** e
    if q > max_q:
        raise ResourceLimitError(f"q = {q} exceeds the limit {max_q}", q=q, limit=max_q)
    R = PolyRing(("t", "x", "y"), p)
    t, x, y = R.var("t"), R.var("x"), R.var("y")
    I = IdealFp(R, [x ** q, y ** q, x * y * (x - y) * (x - t * y)], budget)
    tau = R.zero()
    for i in range(q - 1):
        tau = tau + t ** i
    G = x ** 2 * y ** (q - 1)
    if not is_squarefree_univariate(tau):
        raise DomainError(f"tau_{q} = {tau} is not squarefree over F_{p}")
    _, factors = factor_univariate(tau, seed)
    if any(m != 1 for _, m in factors):
        raise DomainError(f"tau_{q} has a repeated factor")
    sigma = [f for f, _ in factors]
    return KatzmanInstance(p, e, R, I, colon_fp(I, tau), tau, G, sigma, budget)


@dataclass
class Check:
    name: str
    claim: str
    passed: bool
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "claim": self.claim, "passed": self.passed,
                "witnesses": self.witnesses}


@dataclass
class KatzmanCertificate:
    instance: KatzmanInstance
    checks: List[Check]
    growth_exponent: Optional[int] = None

    @property
    def bound(self) -> int:
        return 2 * self.instance.q

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        inst = self.instance
        return {
            "kind": "katzman-certificate",
            "p": inst.p, "e": inst.e, "q": inst.q,
            "I_q": [str(g) for g in inst.I.gens],
            "tau_q": str(inst.tau),
            "G_q": str(inst.G),
            "J_q_basis": [str(g) for g in inst.J.basis()],
            "sigma": [str(s) for s in inst.sigma],
            "bound": self.bound,
            "growth_exponent": self.growth_exponent,
            "certified": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self) -> str:
        inst = self.instance
        lines = [f"p={inst.p} e={inst.e} q={inst.q}",
                 f"tau_q = {inst.tau}",
                 f"sigma = [{', '.join(str(s) for s in inst.sigma)}]",
                 f"J_q = ({', '.join(str(g) for g in inst.J.basis())})"]
        for c in self.checks:
            lines.append(f"  ({c.name}) {'pass' if c.passed else 'FAIL'}  {c.claim}")
        if self.growth_exponent is not None:
            lines.append(f"growth exponent = {self.growth_exponent} (bound 2)")
        lines.append("certified" if self.ok else "NOT CERTIFIED")
        return "\n".join(lines)


def _first_outside(ideal: IdealFp, polys) -> Optional[dict]:
    for f in polys:
        r = ideal.reduce(f)
        if not r.is_zero():
            return {"element": str(f), "normal_form": str(r)}
    return None


def _same(A: IdealFp, B: IdealFp) -> dict:
    """Witness dict for A == B by mutual generator membership (empty when equal)."""
    bad = _first_outside(B, A.gens)
    if bad:
        return {"direction": "lhs not in rhs", **bad}
    bad = _first_outside(A, B.gens)
    if bad:
        return {"direction": "rhs not in lhs", **bad}
    return {}


def _xy_power(inst: KatzmanInstance, n: int) -> List[Poly]:
    return [inst.ring.monomial((0, a, b)) for a, b in monomials_of_degree(2, n)]


def _power_gens(inst: KatzmanInstance, s: Poly, n: int) -> List[Poly]:
    """Generators x^a y^b s^c, a + b + c = n, of (x, y, s)^n."""
    out = []
    for a, b, c in monomials_of_degree(3, n):
        out.append(inst.ring.monomial((0, a, b)) * s ** c)
    return out


def _check_degrees(inst: KatzmanInstance):
    q = inst.q
    for g in inst.I.gens + [inst.tau * inst.G]:
        xy = max(e[1] + e[2] for e in g.terms)
        if xy > 2 * q + 2 or g.degree_in("t") > max(q - 2, 1):
            raise ResourceLimitError(f"unexpected degree in {g}", q=q)


def verify_katzman(inst: KatzmanInstance, with_growth: bool = True) -> KatzmanCertificate:
    _check_degrees(inst)
    q, R = inst.q, inst.ring
    x, y = R.var("x"), R.var("y")
    I, J, tau = inst.I, inst.J, inst.tau
    checks = []

    f = tau * inst.G
    bad = _first_outside(I, [f])
    checks.append(Check("a", "tau_q * x^2*y^(q-1) lies in I_q", bad is None, bad or {}))

    spelled = {}
    for label, k in (("x^2*y^(q-1)", q - 1), ("x^2*y^(q-2)", q - 2)):
        spelled[label] = not _same(J, I + [x ** 2 * y ** k])
    w = _same(J, I + [inst.G])
    w["matches"] = spelled
    checks.append(Check("b", "I_q : tau_q = I_q + (x^2*y^(q-1))", spelled["x^2*y^(q-1)"], w))

    witnesses, ok = {}, True
    for label, g in (("t", R.var("t")), ("t+1", R.var("t") + 1), ("tau_q", tau)):
        w = _same(colon_fp(J, g), J)
        if w:
            ok = False
            witnesses[label] = w
    checks.append(Check("c", "J_q : f = J_q for f in {t, t+1, tau_q}", ok, witnesses))

    w = _same(colon_fp(I, tau * tau), J)
    checks.append(Check("d", "I_q : tau_q^2 = I_q : tau_q", not w, w))

    plus_tau = I + [tau]
    w = _same(intersect_fp(J, plus_tau), I)
    checks.append(Check("e", "I_q = (I_q : tau_q) cap (I_q + (tau_q))", not w, w))

    meet = IdealFp(R, [R.one()], inst.budget)
    for comp in inst.sigma_components():
        meet = intersect_fp(meet, comp)
    w = _same(plus_tau, meet)
    checks.append(Check("f", "I_q + (tau_q) = cap_i (I_q + (sigma_i))", not w, w))

    bad = _first_outside(J, _xy_power(inst, q + 1))
    checks.append(Check("g", "(x,y)^(q+1) in J_q", bad is None, bad or {}))

    bad = _first_outside(J, _xy_power(inst, 2 * q))
    checks.append(Check("h", "(x,y)^(2q) in J_q", bad is None, bad or {}))

    witnesses, ok = {}, True
    for s, comp in zip(inst.sigma, inst.sigma_components()):
        bad = _first_outside(comp, [x ** q, y ** q, s])
        # x^a y^b s^c with a + b + c = 2q and c = 0 forces a >= q or b >= q
        combinatorial = all(c > 0 or a >= q or b >= q
                            for a, b, c in monomials_of_degree(3, 2 * q))
        if bad or not combinatorial:
            ok = False
            witnesses[str(s)] = bad or {"combinatorial": False}
    checks.append(Check("i", "(x,y,sigma_i)^(2q) in (x^q, y^q, sigma_i) in I_q + (sigma_i)",
                        ok, witnesses))

    cert = KatzmanCertificate(inst, checks)
    if with_growth:
        cert.growth_exponent = growth_exponent(inst)
    return cert


def _component_contains_power(inst: KatzmanInstance, comp: IdealFp,
                              radical_extra: Optional[Poly], n: int) -> bool:
    gens = _xy_power(inst, n) if radical_extra is None else _power_gens(inst, radical_extra, n)
    return _first_outside(comp, gens) is None


def growth_exponent(inst: KatzmanInstance, cap: int = 8) -> int:
    """Least L with (radical q_i)^(L*q) inside q_i for every component q_i."""
    q = inst.q
    pairs = [(inst.J, None)] + list(zip(inst.sigma_components(), inst.sigma))

    def holds(L):
        return all(_component_contains_power(inst, comp, s, L * q) for comp, s in pairs)

    hi = 1
    while not holds(hi):
        hi *= 2
        if hi > cap:
            raise ResourceLimitError(f"no growth exponent up to {cap}", q=q)
    lo = hi // 2  # fails (or is 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi

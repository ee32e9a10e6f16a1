"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import json
import os
import random
import subprocess
import sys
import time
from functools import lru_cache
from itertools import product as cartesian

import numpy as np

from monideal.core import (
    MonomialIdeal,
    Ring,
    colon,
    contains_ideal,
    ideal_sum,
    intersect,
    max_exponent,
    power,
)
from monideal.decomposition import (
    check_localization,
    intersection_of,
    irreducible_decompose,
    generator_component_exponents,
    verify_growth_frobenius,
    verify_growth_ordinary,
)
from monideal.katzman import build_instance, verify_katzman
from monideal.randomgen import (
    random_ideal,
    random_ideal_or_zero,
    random_monomial,
    random_strongly_stable,
    ring_of_dim,
)
from monideal.regularity import regularity, verify_regularity_bound

from oracles import exponent_grid, grid_membership

SEED = 20240601


# seeded corpora, shared between criteria


@lru_cache(maxsize=None)
def exponent_corpus():
    rng = random.Random(f"{SEED}:exponents")
    return [random_ideal(rng, ring_of_dim(rng.randint(1, 5)), 8, 4) for _ in range(500)]


@lru_cache(maxsize=None)
def growth_corpus():
    rng = random.Random(f"{SEED}:growth")
    pairs = []
    for _ in range(200):
        ring = ring_of_dim(rng.randint(1, 4))
        pairs.append((random_ideal(rng, ring, 4, 3), random_ideal_or_zero(rng, ring, 3, 3)))
    return pairs


@lru_cache(maxsize=None)
def growth_certificates():
    out = []
    for I, J in growth_corpus():
        for n in (1, 2, 3):
            out.append(verify_growth_ordinary(I, J, n))
        for q in (2, 4, 8):
            out.append(verify_growth_frobenius(I, J, q))
    return out


def in_all(grid, gens_lists):
    hit = np.ones(len(grid), dtype=bool)
    for gens in gens_lists:
        hit &= grid_membership(grid, gens)
    return hit


# 1


def test_criterion_1_exponent_equality(acceptance):
    with acceptance(1, "l = k on 500 random ideals (d<=5, <=8 gens, exp<=4)") as rec:
        start = time.perf_counter()
        failures = []
        for I in exponent_corpus():
            dec = irreducible_decompose(I)
            l = max_exponent([I])
            k = max(max(c.index_monomial) for c in dec.components)
            if l != k or generator_component_exponents(I) != (l, k):
                failures.append(str(I))
        elapsed = time.perf_counter() - start
        rec.detail = f"{len(exponent_corpus())} ideals, {len(failures)} failures, {elapsed:.1f}s"
        assert not failures, failures[:3]
        assert elapsed < 10


# 2


def test_criterion_2_growth_bound(acceptance):
    with acceptance(2, "exponent_index <= n*l*d and q*l*d on 200 pairs") as rec:
        start = time.perf_counter()
        certs = growth_certificates()
        violations, mismatches, worst = [], [], 0.0
        for cert in certs:
            X = cert.ideal_described
            comps = [r.component for r in cert.per_component]
            for r in cert.per_component:
                worst = max(worst, r.exponent_index / cert.bound)
                if r.exponent_index > cert.bound:
                    violations.append(cert.to_dict())
            meet = intersection_of(comps)
            if not (contains_ideal(meet, X) and contains_ideal(X, meet)):
                mismatches.append(str(X))
            if not cert.ok:
                violations.append(cert.to_dict())
        elapsed = time.perf_counter() - start
        rec.detail = (f"{len(certs)} certificates, {len(violations)} violations, "
                      f"{len(mismatches)} intersection mismatches, "
                      f"max index/bound {worst:.3f}, {elapsed:.1f}s")
        assert not violations and not mismatches
        assert elapsed < 60


# 3


def test_criterion_3_brute_force_equivalence(acceptance):
    with acceptance(3, "exhaustive membership agreement up to degree 2*maxexp*d (d<=3)") as rec:
        start = time.perf_counter()
        checked, points, bad = 0, 0, []
        for I in exponent_corpus():
            d = I.ring.dim
            if d > 3:
                continue
            D = 2 * max_exponent([I]) * d
            grid = exponent_grid(d, D)
            pieces = [c.ideal.gens for c in irreducible_decompose(I).components]
            if not np.array_equal(grid_membership(grid, I.gens), in_all(grid, pieces)):
                bad.append(str(I))
            checked += 1
            points += len(grid)
        for cert in growth_certificates():
            X = cert.ideal_described
            d = X.ring.dim
            if d > 3:
                continue
            D = 2 * max_exponent([X]) * d
            grid = exponent_grid(d, D)
            comps = [r.component.ideal.gens for r in cert.per_component]
            if not np.array_equal(grid_membership(grid, X.gens), in_all(grid, comps)):
                bad.append(str(X))
            checked += 1
            points += len(grid)
        elapsed = time.perf_counter() - start
        rec.detail = (f"{checked} ideals, {points} monomials enumerated, "
                      f"{len(bad)} disagreements, {elapsed:.1f}s")
        assert not bad, bad[:3]
        assert elapsed < 60


# 4


def test_criterion_4_localization(acceptance):
    with acceptance(4, "closure commutes with localization on 200 triples (d<=4)") as rec:
        start = time.perf_counter()
        rng = random.Random(f"{SEED}:localization")
        failures = []
        for _ in range(200):
            ring = ring_of_dim(rng.randint(1, 4))
            I, J = random_ideal(rng, ring, 4, 3), random_ideal_or_zero(rng, ring, 3, 3)
            u = random_monomial(rng, ring.dim, 2, nonunit=False)
            res = check_localization(I, J, u)
            if not res.ok:
                failures.append(res.to_dict())
        elapsed = time.perf_counter() - start
        rec.detail = f"200 triples, {len(failures)} failures, {elapsed:.1f}s"
        assert not failures, failures[:3]
        assert elapsed < 30


# 5


def test_criterion_5_katzman(acceptance):
    with acceptance(5, "Katzman certificates for (2,1),(2,2),(3,1),(5,1), growth <= 2") as rec:
        start = time.perf_counter()
        summary = []
        results = []
        for p, e in [(2, 1), (2, 2), (3, 1), (5, 1)]:
            cert = verify_katzman(build_instance(p, e))
            failed = [c.name for c in cert.checks if not c.passed]
            summary.append(f"q={cert.instance.q}:{'ok' if not failed else failed}"
                           f"/L={cert.growth_exponent}")
            results.append(not failed and len(cert.checks) == 9 and cert.growth_exponent <= 2)
        elapsed = time.perf_counter() - start
        rec.detail = f"{' '.join(summary)}, {elapsed:.1f}s"
        assert all(results)
        assert elapsed < 300


# 6


def test_criterion_6_regularity_calibration(acceptance):
    with acceptance(6, "regularity oracle calibration") as rec:
        start = time.perf_counter()
        wrong = []
        x = Ring(("x",))
        for a in range(1, 6):
            if regularity(x.parse_ideal(f"x^{a}")) != a:
                wrong.append(f"x^{a}")
        ring = ring_of_dim(3)
        count = 0
        for t in (1, 2, 3):
            for exps in cartesian(range(1, 4), repeat=t):
                I = MonomialIdeal.from_generators(ring, [ring.var(i, a) for i, a in enumerate(exps)])
                count += 1
                if regularity(I) != sum(exps) - t + 1:
                    wrong.append(str(I))
        m = ring.parse_ideal("x, y, z")
        for n in (1, 2, 3):
            if regularity(power(m, n)) != n:
                wrong.append(f"(x,y,z)^{n}")
        elapsed = time.perf_counter() - start
        rec.detail = f"5 pure powers, {count} complete intersections, 3 powers of (x,y,z), " \
                     f"{len(wrong)} wrong, {elapsed:.1f}s"
        assert not wrong, wrong
        assert elapsed < 60


# 7


def test_criterion_7_colon_by_pure_power(acceptance):
    with acceptance(7, "regularity under colon/intersection by x_q^l, parts (i)-(iii)") as rec:
        start = time.perf_counter()
        rng = random.Random(f"{SEED}:colon-regularity")
        cases, failures = 0, []
        for _ in range(100):
            ring = ring_of_dim(rng.randint(1, 3))
            I = random_ideal(rng, ring, 4, 3)
            regI = regularity(I)
            for qv in range(ring.dim):
                for l in (1, 2):
                    xl = MonomialIdeal.from_generators(ring, [ring.var(qv, l)])
                    C = colon(I, ring.var(qv, l))
                    regC, regS = regularity(C), regularity(ideal_sum(I, xl))
                    parts = (regularity(intersect(I, xl)) == l + regC,
                             regC <= max(0, regI - l, regS + 1 - l),
                             regI <= max(regC + l, regS))
                    cases += 1
                    if not all(parts):
                        failures.append((str(I), ring.variable_names[qv], l, parts))
        elapsed = time.perf_counter() - start
        rec.detail = f"{cases} (ideal, variable, l) cases, {len(failures)} failures, {elapsed:.1f}s"
        assert not failures, failures[:3]
        assert elapsed < 300


# 8


def bound_corpus():
    R2 = ring_of_dim(2)
    worked = [[R2.parse_ideal("x, y")], [R2.parse_ideal("x^2, x*y")],
              [R2.parse_ideal("x^2"), R2.parse_ideal("y")], [R2.parse_ideal("x^2, y^2")]]
    rng = random.Random(f"{SEED}:linear-bound")
    corpus = []
    for _ in range(50):
        ring = ring_of_dim(rng.randint(1, 3))
        corpus.append([random_ideal(rng, ring, 3, 3) for _ in range(rng.randint(1, 2))])
    return worked + corpus


def test_criterion_8_linear_regularity_bound(acceptance):
    with acceptance(8, "reg(sum I_j^n) <= n*max{dl, L} for n<=3") as rec:
        start = time.perf_counter()
        failures, ratios = [], []
        for ideals in bound_corpus():
            ver = verify_regularity_bound(ideals, 3)
            ratios.extend(float(c.ratio) for c in ver.checks)
            if not ver.ok:
                failures.append(ver.to_dict())
        elapsed = time.perf_counter() - start
        rec.detail = (f"{len(bound_corpus())} inputs, {len(failures)} failures, "
                      f"slack ratio reg/bound max {max(ratios):.3f} "
                      f"mean {sum(ratios) / len(ratios):.3f}, {elapsed:.1f}s")
        assert not failures, failures[:2]
        assert elapsed < 600


# 9


def test_criterion_9_strongly_stable_powers(acceptance):
    with acceptance(9, "reg(I^n) <= n*reg(I) on 30 strongly stable ideals") as rec:
        start = time.perf_counter()
        rng = random.Random(f"{SEED}:stable")
        failures = []
        for _ in range(30):
            I = random_strongly_stable(rng, ring_of_dim(rng.randint(1, 3)), 3, 3)
            r = regularity(I)
            for n in (1, 2, 3):
                if regularity(power(I, n)) > n * r:
                    failures.append((str(I), n))
        elapsed = time.perf_counter() - start
        rec.detail = f"30 ideals x n<=3, {len(failures)} failures, {elapsed:.1f}s"
        assert not failures, failures
        assert elapsed < 300


# 10

_CERT_SCRIPT = r"""
import json, random
from monideal.decomposition import irreducible_decompose, verify_growth_ordinary, verify_growth_frobenius
from monideal.katzman import build_instance, verify_katzman
from monideal.randomgen import random_ideal, random_ideal_or_zero, ring_of_dim
from monideal.regularity import verify_regularity_bound
rng = random.Random("determinism")
docs = []
for _ in range(40):
    ring = ring_of_dim(rng.randint(1, 4))
    I, J = random_ideal(rng, ring, 4, 3), random_ideal_or_zero(rng, ring, 3, 3)
    docs.append(str(irreducible_decompose(I)))
    docs.append(verify_growth_ordinary(I, J, 2).to_dict())
    docs.append(verify_growth_frobenius(I, J, 4).to_dict())
    if ring.dim <= 3:
        docs.append(verify_regularity_bound([I], 2).to_dict())
docs.append(verify_katzman(build_instance(5, 1, seed=3)).to_dict())
print(json.dumps(docs, sort_keys=False, ensure_ascii=False))
"""

_CLI_RUNS = [
    ["katzman", "--p", "5", "--seed", "11"],
    ["selftest", "--seed", "4", "--budget", "5"],
    ["bound-growth", "--ring", "x,y,z", "--I", "x^2*y, y^2*z, x*z^3", "--J", "y^4", "--q", "4"],
    ["verify-reg", "--ring", "x,y", "x^2, x*y", "--n-max", "3"],
]


def _run(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run([sys.executable] + argv, capture_output=True, env=env)
    return proc.returncode, proc.stdout


def test_criterion_10_determinism(acceptance, tmp_path):
    with acceptance(10, "identical seeds give byte-identical certificates") as rec:
        start = time.perf_counter()
        differing = []
        outputs = [_run(["-c", _CERT_SCRIPT], h) for h in (0, 1, 12345)]
        if len({o for o in outputs}) != 1 or outputs[0][0] != 0:
            differing.append("certificate corpus")
        for argv in _CLI_RUNS:
            runs = []
            for h in (0, 777):
                path = tmp_path / f"emit-{h}.json"
                code, out = _run(["-m", "monideal"] + argv + ["--emit", str(path)], h)
                runs.append((code, out, path.read_bytes()))
            if runs[0] != runs[1] or runs[0][0] != 0:
                differing.append(" ".join(argv))
        # in-process repeat of the corpora used above
        again = [c.to_dict() for c in growth_certificates()]
        growth_certificates.cache_clear()
        growth_corpus.cache_clear()
        if json.dumps(again) != json.dumps([c.to_dict() for c in growth_certificates()]):
            differing.append("growth corpus")
        elapsed = time.perf_counter() - start
        rec.detail = (f"{len(outputs[0][1])} bytes of certificates x3 hash seeds, "
                      f"{len(_CLI_RUNS)} CLI commands x2, {len(differing)} differing, "
                      f"{elapsed:.1f}s")
        assert not differing, differing

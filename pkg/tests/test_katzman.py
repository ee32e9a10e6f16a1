import json
from pathlib import Path

import pytest

from monideal.errors import DomainError, ResourceLimitError
from monideal.groebner import IdealFp
from monideal.katzman import build_instance, growth_exponent, verify_katzman
from monideal.unipoly import is_irreducible_bruteforce

GOLDEN = Path(__file__).parent / "golden"
CI_INSTANCES = [(2, 1), (2, 2), (3, 1), (5, 1)]


@pytest.fixture(scope="module")
def certificates():
    return {pe: verify_katzman(build_instance(*pe)) for pe in CI_INSTANCES}


def dense(poly):
    out = [0] * (poly.degree_in("t") + 1)
    for e, c in poly.terms.items():
        out[e[0]] = c
    return out


def test_build_q2():
    inst = build_instance(2, 1)
    assert inst.q == 2
    assert str(inst.tau) == "1"
    assert str(inst.G) == "x^2*y"
    assert len(inst.I.gens) == 3
    x, y, t = inst.var("x"), inst.var("y"), inst.var("t")
    assert inst.I == IdealFp(inst.ring, [x ** 2, y ** 2, x * y * (x - y) * (x - t * y)])


def test_build_tau_and_sigma():
    assert str(build_instance(3, 1).tau) == "t + 1"
    inst = build_instance(2, 2)
    assert str(inst.tau) == "t^2 + t + 1"
    assert len(inst.sigma) == 1 and is_irreducible_bruteforce(dense(inst.sigma[0]), 2)

    inst = build_instance(5, 1)
    prod = inst.ring.one()
    for s in inst.sigma:
        assert is_irreducible_bruteforce(dense(s), 5)
        prod = prod * s
    assert prod == inst.tau
    assert len({str(s) for s in inst.sigma}) == len(inst.sigma)


def test_build_errors():
    with pytest.raises(ResourceLimitError):
        build_instance(2, 6)
    with pytest.raises(ResourceLimitError):
        build_instance(3, 2, max_q=8)
    with pytest.raises(DomainError):
        build_instance(4, 1)
    with pytest.raises(DomainError):
        build_instance(2, 0)


@pytest.mark.parametrize("pe", CI_INSTANCES)
def test_all_checks_pass(certificates, pe):
    cert = certificates[pe]
    assert [c.name for c in cert.checks] == list("abcdefghi")
    assert all(c.passed for c in cert.checks), [c.to_dict() for c in cert.checks if not c.passed]
    assert cert.ok and cert.bound == 2 * cert.instance.q
    assert cert.growth_exponent is not None and cert.growth_exponent <= 2


@pytest.mark.parametrize("pe", CI_INSTANCES)
def test_colon_generator_spelling(certificates, pe):
    matches = certificates[pe].checks[1].witnesses["matches"]
    assert matches["x^2*y^(q-1)"]
    # the other spelling only coincides when q = 2, where both reduce into I_q
    assert matches["x^2*y^(q-2)"] == (certificates[pe].instance.q == 2)


@pytest.mark.parametrize("pe", CI_INSTANCES)
def test_radical_of_J(pe):
    inst = build_instance(*pe)
    x, y = inst.var("x"), inst.var("y")
    q = inst.q
    assert x ** q in inst.J and y ** q in inst.J
    xy = IdealFp(inst.ring, [x, y])
    assert inst.J <= xy


@pytest.mark.parametrize("pe", CI_INSTANCES)
def test_sigma_component_radicals(pe):
    inst = build_instance(*pe)
    x, y = inst.var("x"), inst.var("y")
    for s, comp in zip(inst.sigma, inst.sigma_components()):
        rad = IdealFp(inst.ring, [x, y, s])
        assert comp <= rad
        for g in (x, y, s):
            assert g ** inst.q in comp


def test_growth_exponent_is_tight_for_q2():
    inst = build_instance(2, 1)
    assert growth_exponent(inst) == 2
    # x*y is outside J_2 = (x^2, y^2), so exponent 1 fails
    assert inst.ring.parse("x*y") not in inst.J


def test_uncertified_instance_reports_witness():
    inst = build_instance(3, 1)
    inst.J = inst.I  # sabotage: pretend the colon did nothing
    cert = verify_katzman(inst, with_growth=False)
    assert not cert.ok
    b = cert.checks[1]
    assert not b.passed and b.witnesses["normal_form"]


def test_golden_certificate_q2():
    doc = verify_katzman(build_instance(2, 1)).to_dict()
    assert doc == json.loads((GOLDEN / "katzman_2_1.json").read_text())


@pytest.mark.slow
@pytest.mark.parametrize("pe", [(2, 3), (3, 2)])
def test_larger_instances(pe):
    cert = verify_katzman(build_instance(*pe))
    assert cert.ok and cert.growth_exponent <= 2

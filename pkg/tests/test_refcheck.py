from fractions import Fraction

import pytest

from permbinom.exactalg import IntPoly, resultant_univar
from permbinom.refcheck import (
    Sec6Instance,
    identities_check,
    run_suite,
    sec5_check,
    sec5_r32_check,
    sec6_check,
    sec6_suite,
    sec7_p3_check,
    sec7_p181_check,
)
from permbinom.registry import REG, verify_checksums
from permbinom.report import all_ok


def failures(reports):
    return [r for r in reports if not r.ok]


def test_registry_checksums():
    assert verify_checksums() == []


def test_registry_shapes():
    assert REG.h13.degree == 2
    assert REG.h15.degree == 7
    assert REG.h35.degree == 28
    assert REG.h35.lc == 21119053438918950050070528
    assert REG.A5.z_degree == 10 and REG.A5.r_degree == 5
    assert REG.B5.degree == 10


def test_a1_specializations():
    from permbinom.exactalg import RatPoly

    # r = 3 collapses the degree-1 bracket cofactor to z - 3
    assert REG.A1.eval_r(3) == RatPoly((-3, 1))
    assert REG.A1.eval_r(Fraction(3, 2)) == RatPoly((0, 1, -3))  # -z(3z - 1)


def test_sec5():
    reports = sec5_check()
    assert all_ok(reports), failures(reports)
    # the sign note on the large resultant is present
    (rep,) = [r for r in reports if r.check_id == "sec5.res.h13-h35"]
    assert "magnitude" in rep.notes


def test_sec5_r32():
    assert all_ok(sec5_r32_check())


def test_sec6_examples():
    # the two worked instances plus a deeper power
    for inst in (Sec6Instance(5, 1, 2, 125), Sec6Instance(7, 1, 2, 343),
                 Sec6Instance(5, 2, 2, 3125)):
        reports = sec6_check(inst)
        assert all_ok(reports), failures(reports)


def test_sec6_instance_validation():
    with pytest.raises(ValueError):
        Sec6Instance(5, 1, 1, 125)   # k odd makes r even
    with pytest.raises(ValueError):
        Sec6Instance(5, 1, 2, 121)   # not a power of 5
    with pytest.raises(ValueError):
        Sec6Instance(5, 1, 2, 25)    # below the quotient-1 threshold


def test_sec6_suite_counts():
    reports = sec6_suite(ps=(5,), ls=(1,), cap=10**6)
    assert all_ok(reports), failures(reports)
    (cov,) = [r for r in reports if r.check_id == "sec6.coverage"]
    assert int(cov.computed) >= 2


def test_sec7_p3():
    reports = sec7_p3_check()
    assert all_ok(reports), failures(reports)
    (rep,) = [r for r in reports if r.check_id == "sec7p3.factor.a5"]
    assert "multiplicity 3" in rep.notes


def test_sec7_p181():
    assert all_ok(sec7_p181_check())


def test_identities_suite():
    assert all_ok(identities_check(31))


def test_run_suite_all_and_unknown():
    with pytest.raises(ValueError):
        run_suite("nope")
    assert all_ok(run_suite("sec5r32"))


def test_resultant_sign_finding():
    # the displayed magnitude of the big eliminant resultant is exact, and
    # the resultant itself is negative
    val = resultant_univar(REG.h13, REG.h35)
    assert val < 0
    assert -val == REG.res_h13_h35.value()


def test_p181_registry_is_checked_not_trusted():
    # perturb a copy of a factor and confirm the comparison would catch it
    from permbinom.exactalg import mp_mul, to_modp

    scal, fs = REG.p181_A1
    good = [scal % 181]
    for f in fs:
        good = mp_mul(good, to_modp(f, 181), 181)
    bad = [scal % 181]
    for f in (fs[0], IntPoly((138, 1))):
        bad = mp_mul(bad, to_modp(f, 181), 181)
    assert good != bad

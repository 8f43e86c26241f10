import math

import pytest

from permbinom.ff import build_tower, compute_z, enumerate_elements
from permbinom.ppcheck import (
    BinomialParams,
    Collision,
    NonzeroPowerSum,
    RootCountExcess,
    classify_family,
    expand_z_to_a,
    is_pp_brute,
    is_pp_powersum,
    normalize,
    t2_passing_z,
    thm21_bound,
)


def params(p, m, r, t, a_idx):
    fq, fq2 = build_tower(p, m)
    return BinomialParams(fq2.element(a_idx), r, t)


def test_binomial_params_validation():
    fq, fq2 = build_tower(3, 1)
    with pytest.raises(ValueError):
        BinomialParams(fq2.zero(), 1, 2)
    with pytest.raises(ValueError):
        BinomialParams(fq2.one(), 8, 2)  # r = q^2 - 1 out of range
    with pytest.raises(ValueError):
        BinomialParams(fq2.one(), 1, 4)  # t > q


# -------------------------------------------------------------- brute force

def test_brute_known_pp_q3_r1():
    # a^2 = -1 makes x(a + x^4) a permutation of F_9
    fq, fq2 = build_tower(3, 1)
    found = 0
    for a in enumerate_elements(fq2, "nonzero"):
        if a * a == -fq2.one():
            found += 1
            assert is_pp_brute(BinomialParams(a, 1, 2)).is_pp
    assert found == 2


def test_brute_collision_witness_rechecks():
    fq, fq2 = build_tower(3, 1)
    verdict = is_pp_brute(BinomialParams(fq2.one(), 2, 2))
    assert not verdict.is_pp
    w = verdict.witness
    assert isinstance(w, Collision)
    f = lambda x: x**2 * (fq2.one() + x**4)
    assert f(w.x1) == f(w.x2) == w.value


def test_brute_thm42_directions():
    fq, fq2 = build_tower(3, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        expected = a**4 != 1
        assert is_pp_brute(BinomialParams(a, 1, 1)).is_pp == expected


def test_brute_family_i_q5():
    fq, fq2 = build_tower(5, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        if a**6 == 1 and (-a) ** 3 != 1:
            assert is_pp_brute(BinomialParams(a, 3, 2)).is_pp


# ---------------------------------------------------------------- fast test

def test_powersum_equals_brute_exhaustive_small():
    for p, m in ((3, 1), (5, 1), (2, 2)):
        fq, fq2 = build_tower(p, m)
        q = fq.order
        for t in (1, 2):
            if t == 2 and q % 2 == 0:
                continue
            for r in range(1, q * q - 1):
                for a in enumerate_elements(fq2, "nonzero"):
                    ps = BinomialParams(a, r, t)
                    assert is_pp_powersum(ps).is_pp == is_pp_brute(ps).is_pp


def test_powersum_witnesses():
    # gcd failure is a verdict with a note, not an error
    v = is_pp_powersum(params(5, 1, 2, 2, 3))
    assert not v.is_pp and "gcd" in v.note
    # root-count excess
    fq, fq2 = build_tower(5, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        if (-a) ** 3 == 1:
            v = is_pp_powersum(BinomialParams(a, 3, 2))
            assert isinstance(v.witness, RootCountExcess)
            break
    # nonvanishing sum carries a replayable exponent
    from permbinom.powersum import power_sum_brute

    hit = False
    for a in enumerate_elements(fq2, "nonzero"):
        v = is_pp_powersum(BinomialParams(a, 7, 2))
        if isinstance(v.witness, NonzeroPowerSum):
            assert power_sum_brute(7, 2, a, v.witness.s).idx != 0
            hit = True
            break
    assert hit


def test_powersum_preconditions():
    with pytest.raises(ValueError):
        is_pp_powersum(params(3, 1, 1, 3, 1))  # t = 3
    fq, fq2 = build_tower(2, 2)
    with pytest.raises(ValueError):
        is_pp_powersum(BinomialParams(fq2.one(), 1, 2))  # t = 2, even q


def test_result_17_q7_never_pp():
    # q = 7 is 1 mod 3: no r = 3 permutation binomials at all
    fq, fq2 = build_tower(7, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        assert not is_pp_powersum(BinomialParams(a, 3, 2)).is_pp


# ------------------------------------------------------------------ families

def test_classify_examples():
    fq, fq2 = build_tower(5, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        if a**6 == 1 and (-a) ** 3 != 1:
            assert classify_family(BinomialParams(a, 3, 2)).tag == "family_i"
    # family_iii: r = 1, t = 2, (-a)^((q+1)/2) = 3
    hits = 0
    for a in enumerate_elements(fq2, "nonzero"):
        if (-a) ** 3 == 3:
            tag = classify_family(BinomialParams(a, 1, 2))
            assert tag.tag == "family_iii"
            hits += 1
    assert hits == 3
    # family_iv: r = 3, t = 2, (-a)^((q+1)/2) = 1/3 = 2 in F_5
    for a in enumerate_elements(fq2, "nonzero"):
        if (-a) ** 3 == 2:
            assert classify_family(BinomialParams(a, 3, 2)).tag == "family_iv"
    fq, fq2 = build_tower(3, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        if a**4 != 1:
            tag = classify_family(BinomialParams(a, 5, 1))
            assert tag.tag == "thm42"
            assert "family_ii" in tag.fired


def test_family_tags_imply_pp():
    for p, m in ((3, 1), (5, 1), (3, 2)):
        fq, fq2 = build_tower(p, m)
        q = fq.order
        for t in (1, 2):
            for r in range(1, q * q - 1):
                for a in enumerate_elements(fq2, "nonzero"):
                    tag = classify_family(BinomialParams(a, r, t))
                    if tag.tag not in ("not_pp", "sporadic"):
                        assert is_pp_brute(BinomialParams(a, r, t)).is_pp
                    if tag.tag == "not_pp":
                        assert not tag.fired  # a fired family is always a permutation


def test_sporadic_exists_q5_r5():
    fq, fq2 = build_tower(5, 1)
    tags = {classify_family(BinomialParams(a, 5, 2)).tag
            for a in enumerate_elements(fq2, "nonzero")}
    assert "sporadic" in tags


def test_classify_t_above_2_norm_one_only():
    # t > 2: only the norm-one family applies
    fq, fq2 = build_tower(5, 1)
    for a in enumerate_elements(fq2, "nonzero"):
        if a**6 != 1:
            continue
        for t in (3, 4, 5):
            g = math.gcd(6, t)
            expected_pp = (
                math.gcd(3 - t, 6) == 1 and (-a) ** (6 // g) != 1
            )
            tag = classify_family(BinomialParams(a, 3, t))
            assert (tag.tag == "family_i") == expected_pp
            if not expected_pp:
                assert tag.tag == "not_pp"


def test_classify_consistency_sweep_q7_q11():
    # every family tag is a genuine permutation and vice versa
    for p in (7, 11):
        fq, fq2 = build_tower(p, 1)
        q = p
        for t in (1, 2):
            for r in range(1, q * q - 1):
                if math.gcd(r, q - 1) != 1:
                    continue
                for a in enumerate_elements(fq2, "nonzero"):
                    ps = BinomialParams(a, r, t)
                    tag = classify_family(ps)
                    pp = is_pp_brute(ps).is_pp
                    assert (tag.tag != "not_pp") == pp
                    if tag.fired:
                        assert pp


# -------------------------------------------------------------------- bound

def test_thm21_bound_cases():
    assert thm21_bound(13, 5) == 122  # 13 = 3 mod 5
    assert thm21_bound(5, 3) == 25    # p = 3
    assert thm21_bound(7, 5) == 31    # generic
    assert thm21_bound(9, 3) == 50    # 9 = 3 = 0 mod 3
    assert thm21_bound(7, 11) == 31   # generic: 4r-7 = 21 != 0 mod 11
    with pytest.raises(ValueError):
        thm21_bound(4, 5)
    with pytest.raises(ValueError):
        thm21_bound(5, 2)


def test_thm21_bound_seven_fourths_case():
    # r = 7/4 mod p taken literally: 4r - 7 = 0 mod p
    p = 13
    r = None
    for cand in range(5, 100, 2):
        if (4 * cand - 7) % p == 0 and (cand - 3) % p != 0:
            r = cand
            break
    assert r == 5
    assert thm21_bound(r, p) == 8 * r - 15


# ---------------------------------------------------------------- normalize

def test_normalize_frobenius_fold():
    pr, trace = normalize(params(5, 1, 10, 5, 7))
    assert (pr.r, pr.t) == (2, 1)
    assert trace.pp_equivalent
    assert trace.steps[0][0] == "frobenius-fold"


def test_normalize_gcd_division():
    pr, trace = normalize(params(7, 1, 6, 4, 3))
    assert (pr.r, pr.t) == (3, 2)
    assert not trace.pp_equivalent  # gcd(2, 48) != 1


def test_normalize_noop():
    ps = params(5, 1, 3, 2, 7)
    pr, trace = normalize(ps)
    assert pr is ps and trace.steps == ()


def test_normalize_preserves_pp_when_trace_says_so():
    for p, m in ((3, 1), (5, 1), (7, 1)):
        fq, fq2 = build_tower(p, m)
        q = fq.order
        for t in range(1, q + 1):
            for r in range(1, q * q - 1):
                for a in enumerate_elements(fq2, "nonzero"):
                    ps = BinomialParams(a, r, t)
                    pr, trace = normalize(ps)
                    if trace.steps and trace.pp_equivalent:
                        assert is_pp_brute(ps).is_pp == is_pp_brute(pr).is_pp


# ------------------------------------------------------------------ z-sweep

def test_z_sweep_matches_per_a():
    for p, m, r in ((3, 1, 1), (5, 1, 5), (7, 1, 5), (3, 2, 7)):
        fq, fq2 = build_tower(p, m)
        q = fq.order
        if math.gcd(r, q - 1) != 1:
            continue
        for include in (False, True):
            sweep = set()
            for h in t2_passing_z(p, m, r, include):
                for k, a in expand_z_to_a(fq2, h):
                    sweep.add(a.idx)
            direct = set()
            for a in enumerate_elements(fq2, "nonzero"):
                if not include and a ** (q + 1) == 1:
                    continue
                if is_pp_powersum(BinomialParams(a, r, 2)).is_pp:
                    direct.add(a.idx)
            assert sweep == direct


def test_expand_preimage_count():
    fq, fq2 = build_tower(5, 1)
    pre = expand_z_to_a(fq2, ("sub", 2))
    assert len(pre) == 3  # (q+1)/2 preimages per z
    for k, a in pre:
        assert compute_z(a) == 2
        assert fq2.dlog(a.idx) == k

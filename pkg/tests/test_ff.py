import random

import pytest

from permbinom.exactalg import mp_irreducible
from permbinom.ff import (
    CapExceededError,
    PrimePower,
    build_tower,
    build_subfield,
    compute_z,
    enumerate_elements,
    norm_and_frobenius,
)


def test_prime_power_validation():
    assert PrimePower(5, 2).q == 25
    with pytest.raises(ValueError):
        PrimePower(4, 1)
    with pytest.raises(ValueError):
        PrimePower(5, 0)


def test_build_tower_examples():
    fq, fq2 = build_tower(3, 1)
    assert fq.order == 3 and fq2.order == 9
    assert fq2.describe()["modulus"] == [1, 0, 1]  # x^2 + 1
    fq, fq2 = build_tower(5, 2)
    assert fq.order == 25 and fq2.order == 625
    # oracle: lex-smallest monic irreducible quadratic over F_5 by root search
    expected = None
    for c0 in range(5):
        for c1 in range(5):
            if all((x * x + c1 * x + c0) % 5 != 0 for x in range(5)):
                expected = [c0, c1, 1]
                break
        if expected:
            break
    assert fq.describe()["modulus"] == expected == [1, 1, 1]
    with pytest.raises(ValueError):
        build_tower(4, 1)


def test_cap():
    with pytest.raises(CapExceededError):
        build_tower(3, 1, cap=5)
    with pytest.raises(CapExceededError):
        build_subfield(101, 1, cap=50)


def test_moduli_pass_irreducibility():
    for p, m in ((3, 2), (5, 2), (7, 1), (2, 3)):
        fq, fq2 = build_tower(p, m)
        if fq.modulus is not None:
            assert mp_irreducible(list(fq.modulus), p)
        # quadratic modulus over F_q: no root in F_q
        c0, c1, _ = fq2.modulus
        for x in range(fq.order):
            assert fq.add(fq.add(fq.mul(x, x), fq.mul(c1, x)), c0) != 0


def test_field_axioms_random():
    rng = random.Random(99)
    for p, m in ((3, 1), (5, 1), (3, 2), (2, 2)):
        fq, fq2 = build_tower(p, m)
        for ctx in (fq, fq2):
            Q = ctx.order
            for _ in range(100):
                x = ctx.element(rng.randrange(Q))
                y = ctx.element(rng.randrange(Q))
                z = ctx.element(rng.randrange(Q))
                assert (x + y) * z == x * z + y * z
                assert x + (-x) == 0
                if y.idx:
                    assert (x / y) * y == x
                    assert y * y.inverse() == 1


def test_pow_semantics():
    fq, fq2 = build_tower(5, 2)
    x = fq.element(7)
    assert x**24 == 1                       # Lagrange
    assert x**(-1) == x.inverse()
    assert x**25 == x                       # exponent reduced mod q-1
    assert fq.zero() ** 3 == 0
    assert fq.zero() ** 0 == 1
    with pytest.raises(ZeroDivisionError):
        fq.zero() ** (-1)
    assert build_tower(5, 1)[0].element(2).inverse() == 3  # inv(2) in F_5


def test_nonzero_product_nonzero():
    fq, fq2 = build_tower(3, 1)
    for i in range(1, 9):
        for j in range(1, 9):
            assert fq2.mul(i, j) != 0


def test_frobenius_additive_multiplicative():
    rng = random.Random(5)
    for p, m in ((3, 1), (5, 1), (3, 2)):
        fq, fq2 = build_tower(p, m)
        q = fq.order
        for _ in range(100):
            x = fq2.element(rng.randrange(fq2.order))
            y = fq2.element(rng.randrange(fq2.order))
            assert (x + y) ** q == x**q + y**q
            assert (x * y) ** q == (x**q) * (y**q)


def test_norm_and_frobenius():
    fq, fq2 = build_tower(3, 1)
    # subfield elements are fixed by the q-power map
    for i in range(3):
        x = fq2.element(i)
        frob, _ = norm_and_frobenius(x) if i else (x, None)
        assert frob == x
    # norms land in the subfield and are nonzero on units
    for x in enumerate_elements(fq2, "nonzero"):
        frob, nrm = norm_and_frobenius(x)
        assert nrm.ctx is fq
        assert nrm.idx != 0
    rng = random.Random(1)
    fq, fq2 = build_tower(5, 2)
    for _ in range(50):
        x = fq2.element(rng.randrange(1, fq2.order))
        _, nrm = norm_and_frobenius(x)
        assert nrm ** (fq.order - 1) == 1


def test_compute_z_examples():
    fq, fq2 = build_tower(3, 1)
    assert compute_z(-fq2.one()) == 1
    fq, fq2 = build_tower(5, 1)
    found = 0
    for a in enumerate_elements(fq2, "nonzero"):
        if (-a) ** 3 == 3:
            found += 1
            assert compute_z(a) == 2  # 3^(-5) = 1/3 = 2 in F_5
    assert found > 0
    for a in enumerate_elements(fq2, "nonzero"):
        z = compute_z(a)
        assert z ** (2 * 5) == z**2
        assert fq2.in_subfield((z * z).idx)


def test_compute_z_z2_is_inverse_norm():
    # z^2 = ((-a)^(q+1))^(-q) for every a in F_9, F_25
    for p in (3, 5):
        fq, fq2 = build_tower(p, 1)
        q = fq.order
        for a in enumerate_elements(fq2, "nonzero"):
            z = compute_z(a)
            assert z * z == ((-a) ** (q + 1)) ** (-q)


def test_compute_z_preconditions():
    fq, fq2 = build_tower(3, 1)
    with pytest.raises(ValueError):
        compute_z(fq2.zero())
    fq, fq2 = build_tower(2, 2)
    with pytest.raises(ValueError):
        compute_z(fq2.one())  # even q


def test_enumerate():
    fq, fq2 = build_tower(3, 1)
    allv = list(enumerate_elements(fq2, "all"))
    assert len(allv) == 9 and len({x.idx for x in allv}) == 9
    assert allv[-1].idx == 0
    assert [x.idx for x in enumerate_elements(fq, "nonzero")] == [1, 2]
    excl = list(enumerate_elements(fq2, "norm_one_excluded"))
    assert len(excl) == 4
    for x in excl:
        assert x**4 != 1
    # exactly the q+1 norm-one elements got dropped
    dropped = {x.idx for x in enumerate_elements(fq2, "nonzero")} - {x.idx for x in excl}
    assert len(dropped) == 4
    for i in dropped:
        assert fq2.pow(i, 4) == 1


def test_element_text_roundtrip():
    fq, fq2 = build_tower(5, 2)
    rng = random.Random(3)
    for _ in range(30):
        x = fq2.element(rng.randrange(fq2.order))
        assert fq2.parse(x.text) == x.idx
    # g^k notation
    assert fq2.parse("g^0") == 1
    assert fq2.parse("g^1") == fq2.gen_idx
    # prime subfield shorthand
    assert fq2.parse("3") == 3


def test_ctx_mismatch():
    _, a2 = build_tower(3, 1)
    _, b2 = build_tower(5, 1)
    with pytest.raises(ValueError):
        a2.one() + b2.one()


def test_generator_has_full_order():
    for p, m in ((3, 1), (5, 1), (3, 2), (2, 2)):
        fq, fq2 = build_tower(p, m)
        for ctx in (fq, fq2):
            n = ctx.order - 1
            g = ctx.generator()
            seen = {g.idx}
            x = g
            for _ in range(n - 1):
                x = x * g
                seen.add(x.idx)
            assert x == 1  # g has exact multiplicative order n
            assert len(seen) == n

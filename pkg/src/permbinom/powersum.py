"""Power sums of f(x) = x^r (a + x^(t(q-1))) over F_{q^2}, in closed form
and by brute force.

For exponents s = alpha + beta*q the sum vanishes unless alpha + beta = q-1
(and, for t = 2, unless alpha is odd); the surviving sums collapse to short
binomial brackets in the derived value z = (-a)^(-q(q+1)/2) (t = 2) or in
a^(-(q+1)) (t = 1).  Which bracket terms survive is controlled by the
division-with-remainder pair (c, d) of (alpha+1)r - 2*alpha by q+1.

Binomial coefficients come in three exact flavours: rational falling
factorials, residue falling factorials mod p (with 1/2 read as the inverse
of 2, valid for lower index < p), and Lucas digit products.  The closed
forms use integer upper entries reduced through base-p digits, which agrees
with the residue form for alpha < p and stays exact beyond it: the value of
binom(., k) mod p depends on its argument only mod p^L once p^L > k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import BiPolyRZ, RatPoly
from .ff import FieldCtx, FieldElement, compute_z
from .report import PASS, FAIL, CheckReport

__all__ = [
    "PowerSumIndex",
    "CDPair",
    "ThetaPoly",
    "binom_rational",
    "binom_residue",
    "binom_lucas",
    "binom_intmod",
    "binom_generalized",
    "cd_pair",
    "power_sum_t2_closed",
    "power_sum_t1_closed",
    "power_sum_brute",
    "theta_numeric",
    "theta_modp_poly",
    "theta_symbolic",
    "identity_value",
    "verify_identities",
]


# ------------------------------------------------------------- binomials

def binom_rational(x, k: int) -> Fraction:
    """binom(x, k) = x(x-1)...(x-k+1)/k! for exact rational x."""
    if k < 0:
        raise ValueError("negative lower index")
    x = Fraction(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / math.factorial(k)


def binom_residue(x, k: int, p: int) -> int:
    """Falling-factorial binomial with x a residue mod p (or a rational whose
    denominator is invertible mod p).  Needs k < p so that k! is invertible."""
    if k < 0:
        raise ValueError("negative lower index")
    if k >= p:
        raise ValueError(f"residue mode needs lower index < p (got k={k}, p={p})")
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise ValueError(f"denominator of {x} not invertible mod {p}")
        x = x.numerator * pow(x.denominator, -1, p)
    x %= p
    num = 1
    for j in range(k):
        num = num * (x - j) % p
    return num * pow(math.factorial(k), -1, p) % p


def binom_lucas(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p by base-p digit products, for n >= 0."""
    if n < 0 or k < 0:
        raise ValueError("lucas mode needs nonnegative entries")
    out = 1
    while k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * (math.comb(nd, kd) % p) % p
    return out


def binom_intmod(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p for any integer n (negative allowed).

    binom(., k) mod p is periodic in its argument with period p^L whenever
    p^L > k, so reduce n into [0, p^L) and apply the digit product.
    """
    if k < 0:
        raise ValueError("negative lower index")
    period = p
    while period <= k:
        period *= p
    return binom_lucas(n % period, k, p)


def binom_generalized(x, k: int, mode: str = "rational", p: int | None = None):
    """Single entry point over the three binomial flavours."""
    if mode == "rational":
        return binom_rational(x, k)
    if mode == "residue":
        if p is None:
            raise ValueError("residue mode needs p")
        return binom_residue(x, k, p)
    if mode == "lucas":
        if p is None:
            raise ValueError("lucas mode needs p")
        return binom_lucas(x, k, p)
    raise ValueError(f"unknown mode {mode!r}")


# ------------------------------------------------------ (c, d) index pairs

@dataclass(frozen=True)
class CDPair:
    """Quotient/remainder data selecting the surviving bracket terms.

    t2 variant: (alpha+1)r - 2*alpha = c(q+1) - d, 0 <= d < q+1, d even.
    t1 variant: (alpha+1)r - alpha  = c(q+1) - d, 0 <= d < q+1.
    In both, c is the ceiling of the left side divided by q+1.
    """

    c: int
    d: int
    variant: str


def cd_pair(alpha: int, r: int, q: int, variant: str = "t2") -> CDPair:
    if variant == "t2":
        if alpha % 2 == 0 or alpha < 1:
            raise ValueError("t2 pairs are defined for odd alpha >= 1")
        lhs = (alpha + 1) * r - 2 * alpha
    elif variant == "t1":
        if alpha < 0:
            raise ValueError("alpha must be >= 0")
        lhs = (alpha + 1) * r - alpha
    else:
        raise ValueError(f"unknown variant {variant!r}")
    c = -((-lhs) // (q + 1))  # ceiling for either sign
    d = c * (q + 1) - lhs
    if not 0 <= d <= q:
        raise AssertionError("remainder out of range")  # pragma: no cover
    if variant == "t2" and d % 2:
        raise AssertionError("t2 remainder must be even")  # pragma: no cover
    return CDPair(c, d, variant)


# --------------------------------------------------------- exponent index

@dataclass(frozen=True)
class PowerSumIndex:
    """s = alpha + beta*q with 0 <= alpha, beta <= q-1 and 1 <= s <= q^2-2."""

    s: int
    alpha: int
    beta: int

    @classmethod
    def from_s(cls, s: int, q: int) -> "PowerSumIndex":
        if not 1 <= s <= q * q - 2:
            raise ValueError(f"s={s} out of range for q={q}")
        return cls(s, s % q, s // q)

    @classmethod
    def useful(cls, alpha: int, q: int) -> "PowerSumIndex":
        """The exponent with beta = q-1-alpha, the only family that can give
        a nonzero sum."""
        if not 0 <= alpha <= q - 1:
            raise ValueError("alpha out of range")
        return cls.from_s(alpha + (q - 1 - alpha) * q, q)


def _as_index(s, q: int) -> PowerSumIndex:
    if isinstance(s, PowerSumIndex):
        return s
    return PowerSumIndex.from_s(int(s), q)


# ----------------------------------------------------- bracket coefficients

def bracket_coeffs(alpha: int, dhalf: int, halfstep: int, p: int):
    """Coefficient rows of the t=2 bracket, reduced mod p.

    evens[i] multiplies z^(2i), odds[i] multiplies z^(2i+1):
      evens[i] = binom(alpha,i) (-1)^i binom(i + dhalf, alpha)
      odds[i]  = binom(alpha,i) (-1)^i binom(i + dhalf + halfstep, alpha)
    dhalf and halfstep are integer representatives; any representatives that
    are correct mod p^L with p^L > alpha give the same rows.
    """
    evens, odds = [], []
    sign = 1
    for i in range(alpha + 1):
        row = binom_lucas(alpha, i, p)
        if row:
            evens.append(sign * row * binom_intmod(i + dhalf, alpha, p) % p)
            odds.append(sign * row * binom_intmod(i + dhalf + halfstep, alpha, p) % p)
        else:
            evens.append(0)
            odds.append(0)
        sign = -sign
    return evens, odds


def bracket_coeffs_deficient(alpha: int, q: int, p: int):
    """Even-power row of the d = q-1 branch: binom(alpha,i)(-1)^i
    binom(i + (q-1)/2, alpha)."""
    dh = (q - 1) // 2
    out = []
    sign = 1
    for i in range(alpha + 1):
        row = binom_lucas(alpha, i, p)
        out.append(sign * row * binom_intmod(i + dh, alpha, p) % p if row else 0)
        sign = -sign
    return out


def _horner_sub(coeffs, y_idx: int, sub: FieldCtx) -> int:
    """Evaluate sum coeffs[i] * y^i in the subfield (coeffs are residues)."""
    acc = 0
    for c in reversed(coeffs):
        acc = sub.add(sub.mul(acc, y_idx), c)
    return acc


# ------------------------------------------------------------ closed forms

def power_sum_t2_closed(r: int, a: FieldElement, s) -> FieldElement:
    """Sum of f(x)^s over F_{q^2} for f = x^r (a + x^(2(q-1))), in closed form.

    Requires q odd, gcd(r, q-1) = 1, a != 0.  Zero unless alpha is odd and
    alpha + beta = q-1; otherwise the three-branch bracket formula in z.
    """
    ctx2 = a.ctx
    sub = ctx2.base
    if sub is None:
        raise ValueError("a must live in the quadratic extension")
    q = sub.order
    p = ctx2.char
    if q % 2 == 0:
        raise ValueError("closed form requires odd q")
    if math.gcd(r, q - 1) != 1:
        raise ValueError("closed form requires gcd(r, q-1) = 1")
    if a.idx == 0:
        raise ValueError("a must be nonzero")
    idx = _as_index(s, q)
    alpha, beta = idx.alpha, idx.beta
    if alpha % 2 == 0 or alpha + beta != q - 1:
        return ctx2.zero()
    pair = cd_pair(alpha, r, q, "t2")
    d = pair.d
    n = ctx2.order - 1
    z = compute_z(a)
    y = ctx2.mul(z.idx, z.idx)
    if not ctx2.in_subfield(y):  # pragma: no cover - z^2 is always in F_q
        raise AssertionError("z^2 outside the subfield")
    if d == q - 1:
        evens = bracket_coeffs_deficient(alpha, q, p)
        e_val = _horner_sub(evens, y, sub)
        pref = ctx2.pow(a.idx, (alpha + 1) % n)
        out = ctx2.neg(ctx2.mul(ctx2.mul(pref, z.idx), e_val))
        return FieldElement(ctx2, out)
    dh = d // 2
    evens, odds = bracket_coeffs(alpha, dh, (q + 1) // 2, p)
    e_val = _horner_sub(evens, y, sub)
    o_val = _horner_sub(odds, y, sub)
    bracket = ctx2.add(e_val, ctx2.mul(z.idx, o_val))
    pref = ctx2.pow(a.idx, (alpha + 1 - q * (1 + dh)) % n)
    out = ctx2.mul(pref, bracket)
    if dh % 2:
        out = ctx2.neg(out)
    return FieldElement(ctx2, out)


def power_sum_t1_closed(r: int, a: FieldElement, s) -> FieldElement:
    """Sum of g(x)^s over F_{q^2} for g = x^r (a + x^(q-1)), in closed form.

    Requires gcd(r, q-1) = 1, a != 0; valid for even q as well.  Zero unless
    alpha + beta = q-1 and the remainder d is < q.
    """
    ctx2 = a.ctx
    sub = ctx2.base
    if sub is None:
        raise ValueError("a must live in the quadratic extension")
    q = sub.order
    p = ctx2.char
    if math.gcd(r, q - 1) != 1:
        raise ValueError("closed form requires gcd(r, q-1) = 1")
    if a.idx == 0:
        raise ValueError("a must be nonzero")
    idx = _as_index(s, q)
    alpha, beta = idx.alpha, idx.beta
    if alpha + beta != q - 1:
        return ctx2.zero()
    pair = cd_pair(alpha, r, q, "t1")
    d = pair.d
    if d == q:
        return ctx2.zero()
    n = ctx2.order - 1
    nrm = ctx2.pow(a.idx, q + 1)
    h = sub.inv(nrm)  # a^(-(q+1)), an element of F_q
    coeffs = []
    sign = 1
    for i in range(alpha + 1):
        row = binom_lucas(alpha, i, p)
        coeffs.append(sign * row * binom_intmod(i + d, alpha, p) % p if row else 0)
        sign = -sign
    t_val = _horner_sub(coeffs, h, sub)
    pref = ctx2.pow(a.idx, (alpha + 1 - q * (1 + d)) % n)
    out = ctx2.mul(pref, t_val)
    if (alpha + d + 1) % 2:
        out = ctx2.neg(out)
    return FieldElement(ctx2, out)


def power_sum_brute(r: int, t: int, a: FieldElement, s: int) -> FieldElement:
    """The oracle: literally sum f(x)^s over every x in F_{q^2}.

    No algebraic shortcuts beyond table lookups for the field arithmetic;
    cost is one evaluation per field element.
    """
    ctx2 = a.ctx
    if ctx2.base is None:
        raise ValueError("a must live in the quadratic extension")
    if a.idx == 0:
        raise ValueError("a must be nonzero")
    if r < 1 or t < 1 or s < 1:
        raise ValueError("r, t, s must be positive")
    q = ctx2.base.order
    n = ctx2.order - 1
    te = t * (q - 1) % n
    exp = ctx2._exp
    log = ctx2._log
    add = ctx2.add
    a_idx = a.idx
    counts = [0] * n
    for k in range(n):
        u = add(a_idx, exp[te * k % n])
        if u == 0:
            continue  # f(x) = 0 contributes nothing
        counts[(r * k + log[u]) * s % n] += 1
    # x = 0 contributes f(0)^s = 0 since r >= 1, s >= 1
    p = ctx2.char
    digs = [0] * ctx2.prime_power.m
    for j, c in enumerate(counts):
        c %= p
        if not c:
            continue
        v = exp[j]
        t_pos = 0
        while v:
            v, dd = divmod(v, p)
            digs[t_pos] += c * dd
            t_pos += 1
    out = 0
    mult = 1
    for dd in digs:
        out += (dd % p) * mult
        mult *= p
    return FieldElement(ctx2, out)


# ----------------------------------------------------------- theta brackets

@dataclass(frozen=True)
class ThetaPoly:
    """Symbolic bracket for odd alpha: a polynomial in z over Q[r] of
    z-degree 2*alpha+1 and r-degree alpha."""

    alpha: int
    poly: BiPolyRZ


def _binom_affine_poly(c0: Fraction, c1: Fraction, k: int) -> RatPoly:
    """binom(c0 + c1*r, k) expanded as a polynomial in r over Q."""
    acc = RatPoly.const(1)
    for j in range(k):
        acc = acc * RatPoly((c0 - j, c1))
    return acc * RatPoly.const(Fraction(1, math.factorial(k)))


def theta_symbolic(alpha: int) -> ThetaPoly:
    """The bracket sum with its index data left symbolic in r (the c = 1
    regime), exact over Q.  Entries are i + 1/2 + alpha - (alpha+1)r/2 for
    z^(2i) and i + 1 + alpha - (alpha+1)r/2 for z^(2i+1)."""
    if alpha < 1 or alpha % 2 == 0:
        raise ValueError("alpha must be odd and >= 1")
    half = Fraction(1, 2)
    slope = -Fraction(alpha + 1, 2)
    terms = []
    for i in range(alpha + 1):
        sgn = math.comb(alpha, i) * (-1) ** i
        e1 = _binom_affine_poly(Fraction(i) + half + alpha, slope, alpha)
        e2 = _binom_affine_poly(Fraction(i + 1) + alpha, slope, alpha)
        terms.append((2 * i, e1 * sgn))
        terms.append((2 * i + 1, e2 * sgn))
    return ThetaPoly(alpha, BiPolyRZ.from_z_terms(terms))


def theta_modp_poly(alpha: int, dhalf: int, p: int, halfstep: int | None = None) -> list[int]:
    """The bracket as a polynomial in z over F_p, for a residue representative
    dhalf of d/2 (taken mod p^L with p^L > alpha)."""
    if halfstep is None:
        period = p
        while period <= alpha:
            period *= p
        halfstep = (period + 1) // 2
    evens, odds = bracket_coeffs(alpha, dhalf, halfstep, p)
    out = [0] * (2 * alpha + 2)
    for i in range(alpha + 1):
        out[2 * i] = evens[i]
        out[2 * i + 1] = odds[i]
    while out and not out[-1]:
        out.pop()
    return out


def theta_numeric(alpha: int, dhalf, z: FieldElement, halfstep: int | None = None) -> FieldElement:
    """Evaluate the bracket at a concrete field value z.

    dhalf may be an integer representative or a Fraction such as 1/2 (whose
    denominator is inverted mod p^L with p^L > alpha).
    """
    p = z.ctx.char
    period = p
    while period <= alpha:
        period *= p
    if isinstance(dhalf, Fraction):
        if math.gcd(dhalf.denominator, p) != 1:
            raise ValueError("dhalf denominator not invertible")
        dhalf = dhalf.numerator * pow(dhalf.denominator, -1, period) % period
    coeffs = theta_modp_poly(alpha, dhalf, p, halfstep)
    ctx = z.ctx
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, z.idx), c)
    return FieldElement(ctx, acc)


# ------------------------------------------------- exact rational identities

def identity_value(alpha: int, which: str) -> Fraction:
    """One of the two exact rational bracket identities (they vanish for all
    odd alpha; the first drives the (r, z) = (1, 1/3) family, the second the
    (3, 3) family)."""
    if alpha < 1 or alpha % 2 == 0:
        raise ValueError("alpha must be odd and >= 1")
    if which == "id310":
        x = Fraction(1, 3)
        e1 = lambda i: Fraction(i) + Fraction(alpha - 1, 2)
        e2 = lambda i: Fraction(i) + Fraction(alpha, 2)
    elif which == "id311":
        x = Fraction(3)
        e1 = lambda i: Fraction(i) - 1 - Fraction(alpha, 2)
        e2 = lambda i: Fraction(i) - Fraction(alpha + 1, 2)
    else:
        raise ValueError(f"unknown identity {which!r}")
    total = Fraction(0)
    xp = Fraction(1)  # x^(2i)
    x2 = x * x
    for i in range(alpha + 1):
        sgn = math.comb(alpha, i) * (-1) ** i
        total += sgn * (binom_rational(e1(i), alpha) * xp + binom_rational(e2(i), alpha) * xp * x)
        xp *= x2
    return total


def verify_identities(alpha_max: int, which: str = "both") -> list[CheckReport]:
    """Evaluate the identities for every odd alpha <= alpha_max and report
    exact vanishing."""
    names = ("id310", "id311") if which == "both" else (which,)
    reports = []
    for name in names:
        bad = []
        for alpha in range(1, alpha_max + 1, 2):
            v = identity_value(alpha, name)
            if v != 0:
                bad.append((alpha, v))
        if bad:
            reports.append(
                CheckReport(f"identities.{name}.max{alpha_max}", FAIL, "0 for all odd alpha",
                            f"nonzero at {bad[:3]}")
            )
        else:
            reports.append(
                CheckReport(f"identities.{name}.max{alpha_max}", PASS,
                            "0 for all odd alpha", "0 for all odd alpha")
            )
    return reports

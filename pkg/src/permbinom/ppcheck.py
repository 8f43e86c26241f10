"""Permutation tests for f(x) = x^r (a + x^(t(q-1))) on F_{q^2}.

Two routes: a literal evaluate-everything check, and a power-sum criterion
that never touches individual field points.  A map on a field of order Q is
a bijection iff it has exactly one root and all power sums of exponent
1..Q-2 vanish; for these binomials the root count reduces to one norm
condition and the only sums that can survive are the closed-form brackets,
so the fast test is O(q * bracket length) per parameter set instead of
O(q^2).

For t = 2 everything a contributes to the verdict factors through
z = (-a)^(-q(q+1)/2): the root condition is z != 1 and each bracket is
E(z^2) + z*O(z^2) with E, O over F_q.  Since z^2 is always in F_q, a
verdict needs only F_q arithmetic; when z is outside F_q the bracket
vanishes iff E and O both do.  The sweep helpers exploit this to test every
a of a large field through at most 2(q-1) distinct z values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .ff import FieldCtx, FieldElement, build_subfield, compute_z, enumeration_cap
from .powersum import (
    PowerSumIndex,
    bracket_coeffs,
    bracket_coeffs_deficient,
    binom_intmod,
    binom_lucas,
    cd_pair,
    _horner_sub,
)

__all__ = [
    "BinomialParams",
    "Collision",
    "NonzeroPowerSum",
    "RootCountExcess",
    "PPVerdict",
    "FamilyTag",
    "NormalizeTrace",
    "normalize",
    "is_pp_brute",
    "is_pp_powersum",
    "classify_family",
    "thm21_bound",
    "t2_z_first_failure",
    "t2_passing_z",
    "expand_z_to_a",
]

FAMILY_ORDER = ("family_i", "family_iii", "family_iv", "thm42", "family_ii")


class BinomialParams:
    """Parameters (q, r, t, a) of one binomial, with the derived z cached."""

    __slots__ = ("a", "r", "t", "_z")

    def __init__(self, a: FieldElement, r: int, t: int):
        ctx2 = a.ctx
        if ctx2.base is None:
            raise ValueError("a must live in the quadratic extension")
        q = ctx2.base.order
        if not 1 <= r <= q * q - 2:
            raise ValueError(f"r={r} out of range 1..{q*q-2}")
        if not 1 <= t <= q:
            raise ValueError(f"t={t} out of range 1..{q}")
        if a.idx == 0:
            raise ValueError("a must be nonzero")
        self.a = a
        self.r = r
        self.t = t
        self._z = None

    @property
    def ctx2(self) -> FieldCtx:
        return self.a.ctx

    @property
    def sub(self) -> FieldCtx:
        return self.a.ctx.base

    @property
    def q(self) -> int:
        return self.sub.order

    @property
    def p(self) -> int:
        return self.a.ctx.char

    @property
    def z(self) -> FieldElement:
        """The derived value for t = 2 (requires odd q)."""
        if self._z is None:
            self._z = compute_z(self.a)
        return self._z

    def describe(self) -> dict:
        d = self.ctx2.describe()
        return {
            "p": self.p,
            "m": self.sub.prime_power.m,
            "q": self.q,
            "r": self.r,
            "t": self.t,
            "a": self.a.text,
            "modulus": d["modulus"],
        }

    def __repr__(self):
        return f"BinomialParams(q={self.q}, r={self.r}, t={self.t}, a={self.a.text})"


@dataclass(frozen=True)
class Collision:
    """Two distinct points with the same image; re-checked on construction."""

    x1: FieldElement
    x2: FieldElement
    value: FieldElement

    def __post_init__(self):
        if self.x1 == self.x2:
            raise ValueError("collision needs distinct points")


@dataclass(frozen=True)
class NonzeroPowerSum:
    s: int
    alpha: int


@dataclass(frozen=True)
class RootCountExcess:
    count: int


@dataclass(frozen=True)
class PPVerdict:
    is_pp: bool
    method: str
    witness: object = None
    note: str = ""


@dataclass(frozen=True)
class FamilyTag:
    """Classification against the known infinite families.

    tag is one of family_i..family_iv, thm42, sporadic, not_pp; fired lists
    every predicate that holds (families can overlap in their -1 branches).
    """

    tag: str
    fired: tuple


@dataclass(frozen=True)
class NormalizeTrace:
    steps: tuple
    pp_equivalent: bool


def _eval_f(ctx2: FieldCtx, r: int, t: int, a_idx: int, k: int, te: int, n: int) -> int:
    """f(g^k) as an index, via exp/log tables."""
    u = ctx2.add(a_idx, ctx2._exp[te * k % n])
    if u == 0:
        return 0
    return ctx2._exp[(r * k + ctx2._log[u]) % n]


def is_pp_brute(params: BinomialParams) -> PPVerdict:
    """Evaluate f on every element; bijection iff no collision.

    The first collision found in enumeration order (g^0, g^1, ..., 0) is
    returned as a witness.
    """
    ctx2 = params.ctx2
    Q = ctx2.order
    if Q > enumeration_cap():
        raise ValueError("field too large for brute-force enumeration")
    n = Q - 1
    q = params.q
    r, t, a_idx = params.r, params.t, params.a.idx
    te = t * (q - 1) % n
    preimage = [-1] * Q  # log index of the first preimage; n means x = 0
    preimage[0] = n
    exp = ctx2._exp
    log = ctx2._log
    add = ctx2.add
    for k in range(n):
        u = add(a_idx, exp[te * k % n])
        fx = 0 if u == 0 else exp[(r * k + log[u]) % n]
        prev = preimage[fx]
        if prev >= 0:
            x1 = ctx2.zero() if prev == n else ctx2.element(exp[prev])
            x2 = ctx2.element(exp[k])
            value = ctx2.element(fx)
            return PPVerdict(False, "brute", Collision(x1, x2, value))
        preimage[fx] = k
    return PPVerdict(True, "brute")


def _root_excess(params: BinomialParams) -> int | None:
    """Number of roots of f beyond x = 0, decided algebraically: nonzero roots
    exist iff (-a)^((q+1)/gcd(q+1,t)) = 1, and then there are (q-1)*gcd(t, q+1)
    of them."""
    ctx2, q, t = params.ctx2, params.q, params.t
    g = math.gcd(q + 1, t)
    w = ctx2.pow(ctx2.neg(params.a.idx), (q + 1) // g)
    if w == 1:
        return (q - 1) * g
    return None


def t2_z_first_failure(sub: FieldCtx, q: int, r: int, y_idx: int, z_sub_idx: int | None) -> int | None:
    """First odd alpha whose closed-form sum is nonzero, or None if all vanish.

    y_idx is z^2 as an F_q index; z_sub_idx is z itself when z lies in F_q,
    None when it does not (then a bracket vanishes iff both of its halves do).
    """
    p = sub.char
    for alpha in range(1, q - 1, 2):
        d = cd_pair(alpha, r, q, "t2").d
        if d == q - 1:
            evens = bracket_coeffs_deficient(alpha, q, p)
            if _horner_sub(evens, y_idx, sub) != 0:
                return alpha
            continue
        evens, odds = bracket_coeffs(alpha, d // 2, (q + 1) // 2, p)
        e_val = _horner_sub(evens, y_idx, sub)
        o_val = _horner_sub(odds, y_idx, sub)
        if z_sub_idx is not None:
            if sub.add(e_val, sub.mul(z_sub_idx, o_val)) != 0:
                return alpha
        else:
            if e_val != 0 or o_val != 0:
                return alpha
    return None


def is_pp_powersum(params: BinomialParams) -> PPVerdict:
    """Power-sum permutation test; t in {1, 2} only.

    gcd(r, q-1) = 1 is necessary for any permutation binomial of this shape,
    so its failure is a not_pp verdict rather than an error.  t = 2 requires
    odd q (the closed form does).
    """
    q, r, t = params.q, params.r, params.t
    ctx2, sub = params.ctx2, params.sub
    p = params.p
    if t not in (1, 2):
        raise ValueError("power-sum test covers t in {1, 2} only")
    if t == 2 and q % 2 == 0:
        raise ValueError("t = 2 power-sum test requires odd q")
    if math.gcd(r, q - 1) != 1:
        return PPVerdict(False, "powersum", None, "gcd(r, q-1) > 1")
    excess = _root_excess(params)
    if excess is not None:
        return PPVerdict(False, "powersum", RootCountExcess(1 + excess))
    if t == 2:
        nrm = ctx2.pow(params.a.idx, q + 1)
        y = sub.inv(nrm)  # z^2 = a^(-(q+1))
        w = ctx2.pow(ctx2.neg(params.a.idx), (q + 1) // 2)
        z_sub = sub.inv(w) if ctx2.in_subfield(w) else None
        alpha = t2_z_first_failure(sub, q, r, y, z_sub)
        if alpha is not None:
            s = PowerSumIndex.useful(alpha, q)
            return PPVerdict(False, "powersum", NonzeroPowerSum(s.s, alpha))
        return PPVerdict(True, "powersum")
    # t = 1
    nrm = ctx2.pow(params.a.idx, q + 1)
    h = sub.inv(nrm)
    for alpha in range(q):
        d = cd_pair(alpha, r, q, "t1").d
        if d == q:
            continue
        coeffs = []
        sign = 1
        for i in range(alpha + 1):
            row = binom_lucas(alpha, i, p)
            coeffs.append(sign * row * binom_intmod(i + d, alpha, p) % p if row else 0)
            sign = -sign
        if _horner_sub(coeffs, h, sub) != 0:
            s = PowerSumIndex.useful(alpha, q)
            return PPVerdict(False, "powersum", NonzeroPowerSum(s.s, alpha))
    return PPVerdict(True, "powersum")


def thm21_bound(r: int, p: int) -> int:
    """Nonexistence threshold on q for t = 2 with a of norm != 1, by case on
    r mod p: r = 3 gives r^2-4r+5; p = 3 or r = 7/4 gives 8r-15; else 6r-11."""
    if p == 2:
        raise ValueError("p must be an odd prime")
    if r <= 3 or r % 2 == 0:
        raise ValueError("bound is defined for odd r > 3")
    if (r - 3) % p == 0:
        return r * r - 4 * r + 5
    if p == 3 or (4 * r - 7) % p == 0:
        return 8 * r - 15
    return 6 * r - 11


def normalize(params: BinomialParams) -> tuple[BinomialParams, NormalizeTrace]:
    """Fold out the characteristic from t and divide by gcd(r, t).

    Each step composes with a power map x^p or x^d; x^p is always a bijection
    of F_{q^2}, x^d only when gcd(d, q^2-1) = 1.  The trace records whether
    permutation-ness is preserved through every step.
    """
    q, p = params.q, params.p
    n = q * q - 1
    r, t = params.r, params.t
    steps = []
    while t % p == 0:
        r_new = r * pow(p, -1, n) % n
        steps.append(("frobenius-fold", {"r": r, "t": t, "r_new": r_new, "t_new": t // p}, True))
        r, t = r_new, t // p
    d = math.gcd(r, t)
    if d > 1:
        ok = math.gcd(d, n) == 1
        steps.append(("power-compose", {"d": d, "r_new": r // d, "t_new": t // d}, ok))
        r, t = r // d, t // d
    out = BinomialParams(params.a, r, t) if (r, t) != (params.r, params.t) else params
    return out, NormalizeTrace(tuple(steps), all(s[2] for s in steps))


def _is_pp(params: BinomialParams) -> PPVerdict:
    if params.ctx2.order <= enumeration_cap():
        return is_pp_brute(params)
    if params.t in (1, 2):
        return is_pp_powersum(params)
    raise ValueError("parameters too large to test")


def classify_family(params: BinomialParams) -> FamilyTag:
    """Match the parameters against the known infinite families.

    Every predicate that holds is recorded; the tag is the first holder in a
    fixed precedence order, sporadic if the map permutes but nothing fired,
    not_pp if it does not permute.  For t > 2 only the norm-one family
    applies.
    """
    ctx2, sub = params.ctx2, params.sub
    q, r, t, p = params.q, params.r, params.t, params.p
    a_idx = params.a.idx
    fired = []
    norm_one = ctx2.pow(a_idx, q + 1) == 1
    gcd_r = math.gcd(r, q - 1) == 1
    g = math.gcd(q + 1, t)
    root_ok = ctx2.pow(ctx2.neg(a_idx), (q + 1) // g) != 1
    if norm_one and gcd_r and math.gcd(r - t, q + 1) == 1 and root_ok:
        fired.append("family_i")
    if t == 2 and q % 2 == 1:
        w = ctx2.pow(ctx2.neg(a_idx), (q + 1) // 2)
        if r == 1 and w == ctx2.embed_int(3) and p != 3:
            fired.append("family_iii")
        if r == 3 and p != 3 and (q - 1) % 3 != 0 and w == ctx2.pow(ctx2.embed_int(3), -1):
            fired.append("family_iv")
    if t == 1 and gcd_r and (r - 1) % (q + 1) == 0 and not norm_one:
        fired.append("thm42")
        fired.append("family_ii")
    verdict = _is_pp(params)
    if not verdict.is_pp:
        return FamilyTag("not_pp", tuple(fired))
    for name in FAMILY_ORDER:
        if name in fired:
            return FamilyTag(name, tuple(fired))
    return FamilyTag("sporadic", tuple(fired))


# ------------------------------------------------------- z-level sweeping

@lru_cache(maxsize=128)
def _subfield_cached(p: int, m: int) -> FieldCtx:
    return build_subfield(p, m)


def _nonsquares(sub: FieldCtx) -> list[int]:
    """Nonsquare elements of F_q*, in index order."""
    q = sub.order
    if q % 2 == 0:
        return []
    half = (q - 1) // 2
    return [i for i in range(1, q) if sub.pow(i, half) != 1]


def t2_passing_z(p: int, m: int, r: int, include_norm_one: bool = False) -> list[tuple]:
    """All z values whose parameters pass the t = 2 power-sum test, for every
    a in F_{q^2}* at once.

    The verdict for a is a pure function of z(a), and z ranges exactly over
    the elements with z^2 in F_q*: the q-1 elements of F_q* plus the two
    square roots of each nonsquare.  Descriptors returned:
      ('sub', z_idx): z in F_q*, as an F_q index
      ('ext', y_idx): the pair of square roots of the nonsquare y.
    a has norm one iff z = +-1; z = 1 never passes (extra roots), z = -1 is
    included only when include_norm_one is set.
    """
    sub = _subfield_cached(p, m)
    q = sub.order
    if q % 2 == 0:
        raise ValueError("t = 2 sweep requires odd q")
    if math.gcd(r, q - 1) != 1:
        return []
    hits = []
    minus_one = sub.neg(1)
    for z in range(1, q):
        if z == 1:
            continue  # root-count failure
        if z == minus_one and not include_norm_one:
            continue
        y = sub.mul(z, z)
        if t2_z_first_failure(sub, q, r, y, z) is None:
            hits.append(("sub", z))
    for y in _nonsquares(sub):
        if t2_z_first_failure(sub, q, r, y, None) is None:
            hits.append(("ext", y))
    return hits


def expand_z_to_a(ctx2: FieldCtx, zdesc: tuple) -> list[tuple[int, FieldElement]]:
    """All a in F_{q^2}* whose derived value is the given z, as (dlog a, a).

    Inverts a -> w = (-a)^((q+1)/2) -> z = w^(-q): each z has exactly
    (q+1)/2 preimages.
    """
    sub = ctx2.base
    q = sub.order
    n = ctx2.order - 1
    kind, idx = zdesc
    if kind == "sub":
        z_idx = idx  # already an F_{q^2} index via the subfield embedding
        zs = [z_idx]
    else:
        # the two square roots of the nonsquare y, found on the exp table:
        # dlog(y) is odd in F_q^* terms; in F_{q^2}, y = g^(j*(q+1)) and the
        # roots are g^(j*(q+1)/2) and its negative.
        y_log2 = ctx2.dlog(idx)
        root = ctx2.exp(y_log2 // 2) if y_log2 % 2 == 0 else None
        if root is None:  # pragma: no cover - y has even dlog in F_{q^2}
            raise AssertionError("nonsquare of F_q is a square in F_{q^2}")
        zs = [root, ctx2.neg(root)]
    out = []
    e = (q + 1) // 2
    for z_idx in zs:
        w = ctx2.pow(z_idx, -q)
        wl = ctx2.dlog(w)
        if wl % e:  # pragma: no cover - w is always an e-th power
            raise AssertionError("w outside the image of the half-power map")
        j0 = wl // e
        step = n // e
        for ktimes in range(e):
            j = (j0 + ktimes * step) % n
            minus_a = ctx2.exp(j)
            a_idx = ctx2.neg(minus_a)
            out.append((ctx2.dlog(a_idx), ctx2.element(a_idx)))
    out.sort(key=lambda pair: pair[0])
    return out

"""Regenerate every constant in the registry from scratch and compare.

One suite per block of reference material: the symbolic bracket expansions
and their resultants (sec5), the r = 3/2 specializations (sec5r32), the
prime-power-index binomial identity (sec6), the mod-3 material (sec7p3),
the mod-181 material (sec7p181), and the two exact rational identities
(identities).  Comparisons are one-way: computed objects against registry
literals, bit for bit.  Primality verdicts are 'probable' and reported as
such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    Factorization,
    IntPoly,
    RatPoly,
    BiPolyRZ,
    gcd_irred_mod_p,
    mp_gcd,
    mp_mul,
    mp_resultant,
    primality_and_factor_check,
    resultant_bivar_z,
    resultant_univar,
    to_modp,
)
from .ff import build_subfield
from .powersum import (
    binom_intmod,
    cd_pair,
    theta_modp_poly,
    theta_numeric,
    theta_symbolic,
    verify_identities,
)
from .registry import REG, verify_checksums
from .report import FAIL, PASS, PROBABLE, CheckReport, check

__all__ = [
    "Sec6Instance",
    "sec5_check",
    "sec5_r32_check",
    "sec6_check",
    "sec6_suite",
    "sec7_p3_check",
    "sec7_p181_check",
    "identities_check",
    "run_suite",
    "SUITES",
]


def _expand_factored(prefactor: Fraction, factors) -> RatPoly:
    acc = RatPoly.const(prefactor)
    for poly, mult in factors:
        acc = acc * poly.to_rat() ** mult
    return acc


def _expand_modp(factors, p: int, scalar: int = 1) -> list[int]:
    acc = [scalar % p]
    for item in factors:
        poly, mult = item if isinstance(item, tuple) else (item, 1)
        for _ in range(mult):
            acc = mp_mul(acc, to_modp(poly, p), p)
    return acc


def _zcheck(check_id: str, expected, computed, notes: str = "") -> CheckReport:
    """Equality check on polynomials in z, rendered with the right variable."""
    ok = expected == computed
    return CheckReport(check_id, PASS if ok else FAIL,
                       expected.render("z"), computed.render("z"), notes)


def _prime_reports(prefix: str, fact: Factorization) -> list[CheckReport]:
    out = []
    for base, _ in fact.factors:
        verdict = primality_and_factor_check(base)
        status = PROBABLE if verdict == "probable-prime" else FAIL
        out.append(CheckReport(f"{prefix}.prime.{base}", status, "probable-prime", verdict))
    return out


def sec5_check() -> list[CheckReport]:
    """Symbolic bracket expansions, their z-resultants, and the two integer
    eliminant resultants."""
    reports = []
    bad = verify_checksums()
    reports.append(check("sec5.registry-checksums", [], bad))

    one_plus_z = BiPolyRZ([RatPoly.const(1), RatPoly.const(1)])
    for alpha, target in ((1, REG.A1), (3, REG.A3), (5, REG.A5)):
        th = theta_symbolic(alpha)
        expected = one_plus_z * target * REG.theta_prefactors[alpha]
        note = ""
        if alpha == 5:
            note = ("reference text labels this expansion with index 3; "
                    "content is the index-5 expansion and is verified as such")
        reports.append(
            CheckReport(
                f"sec5.theta.{alpha}",
                PASS if th.poly == expected else FAIL,
                f"prefactor {REG.theta_prefactors[alpha]} * (1+z) * A{alpha}",
                "match" if th.poly == expected else th.poly.render(),
                note,
            )
        )
        cof = th.poly.divexact_z(one_plus_z)
        reports.append(
            check(f"sec5.theta.{alpha}.cofactor", target,
                  cof * (1 / REG.theta_prefactors[alpha]))
        )

    pairs = (
        ("sec5.R13", REG.A1, REG.A3 * Fraction(1, 3), REG.R13),
        ("sec5.R15", REG.A1, REG.A5 * Fraction(1, 5), REG.R15),
        ("sec5.R35", REG.A3 * Fraction(1, 3), REG.A5 * Fraction(1, 5), REG.R35),
    )
    for cid, F, G, (pref, factors) in pairs:
        computed = resultant_bivar_z(F, G)
        expected = _expand_factored(pref, factors)
        reports.append(
            CheckReport(cid, PASS if computed == expected else FAIL,
                        f"{pref} * {' * '.join(f'({p.render()})^{m}' for p, m in factors)}",
                        "match" if computed == expected else computed.render())
        )

    r1 = resultant_univar(REG.h13, REG.h15)
    reports.append(check("sec5.res.h13-h15", REG.res_h13_h15.value(), r1))
    reports.append(
        check("sec5.res.h13-h15.factored", "verified-probable",
              primality_and_factor_check(r1, REG.res_h13_h15))
    )
    r2 = resultant_univar(REG.h13, REG.h35)
    reports.append(
        CheckReport(
            "sec5.res.h13-h35",
            PASS if -r2 == REG.res_h13_h35.value() else FAIL,
            str(REG.res_h13_h35.value()),
            str(r2),
            "reference text displays the magnitude; the resultant itself is "
            "negative (confirmed by three independent exact methods)",
        )
    )
    neg_claim = Factorization(-1, REG.res_h13_h35.factors)
    reports.append(
        check("sec5.res.h13-h35.factored", "verified-probable",
              primality_and_factor_check(r2, neg_claim))
    )
    reports.extend(_prime_reports("sec5", REG.res_h13_h15))
    reports.extend(_prime_reports("sec5", REG.res_h13_h35))
    reports.append(check("sec5.h35.degree", 28, REG.h35.degree))
    reports.append(check("sec5.h35.lc", 21119053438918950050070528, REG.h35.lc))
    return reports


def sec5_r32_check() -> list[CheckReport]:
    """Exact specializations of the bracket cofactors at r = 3/2."""
    reports = []
    A1v = REG.A1.eval_r(Fraction(3, 2))
    reports.append(_zcheck("sec5r32.A1", (IntPoly((0, 1)) * IntPoly((-1, 3)) * -1).to_rat(), A1v))
    A3v = REG.A3.eval_r(Fraction(3, 2))
    reports.append(_zcheck("sec5r32.A3", (REG.A3_at_3_2 * -3).to_rat(), A3v))
    A5v = REG.A5.eval_r(Fraction(3, 2))
    reports.append(_zcheck("sec5r32.A5", (IntPoly((0, 1)) * REG.A5_at_3_2 * -5).to_rat(), A5v))
    reports.append(check("sec5r32.A3-at-third", REG.A3_at_3_2_value, A3v.eval(Fraction(1, 3))))
    reports.append(check("sec5r32.A5-at-third", REG.A5_at_3_2_value, A5v.eval(Fraction(1, 3))))
    return reports


@dataclass(frozen=True)
class Sec6Instance:
    """One instance of the prime-power-index identity: r = k*p^l + 3 with the
    sum index alpha = p^l, over a field of order q = p^m large enough that the
    quotient c equals 1."""

    p: int
    l: int
    k: int
    q: int

    def __post_init__(self):
        if self.l < 1 or not 1 <= self.k < self.p or self.k % self.p == 0:
            raise ValueError("need l >= 1 and 1 <= k < p")
        if self.r % 2 == 0:
            raise ValueError("r = k*p^l + 3 must be odd (k must be even)")
        qq = self.q
        while qq % self.p == 0:
            qq //= self.p
        if qq != 1:
            raise ValueError("q must be a power of p")
        if self.q < self.r * self.r - 4 * self.r + 5:
            raise ValueError("q below the quotient-1 threshold")
        if cd_pair(self.p**self.l, self.r, self.q, "t2").c != 1:
            raise ValueError("instance does not sit in the c = 1 regime")

    @property
    def r(self) -> int:
        return self.k * self.p**self.l + 3

    @property
    def alpha(self) -> int:
        return self.p**self.l


def sec6_check(inst: Sec6Instance) -> list[CheckReport]:
    """The four-term binomial identity at alpha = p^l, z = 3.

    With r and with r replaced by 3 the four upper entries differ by
    k p^l (p^l+1)/2, so each binomial pair differs by k/2 mod p and the two
    expressions differ by (k/2)(1+z)^(p^l+1)(1-z)^(p^l).  The r = 3 form
    vanishes mod p (it is a reduction of the exact rational identity), which
    pins the r form to the product value.
    """
    p, l, k, q = inst.p, inst.l, inst.k, inst.q
    alpha, r = inst.alpha, inst.r
    tag = f"sec6.p{p}.l{l}.k{k}.q{q}"
    dh = (q + 1) // 2 + alpha - r * (alpha + 1) // 2
    pair = cd_pair(alpha, r, q, "t2")
    reports = [check(f"{tag}.index-data", (1, 2 * dh), (pair.c, pair.d))]
    if not 0 <= pair.d < q - 1:
        reports.append(CheckReport(f"{tag}.d-range", FAIL, "0 <= d < q-1", str(pair.d)))
        return reports

    half_r = r * (alpha + 1) // 2
    half_3 = 3 * (alpha + 1) // 2
    ent_r = [dh, 1 + alpha - half_r, dh + alpha, 1 + 2 * alpha - half_r]
    ent_3 = [(q + 1) // 2 + alpha - half_3, 1 + alpha - half_3,
             (q + 1) // 2 + 2 * alpha - half_3, 1 + 2 * alpha - half_3]
    signs = (1, 1, -1, -1)

    def four_term(entries, z):
        zp = (1, z % p, pow(z, 2 * alpha, p), pow(z, 2 * alpha + 1, p))
        return sum(s * binom_intmod(e, alpha, p) * w
                   for s, e, w in zip(signs, entries, zp)) % p

    L62 = four_term(ent_r, 3)
    L63 = four_term(ent_3, 3)
    khalf = k * pow(2, -1, p) % p
    reports.append(check(f"{tag}.r3-form-vanishes", 0, L63))
    diffs = [(binom_intmod(e3, alpha, p) - binom_intmod(er, alpha, p)) % p
             for e3, er in zip(ent_3, ent_r)]
    reports.append(check(f"{tag}.pair-differences", [khalf] * 4, diffs))
    product = khalf * pow(1 + 3, alpha + 1, p) * pow(1 - 3, alpha, p) % p
    reports.append(check(f"{tag}.product-form", product, (L63 - L62) % p))
    # z = 1 kills the product: the two four-term forms coincide there
    reports.append(check(f"{tag}.z1-degenerate", four_term(ent_3, 1), four_term(ent_r, 1)))
    return reports


def sec6_suite(ps=(5, 7, 11), ls=(1, 2), cap: int | None = None) -> list[CheckReport]:
    """Every valid instance with p in ps, l in ls, k < p, q <= cap."""
    from .ff import enumeration_cap

    cap = enumeration_cap() if cap is None else cap
    reports = []
    count = 0
    for p in ps:
        for l in ls:
            for k in range(2, p, 2):  # r odd requires k even
                r = k * p**l + 3
                threshold = r * r - 4 * r + 5
                q = p
                while q <= cap:
                    if q >= threshold:
                        reports.extend(sec6_check(Sec6Instance(p, l, k, q)))
                        count += 1
                    q *= p
    reports.append(
        CheckReport("sec6.coverage", PASS if count else FAIL,
                    "at least one valid instance", str(count),
                    f"{count} instances checked")
    )
    return reports


def sec7_p3_check() -> list[CheckReport]:
    """Mod-3 material: the resultant table by residue of r, the r = 4
    factorizations and divisibilities, both bracket regimes at alpha = 7,
    and the coprimality that rules the case out."""
    reports = []
    p = 3
    third_A3 = REG.A3 * Fraction(1, 3)
    pref, factors = REG.R13
    for r0 in sorted(REG.f3_resultant_table):
        expected = REG.f3_resultant_table[r0]
        val = pref
        for poly, mult in factors:
            val *= Fraction(poly.eval(r0)) ** mult
        route1 = val.numerator % p if val.denominator == 1 else None
        f3 = to_modp(REG.A1.eval_r(r0), p)
        g_full = third_A3.eval_r(r0)
        g3 = to_modp(g_full, p)
        route2 = pow(f3[-1], g_full.degree - (len(g3) - 1), p) * mp_resultant(f3, g3, p) % p
        ok = route1 == route2 == expected
        reports.append(
            CheckReport(f"sec7p3.table.r{r0}", PASS if ok else FAIL,
                        str(expected), f"specialized={route1} direct={route2}")
        )

    a14 = to_modp(REG.A1.eval_r(4), p)
    a34 = to_modp(third_A3.eval_r(4), p)
    reports.append(check("sec7p3.factor.a3", _expand_modp(REG.A3_at_4_factors, p), a34))
    a54 = to_modp((REG.A5 * Fraction(1, 5)).eval_r(4), p)
    reports.append(
        CheckReport(
            "sec7p3.factor.a5",
            PASS if _expand_modp(REG.A5_at_4_factors, p) == a54 else FAIL,
            "z^2 (z+1)^2 (z^2-z-1)^3", str(a54),
            "reference text displays the last factor without its "
            "multiplicity 3; the cube is required for the degrees to balance",
        )
    )
    reports.append(
        check("sec7p3.divides.a3", True, gcd_irred_mod_p(a14, a34, p=p, mode="divides"))
    )
    a54_full = to_modp(REG.A5.eval_r(4), p)
    reports.append(
        check("sec7p3.divides.a5", True, gcd_irred_mod_p(a14, a54_full, p=p, mode="divides"))
    )

    inv2 = pow(2, -1, 9)  # alpha = 7 needs representatives mod 3^2
    th_c1 = theta_modp_poly(7, inv2 % 9, p)
    reports.append(check("sec7p3.theta7.c1", _expand_modp(REG.theta7_c1_factors, p), th_c1))
    th_c2 = theta_modp_poly(7, 2 * inv2 % 9, p)
    reports.append(check("sec7p3.theta7.c2", _expand_modp(REG.theta7_c2_factors, p), th_c2))

    a7 = _expand_modp([(f, 1) for f in REG.A7_factors], p)
    g = gcd_irred_mod_p(a14, a7, p=p, mode="gcd")
    reports.append(check("sec7p3.gcd.a1-a7", IntPoly((1,)), g))
    return reports


def sec7_p181_check() -> list[CheckReport]:
    """Mod-181 material: the r = 7/4 specializations, the eliminant that
    forces p = 181, the three factorizations with irreducibility, the common
    root, and the alpha = 7 bracket value."""
    reports = []
    p = 181
    A1v = REG.A1.eval_r(Fraction(7, 4))
    reports.append(
        _zcheck("sec7p181.A1", RatPoly((Fraction(-1, 2), 1, Fraction(-5, 2))), A1v)
    )
    A3v = REG.A3.eval_r(Fraction(7, 4))
    claim = IntPoly((0, 1)) * IntPoly((1, -2, 5)) * IntPoly((-1, -1, -1, 7)) * -3
    reports.append(_zcheck("sec7p181.A3", claim.to_rat(), A3v))
    A5v = REG.A5.eval_r(Fraction(7, 4))
    reports.append(_zcheck("sec7p181.A5", REG.B5.to_rat() * Fraction(-5, 32), A5v))

    quad = IntPoly((-1, 2, -5))
    res = resultant_univar(quad, REG.B5)
    reports.append(check("sec7p181.res.quad-B5", REG.res_quad_B5.value(), res))
    reports.append(
        check("sec7p181.res.quad-B5.factored", "verified-probable",
              primality_and_factor_check(res, REG.res_quad_B5))
    )

    named = (("A1", A1v, REG.p181_A1), ("A3", A3v, REG.p181_A3), ("A5", A5v, REG.p181_A5))
    mods = {}
    for name, poly, (scal, fs) in named:
        got = to_modp(poly, p)
        mods[name] = got
        reports.append(check(f"sec7p181.factor.{name}", _expand_modp([(f, 1) for f in fs], p, scal), got))
    for f in REG.p181_nonlinear:
        reports.append(
            check(f"sec7p181.irreducible.deg{f.degree}", True,
                  gcd_irred_mod_p(f, p=p, mode="irreducible"))
        )
    g = mp_gcd(mp_gcd(mods["A1"], mods["A3"], p), mods["A5"], p)
    root = (-g[0]) % p if len(g) == 2 else None
    reports.append(check("sec7p181.common-root", REG.p181_common_root, root))

    fp = build_subfield(p, 1)
    th = theta_numeric(7, Fraction(1, 2), fp.element(REG.p181_common_root))
    reports.append(check("sec7p181.theta7", REG.p181_theta7, th.idx))
    return reports


def identities_check(alpha_max: int = 99) -> list[CheckReport]:
    return verify_identities(alpha_max, "both")


SUITES = {
    "sec5": sec5_check,
    "sec5r32": sec5_r32_check,
    "sec6": sec6_suite,
    "sec7p3": sec7_p3_check,
    "sec7p181": sec7_p181_check,
    "identities": identities_check,
}


def run_suite(name: str) -> list[CheckReport]:
    """Run one suite by name, or all of them in declared order."""
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn())
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; pick from {', '.join(SUITES)} or 'all'")
    return SUITES[name]()

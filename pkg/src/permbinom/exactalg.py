"""Exact polynomial algebra over Z, Q and F_p, plus probable-prime checks.

Dense representation throughout: a polynomial is its coefficient sequence,
lowest degree first, with no trailing zeros (the zero polynomial is the
empty sequence).  IntPoly / RatPoly / BiPolyRZ are immutable wrappers;
polynomials over F_p are plain lists of residues handled by the mp_*
functions.  Everything is exact: Python ints and fractions.Fraction, no
floating point.

Resultants come in two independent flavours so they can cross-check each
other: fraction-free Bareiss elimination on the Sylvester matrix, and a
Euclidean remainder sequence with leading-coefficient bookkeeping.  The
two-variable resultant (with respect to z, coefficients in Q[r]) is done by
evaluation at integer points followed by exact Lagrange interpolation, with
a direct Bareiss-over-Q[r] route available as a check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "IntPoly",
    "RatPoly",
    "BiPolyRZ",
    "Factorization",
    "resultant_univar",
    "resultant_univar_euclid",
    "resultant_bivar_z",
    "resultant_bivar_z_sylvester",
    "rational_gcd",
    "gcd_irred_mod_p",
    "to_modp",
    "mp_add",
    "mp_sub",
    "mp_mul",
    "mp_divmod",
    "mp_monic",
    "mp_gcd",
    "mp_eval",
    "mp_powmod",
    "mp_irreducible",
    "mp_resultant",
    "is_probable_prime",
    "primality_and_factor_check",
]


# ----------------------------------------------------------------- helpers

def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return [-c for c in a]


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _peval(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _pderiv(cs):
    return _trim([i * c for i, c in enumerate(cs)][1:])


class _BasePoly:
    """Shared plumbing for the dense wrappers."""

    __slots__ = ("coeffs",)
    _coerce = staticmethod(lambda c: c)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_trim([self._coerce(c) for c in coeffs]))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, k):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _BasePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == type(self).const(self._coerce(other))
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __add__(self, other):
        other = self._wrap(other)
        return type(self)(_padd(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(_pneg(self.coeffs))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        return type(self)(_pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = type(self).const(self._coerce(1))
        for _ in range(e):
            out = out * self
        return out

    def _wrap(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(self._coerce(other))
        raise TypeError(f"cannot mix {type(other).__name__} with {type(self).__name__}")

    def eval(self, x):
        return _peval(self.coeffs, x)

    def derivative(self):
        return type(self)(_pderiv(self.coeffs))

    def compose(self, other):
        """Substitute `other` for the variable."""
        other = self._wrap(other)
        acc = type(self).zero()
        for c in reversed(self.coeffs):
            acc = acc * other + type(self).const(c)
        return acc

    def render(self, var="r"):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{var}")
            else:
                parts.append(f"{c}*{var}^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self.render()})"


class IntPoly(_BasePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            return c.numerator
        if not isinstance(c, int):
            raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        return c

    def content(self) -> int:
        """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(c // g for c in self.coeffs)

    def reduce_mod(self, p: int) -> list[int]:
        return _trim([c % p for c in self.coeffs])

    def to_rat(self) -> "RatPoly":
        return RatPoly(Fraction(c) for c in self.coeffs)


class RatPoly(_BasePoly):
    """Polynomial with exact rational coefficients in lowest terms."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return RatPoly(c * inv for c in self.coeffs)

    def divmod(self, other: "RatPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            return RatPoly.zero(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        inv_lc = 1 / dv[-1]
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] * inv_lc
            if c:
                quo[k - dd] = c
                for i in range(dd + 1):
                    rem[k - dd + i] -= c * dv[i]
        return RatPoly(quo), RatPoly(_trim(rem))

    def divexact(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def clear_denominators(self):
        """Return (scale, prim) with self == scale * prim, prim a primitive IntPoly."""
        if self.is_zero():
            return Fraction(0), IntPoly.zero()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = IntPoly(c * den for c in self.coeffs)
        g = ints.content()
        return Fraction(g, den), IntPoly(c // g for c in ints.coeffs)

    def reduce_mod(self, p: int) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator % p == 0:
                raise ValueError(f"denominator of {c} not invertible mod {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return _trim(out)

    def to_int(self) -> IntPoly:
        return IntPoly(self.coeffs)


class BiPolyRZ:
    """Polynomial in z whose coefficients are exact rational polynomials in r."""

    __slots__ = ("zcoeffs",)

    def __init__(self, zcoeffs=()):
        zc = [c if isinstance(c, RatPoly) else RatPoly.const(c) for c in zcoeffs]
        while zc and zc[-1].is_zero():
            zc.pop()
        self.zcoeffs = tuple(zc)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def from_z_terms(cls, terms):
        """terms: iterable of (z_degree, RatPoly-in-r)."""
        zc: dict[int, RatPoly] = {}
        for k, c in terms:
            zc[k] = zc.get(k, RatPoly.zero()) + c
        top = max(zc) if zc else -1
        return cls([zc.get(k, RatPoly.zero()) for k in range(top + 1)])

    @property
    def z_degree(self):
        return len(self.zcoeffs) - 1

    @property
    def r_degree(self):
        return max((c.degree for c in self.zcoeffs), default=-1)

    def is_zero(self):
        return not self.zcoeffs

    def __eq__(self, other):
        return isinstance(other, BiPolyRZ) and self.zcoeffs == other.zcoeffs

    def __hash__(self):
        return hash(self.zcoeffs)

    def __add__(self, other):
        a, b = self.zcoeffs, other.zcoeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPolyRZ(out)

    def __neg__(self):
        return BiPolyRZ([-c for c in self.zcoeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatPoly)):
            other = BiPolyRZ([other if isinstance(other, RatPoly) else RatPoly.const(other)])
        if self.is_zero() or other.is_zero():
            return BiPolyRZ.zero()
        out = [RatPoly.zero()] * (len(self.zcoeffs) + len(other.zcoeffs) - 1)
        for i, ca in enumerate(self.zcoeffs):
            if ca.is_zero():
                continue
            for j, cb in enumerate(other.zcoeffs):
                out[i + j] = out[i + j] + ca * cb
        return BiPolyRZ(out)

    __rmul__ = __mul__

    def shift_z(self, k: int) -> "BiPolyRZ":
        return BiPolyRZ((RatPoly.zero(),) * k + self.zcoeffs)

    def eval_r(self, x) -> RatPoly:
        """Substitute a rational value for r; the result is a polynomial in z."""
        return RatPoly([c.eval(Fraction(x)) for c in self.zcoeffs])

    def eval_z(self, x) -> RatPoly:
        acc = RatPoly.zero()
        for c in reversed(self.zcoeffs):
            acc = acc * RatPoly.const(Fraction(x)) + c
        return acc

    def eval_rz(self, rx, zx) -> Fraction:
        return self.eval_r(rx).eval(Fraction(zx))

    def divexact_z(self, other: "BiPolyRZ") -> "BiPolyRZ":
        """Exact division as polynomials in z over Q[r]."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = list(self.zcoeffs)
        dv = other.zcoeffs
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            raise ValueError("inexact division: degree too small")
        quo = [RatPoly.zero()] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c.is_zero():
                c = c.divexact(dv[-1])
                quo[k - dd] = c
                for i in range(dd + 1):
                    rem[k - dd + i] = rem[k - dd + i] - c * dv[i]
        if any(not c.is_zero() for c in rem):
            raise ValueError("inexact division: nonzero remainder")
        return BiPolyRZ(quo)

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.zcoeffs):
            if c.is_zero():
                continue
            zpow = "" if k == 0 else ("*z" if k == 1 else f"*z^{k}")
            parts.append(f"({c.render('r')}){zpow}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPolyRZ({self.render()})"


# -------------------------------------------------------------- resultants

def _bareiss_det_int(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    M = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            ri, rk = M[i], M[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * M[n - 1][n - 1]


def _sylvester(f: list, g: list, zero) -> list[list]:
    """Sylvester matrix: coefficient lists given lowest degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    frow = list(reversed(f))
    grow = list(reversed(g))
    for i in range(n):
        rows.append([zero] * i + frow + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + grow + [zero] * (m - 1 - i))
    return rows


def resultant_univar(f, g):
    """Exact resultant of two univariate polynomials over Z or Q.

    IntPoly inputs give an int; RatPoly inputs give a Fraction.  Computed by
    fraction-free Bareiss elimination on the Sylvester matrix after clearing
    denominators.
    """
    rational = isinstance(f, RatPoly) or isinstance(g, RatPoly)
    f = f.to_rat() if isinstance(f, IntPoly) else f
    g = g.to_rat() if isinstance(g, IntPoly) else g
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return Fraction(1) if rational else 1
    sf, pf = f.clear_denominators()
    sg, pg = g.clear_denominators()
    if pf.degree == 0:
        base = pf.coeffs[0] ** pg.degree
    elif pg.degree == 0:
        base = pg.coeffs[0] ** pf.degree
    else:
        base = _bareiss_det_int(_sylvester(list(pf.coeffs), list(pg.coeffs), 0))
    out = sf**pg.degree * sg**pf.degree * base
    if rational:
        return Fraction(out)
    if out.denominator != 1:  # pragma: no cover - int inputs always land here
        raise AssertionError("integer resultant produced a fraction")
    return int(out)


def resultant_univar_euclid(f, g):
    """Same resultant through a rational Euclidean remainder sequence.

    Independent of the Sylvester/Bareiss route; used to cross-check it.
    """
    f = f.to_rat() if isinstance(f, IntPoly) else f
    g = g.to_rat() if isinstance(g, IntPoly) else g
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    acc = Fraction(1)
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return acc * g.coeffs[0] ** m
        _, r = f.divmod(g)
        if r.is_zero():
            return Fraction(0)
        k = r.degree
        acc *= Fraction(-1) ** (m * n) * g.lc ** (m - k)
        f, g = g, r


def rational_gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd over Q by the Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic() if not f.is_zero() else f


def resultant_bivar_z(F: BiPolyRZ, G: BiPolyRZ) -> RatPoly:
    """Resultant with respect to z of two polynomials in (r, z), exact over Q[r].

    Evaluates the univariate resultant at enough integer values of r (skipping
    points where either leading z-coefficient vanishes, which would drop the
    degree) and interpolates.
    """
    if F.z_degree <= 0 and G.z_degree <= 0:
        raise ValueError("both arguments have z-degree 0")
    if F.z_degree <= 0:
        c = F.zcoeffs[0] if F.zcoeffs else RatPoly.zero()
        return c**G.z_degree
    if G.z_degree <= 0:
        c = G.zcoeffs[0] if G.zcoeffs else RatPoly.zero()
        return c**F.z_degree
    bound = F.r_degree * G.z_degree + G.r_degree * F.z_degree
    lf, lg = F.zcoeffs[-1], G.zcoeffs[-1]
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    x = 0
    while len(xs) < bound + 1:
        for cand in ([0] if x == 0 else [x, -x]):
            c = Fraction(cand)
            if lf.eval(c) == 0 or lg.eval(c) == 0:
                continue
            xs.append(c)
            ys.append(resultant_univar(F.eval_r(c), G.eval_r(c)))
            if len(xs) == bound + 1:
                break
        x += 1
    return _lagrange(xs, ys)


def _lagrange(xs: list[Fraction], ys: list[Fraction]) -> RatPoly:
    master = RatPoly.const(1)
    for x in xs:
        master = master * RatPoly((-x, 1))
    out = RatPoly.zero()
    for x, y in zip(xs, ys):
        if y == 0:
            continue
        basis = master.divexact(RatPoly((-x, 1)))
        out = out + basis * RatPoly.const(y / basis.eval(x))
    return out


def resultant_bivar_z_sylvester(F: BiPolyRZ, G: BiPolyRZ) -> RatPoly:
    """Direct route: Bareiss elimination over the polynomial ring Q[r]."""
    if F.z_degree <= 0 or G.z_degree <= 0:
        return resultant_bivar_z(F, G)
    rows = _sylvester(list(F.zcoeffs), list(G.zcoeffs), RatPoly.zero())
    n = len(rows)
    M = [row[:] for row in rows]
    sign = 1
    prev = RatPoly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return RatPoly.zero()
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                M[i][j] = (pk * M[i][j] - mik * M[k][j]).divexact(prev)
            M[i][k] = RatPoly.zero()
        prev = pk
    res = M[n - 1][n - 1]
    return -res if sign < 0 else res


# --------------------------------------------------- polynomials over F_p

def to_modp(f, p: int) -> list[int]:
    """Coerce IntPoly / RatPoly / coefficient list to a residue list mod p."""
    if isinstance(f, (IntPoly, RatPoly)):
        return f.reduce_mod(p)
    return _trim([c % p for c in f])


def mp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def mp_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def mp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def mp_scal(a, c, p):
    c %= p
    return _trim([x * c % p for x in a])


def mp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    dd = len(b) - 1
    if len(rem) - 1 < dd:
        return [], _trim(rem)
    quo = [0] * (len(rem) - dd)
    inv = pow(b[-1], -1, p)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] * inv % p
        if c:
            quo[k - dd] = c
            for i in range(dd + 1):
                rem[k - dd + i] = (rem[k - dd + i] - c * b[i]) % p
    return _trim(quo), _trim(rem)


def mp_monic(a, p):
    if not a:
        return []
    return mp_scal(a, pow(a[-1], -1, p), p)


def mp_gcd(a, b, p):
    while b:
        a, b = b, mp_divmod(a, b, p)[1]
    return mp_monic(a, p)


def mp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def mp_powmod(base, e, f, p):
    """base^e mod (f, p) by square and multiply."""
    result = [1]
    base = mp_divmod(base, f, p)[1]
    while e > 0:
        if e & 1:
            result = mp_divmod(mp_mul(result, base, p), f, p)[1]
        base = mp_divmod(mp_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def mp_irreducible(f, p) -> bool:
    """Exact irreducibility over F_p: no factor of degree <= deg(f)/2.

    Uses gcds with z^(p^i) - z, whose roots are exactly the elements of the
    degree-i subfields.
    """
    f = mp_monic(f, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    frob = [0, 1]
    for _ in range(n // 2):
        frob = mp_powmod(frob, p, f, p)
        g = mp_gcd(f, mp_sub(frob, [0, 1], p), p)
        if len(g) - 1 > 0:
            return False
    return True


def mp_resultant(a, b, p) -> int:
    """Resultant over F_p via the Euclidean sequence."""
    if not a or not b:
        raise ValueError("resultant of the zero polynomial")
    acc = 1
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return acc * pow(b[0], m, p) % p
        r = mp_divmod(a, b, p)[1]
        if not r:
            return 0
        k = len(r) - 1
        acc = acc * pow(-1, m * n, p) % p * pow(b[-1], m - k, p) % p
        a, b = b, r


def gcd_irred_mod_p(f, g=None, *, p: int, mode: str = "gcd"):
    """gcd / irreducibility / exact divisibility over F_p.

    f, g may be IntPoly, RatPoly or residue lists; rational coefficients are
    reduced mod p (raises if a denominator is divisible by p).  The gcd is
    returned monic as an IntPoly with coefficients in 0..p-1.
    """
    fm = to_modp(f, p)
    if mode == "gcd":
        if g is None:
            raise ValueError("gcd mode needs two polynomials")
        return IntPoly(mp_gcd(fm, to_modp(g, p), p))
    if mode == "irreducible":
        return mp_irreducible(fm, p)
    if mode == "divides":
        if g is None:
            raise ValueError("divides mode needs two polynomials")
        gm = to_modp(g, p)
        if not fm:
            return not gm
        return not mp_divmod(gm, fm, p)[1]
    raise ValueError(f"unknown mode {mode!r}")


# ----------------------------------------------------------- primality

MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_EXTRA_ROUNDS = 20


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the fixed small-prime bases plus 20 rounds whose
    bases come from a generator seeded deterministically from n."""
    if n < 2:
        return False
    for q in MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
        if _mr_witness(a, d, s, n):
            return False
    rng = random.Random(n)
    for _ in range(MR_EXTRA_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_witness(a, d, s, n):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """A claimed factorization: unit * prod(base^mult).

    Bases are integers or IntPoly; multiplicities are positive.  The product
    must reconstruct the original value exactly, which is testable.
    """

    unit: int
    factors: tuple

    def __post_init__(self):
        if self.unit not in (1, -1):
            raise ValueError("unit must be +1 or -1")
        for _, mult in self.factors:
            if mult < 1:
                raise ValueError("multiplicities must be positive")

    def value(self):
        acc = self.unit
        for base, mult in self.factors:
            if isinstance(base, IntPoly):
                acc = base**mult * acc
            else:
                acc = acc * base**mult
        return acc

    def render(self) -> str:
        unit = "+1" if self.unit == 1 else "-1"
        parts = []
        for base, mult in self.factors:
            b = f"({base.render()})" if isinstance(base, IntPoly) else str(base)
            parts.append(b if mult == 1 else f"{b}^{mult}")
        return " * ".join([unit] + parts)


def primality_and_factor_check(n: int, claimed: Factorization | None = None) -> str:
    """Probable-primality of n, or verification of a claimed factorization.

    Verdicts are 'probable' by construction: no certificate is produced.
    Claimed-factorization mode checks exact product reconstruction and
    probable-primality of every integer base.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    if claimed is None:
        return "probable-prime" if is_probable_prime(abs(n)) else "composite"
    if claimed.value() != n:
        return "product-mismatch"
    for base, _ in claimed.factors:
        if not isinstance(base, int):
            return "non-integer-base"
        if not is_probable_prime(base):
            return f"composite-base:{base}"
    return "verified-probable"

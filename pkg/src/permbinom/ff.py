"""Deterministic two-level finite-field tower F_p <= F_q <= F_{q^2}.

Elements are canonical integer indexes.  An element of an extension of
degree k over a base of order B with coefficient vector (c_0, ..., c_{k-1})
has index c_0 + c_1*B + ... + c_{k-1}*B^{k-1}, where each c_i is itself the
index of a base-field element.  Flattened all the way down this is the
base-p digit expansion, so addition is digit-wise mod p and the subfield
F_q sits inside F_{q^2} as the indexes below q.

Multiplication runs on generator exp/log tables built once per context.
Construction is fully deterministic: the modulus is the lexicographically
smallest monic irreducible (coefficients compared low-degree-first), the
generator the smallest index that generates the multiplicative group, so
catalogs are reproducible bit for bit across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .exactalg import is_probable_prime, mp_irreducible

__all__ = [
    "DEFAULT_CAP",
    "enumeration_cap",
    "CapExceededError",
    "PrimePower",
    "FieldCtx",
    "FieldElement",
    "build_tower",
    "build_subfield",
    "compute_z",
    "norm_and_frobenius",
    "enumerate_elements",
]

DEFAULT_CAP = 10**7


def enumeration_cap() -> int:
    """Upper bound on the order of any constructed field (q^2 <= cap)."""
    return int(os.environ.get("PERMBINOM_CAP", DEFAULT_CAP))


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class PrimePower:
    """q = p^m with p verified prime at construction."""

    p: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.m}")
        if not is_probable_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self):
        return f"PrimePower({self.p}^{self.m}={self.q})"


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """One level of the tower; immutable after construction.

    Safe to share across workers: every table is built in __init__ and never
    mutated afterwards.
    """

    __slots__ = (
        "base",
        "modulus",
        "char",
        "order",
        "degree",
        "prime_power",
        "gen_idx",
        "_exp",
        "_log",
        "_n",
    )

    def __init__(self, base: "FieldCtx | None", modulus: tuple[int, ...] | None, p: int | None = None):
        if base is None:
            if modulus is not None:
                raise ValueError("prime field takes no modulus")
            self.base = None
            self.char = p
            self.degree = 1
            self.order = p
            self.prime_power = PrimePower(p, 1)
            self.modulus = None
        else:
            if modulus is None or len(modulus) < 3 or modulus[-1] != 1:
                raise ValueError("extension needs a monic modulus of degree >= 2")
            self.base = base
            self.char = base.char
            self.degree = len(modulus) - 1
            self.order = base.order**self.degree
            self.prime_power = PrimePower(self.char, base.prime_power.m * self.degree)
            self.modulus = tuple(modulus)
        self._n = self.order - 1
        self.gen_idx = self._find_generator()
        self._build_tables()

    # --- raw polynomial arithmetic over the base (bootstrap only) ---

    def _decode(self, idx: int) -> list[int]:
        B = self.base.order
        out = []
        for _ in range(self.degree):
            idx, rem = divmod(idx, B)
            out.append(rem)
        return out

    def _encode(self, digs) -> int:
        B = self.base.order
        idx = 0
        for d in reversed(digs):
            idx = idx * B + d
        return idx

    def _mul_raw(self, i: int, j: int) -> int:
        """Schoolbook multiply-and-reduce; used before tables exist."""
        if self.base is None:
            return i * j % self.char
        b = self.base
        u, v = self._decode(i), self._decode(j)
        prod = [0] * (2 * self.degree - 1)
        for x, cu in enumerate(u):
            if not cu:
                continue
            for y, cv in enumerate(v):
                if cv:
                    prod[x + y] = b.add(prod[x + y], b.mul(cu, cv))
        # reduce by the monic modulus
        for k in range(len(prod) - 1, self.degree - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = 0
            for t in range(self.degree):
                mt = self.modulus[t]
                if mt:
                    prod[k - self.degree + t] = b.sub(prod[k - self.degree + t], b.mul(c, mt))
        return self._encode(prod[: self.degree])

    def _pow_raw(self, i: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._mul_raw(acc, i)
            i = self._mul_raw(i, i)
            e >>= 1
        return acc

    def _find_generator(self) -> int:
        n = self._n
        if n == 1:
            return 1
        primes = _prime_factors(n)
        for cand in range(2, self.order):
            if all(self._pow_raw(cand, n // ell) != 1 for ell in primes):
                return cand
        raise AssertionError("no generator found")  # pragma: no cover

    def _build_tables(self):
        n = self._n
        exp = [0] * n
        log: list[int | None] = [None] * self.order
        cur = 1
        g = self.gen_idx
        if self.base is None:
            p = self.char
            for k in range(n):
                exp[k] = cur
                log[cur] = k
                cur = cur * g % p
        else:
            for k in range(n):
                exp[k] = cur
                log[cur] = k
                cur = self._mul_raw(cur, g)
        if cur != 1:  # pragma: no cover
            raise AssertionError("generator order mismatch")
        self._exp = exp
        self._log = log

    # --- fast index arithmetic ---

    def add(self, i: int, j: int) -> int:
        p = self.char
        if self.prime_power.m == 1:
            return (i + j) % p
        out = 0
        mult = 1
        while i or j:
            i, di = divmod(i, p)
            j, dj = divmod(j, p)
            s = di + dj
            if s >= p:
                s -= p
            out += s * mult
            mult *= p
        return out

    def neg(self, i: int) -> int:
        p = self.char
        if self.prime_power.m == 1:
            return -i % p
        out = 0
        mult = 1
        while i:
            i, d = divmod(i, p)
            if d:
                out += (p - d) * mult
            mult *= p
        return out

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def mul(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return self._exp[(self._log[i] + self._log[j]) % self._n]

    def inv(self, i: int) -> int:
        if i == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[i] % self._n]

    def div(self, i: int, j: int) -> int:
        if j == 0:
            raise ZeroDivisionError("division by zero")
        if i == 0:
            return 0
        return self._exp[(self._log[i] - self._log[j]) % self._n]

    def pow(self, i: int, e: int) -> int:
        """i^e with the exponent reduced mod (order-1) for nonzero i."""
        if i == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        return self._exp[self._log[i] * (e % self._n) % self._n]

    def exp(self, k: int) -> int:
        return self._exp[k % self._n]

    def dlog(self, i: int) -> int:
        if i == 0:
            raise ValueError("dlog of zero")
        return self._log[i]

    def smul(self, c: int, i: int) -> int:
        """Scalar multiple by c in 0..p-1 (prime-subfield action)."""
        c %= self.char
        if c == 0 or i == 0:
            return 0
        return self.mul(c, i)

    # --- structure ---

    def coeffs(self, idx: int) -> list[int]:
        """Coefficient vector over the base field (indexes)."""
        if self.base is None:
            return [idx]
        return self._decode(idx)

    def from_coeffs(self, digs) -> int:
        if self.base is None:
            (d,) = digs
            return d % self.char
        return self._encode(list(digs))

    def in_subfield(self, idx: int) -> bool:
        """Is this element in the base field (coefficients above c_0 all zero)?"""
        if self.base is None:
            return True
        return idx < self.base.order

    def element(self, idx: int) -> "FieldElement":
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for field of order {self.order}")
        return FieldElement(self, idx)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def generator(self) -> "FieldElement":
        return FieldElement(self, self.gen_idx)

    def embed_int(self, n: int) -> int:
        """Image of the rational integer n in the prime subfield."""
        return n % self.char

    def render(self, idx: int) -> str:
        if self.base is None:
            return str(idx)
        return "[" + ",".join(self.base.render(c) for c in self._decode(idx)) + "]"

    def parse(self, text: str) -> int:
        """Accepts the bracket form, g^k exponent notation, or a bare integer."""
        text = text.strip()
        if text.startswith("g^"):
            return self._exp[int(text[2:]) % self._n] if self._n else 1
        if text == "g":
            return self.gen_idx
        if not text.startswith("["):
            val = int(text)
            return val % self.char
        return self._parse_bracket(text)

    def _parse_bracket(self, text: str) -> int:
        if self.base is None:
            raise ValueError(f"unexpected bracket for prime-field element: {text}")
        inner = text.strip()
        if not (inner.startswith("[") and inner.endswith("]")):
            raise ValueError(f"bad element syntax: {text}")
        inner = inner[1:-1]
        parts = []
        depth = 0
        cur = ""
        for ch in inner:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                cur += ch
        if cur.strip():
            parts.append(cur)
        digs = [self.base.parse(p) for p in parts]
        if len(digs) > self.degree:
            raise ValueError(f"too many coefficients in {text}")
        digs += [0] * (self.degree - len(digs))
        return self._encode(digs)

    def describe(self) -> dict:
        """Construction data: (p, m, modulus coefficient vectors)."""
        pp = self.prime_power
        mod = None
        if self.modulus is not None:
            mod = [self.base.coeffs(c) if self.base.base else c for c in self.modulus]
        return {"p": pp.p, "m": pp.m, "modulus": mod}

    def __repr__(self):
        return f"FieldCtx(order={self.order}, char={self.char})"


class FieldElement:
    """A field value: owning context plus canonical index."""

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: FieldCtx, idx: int):
        self.ctx = ctx
        self.idx = idx

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("field context mismatch")
            return other.idx
        if isinstance(other, int):
            return self.ctx.embed_int(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.idx, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.idx, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self._coerce(other), self.idx))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.idx, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.idx, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self._coerce(other), self.idx))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.idx))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.idx, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.idx))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.idx == other.idx
        if isinstance(other, int):
            return self.idx == self.ctx.embed_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.idx))

    def __bool__(self):
        return self.idx != 0

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.idx)

    @property
    def text(self) -> str:
        return self.ctx.render(self.idx)

    def __repr__(self):
        return f"<{self.text} in GF({self.ctx.order})>"


def _lex_smallest_irreducible_prime(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m over F_p, coefficients compared
    low-degree-first as integers (c_0 is the most significant position)."""
    for n in range(p**m):
        c = [n // p ** (m - 1 - i) % p for i in range(m)]
        coeffs = c + [1]
        if mp_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _lex_smallest_irreducible_quadratic(base: FieldCtx) -> tuple[int, ...]:
    """Smallest monic irreducible quadratic over an arbitrary base context,
    decided by root search (degree 2)."""
    B = base.order
    for c0 in range(B):
        for c1 in range(B):
            # x^2 + c1 x + c0: irreducible iff no root in the base field
            has_root = False
            for x in range(B):
                v = base.add(base.add(base.mul(x, x), base.mul(c1, x)), c0)
                if v == 0:
                    has_root = True
                    break
            if not has_root:
                return (c0, c1, 1)
    raise AssertionError("no irreducible quadratic found")  # pragma: no cover


@lru_cache(maxsize=64)
def _tower_cached(p: int, m: int, cap: int) -> tuple[FieldCtx, FieldCtx]:
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** (2 * m) > cap:
        raise CapExceededError(f"q^2 = {p**(2*m)} exceeds the enumeration cap {cap}")
    fp = FieldCtx(None, None, p=p)
    if m == 1:
        fq = fp
    else:
        fq = FieldCtx(fp, _lex_smallest_irreducible_prime(p, m))
    fq2 = FieldCtx(fq, _lex_smallest_irreducible_quadratic(fq))
    return fq, fq2


def build_tower(p: int, m: int, cap: int | None = None) -> tuple[FieldCtx, FieldCtx]:
    """Build (F_q, F_{q^2}) for q = p^m, deterministically.

    Raises if p is not prime or q^2 exceeds the enumeration cap (default
    10^7, override with the PERMBINOM_CAP environment variable).
    """
    return _tower_cached(p, m, enumeration_cap() if cap is None else cap)


def build_subfield(p: int, m: int, cap: int | None = None) -> FieldCtx:
    """F_q alone (cheap: only needs q <= cap, not q^2)."""
    cap = enumeration_cap() if cap is None else cap
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**m > cap:
        raise CapExceededError(f"q = {p**m} exceeds the enumeration cap {cap}")
    fp = FieldCtx(None, None, p=p)
    if m == 1:
        return fp
    return FieldCtx(fp, _lex_smallest_irreducible_prime(p, m))


def compute_z(a: FieldElement) -> FieldElement:
    """The derived field value z = (-a)^(-q(q+1)/2) for a in F_{q^2}*, q odd.

    The exponent is reduced mod q^2-1 before the table-based power; z^2
    always lies in the subfield F_q.
    """
    ctx2 = a.ctx
    if ctx2.base is None:
        raise ValueError("z is defined on the quadratic extension")
    q = ctx2.base.order
    if q % 2 == 0:
        raise ValueError("z requires odd q")
    if a.idx == 0:
        raise ValueError("z requires a != 0")
    e = -(q * (q + 1) // 2) % (ctx2.order - 1)
    return FieldElement(ctx2, ctx2.pow(ctx2.neg(a.idx), e))


def norm_and_frobenius(x: FieldElement) -> tuple[FieldElement, FieldElement]:
    """(x^q, x^(q+1)) for x in the quadratic extension; the norm is returned
    as an element of the subfield context."""
    ctx2 = x.ctx
    if ctx2.base is None:
        raise ValueError("needs an element of the quadratic extension")
    q = ctx2.base.order
    frob = ctx2.pow(x.idx, q)
    nrm = ctx2.pow(x.idx, q + 1)
    if not ctx2.in_subfield(nrm):  # pragma: no cover - algebraically impossible
        raise AssertionError("norm landed outside the subfield")
    return FieldElement(ctx2, frob), FieldElement(ctx2.base, nrm)


def enumerate_elements(ctx: FieldCtx, which: str = "all"):
    """Deterministic element stream: g^0, g^1, ..., then zero.

    which='norm_one_excluded' omits exactly the elements x with x^(q+1) = 1,
    where q is the order of the base field (quadratic contexts only).
    """
    n = ctx.order - 1
    if which == "all":
        for k in range(n):
            yield FieldElement(ctx, ctx._exp[k])
        yield FieldElement(ctx, 0)
    elif which == "nonzero":
        for k in range(n):
            yield FieldElement(ctx, ctx._exp[k])
    elif which == "norm_one_excluded":
        if ctx.base is None:
            raise ValueError("norm_one_excluded needs an extension context")
        step = ctx.base.order - 1  # x^(q+1)=1 iff (q-1) | dlog x
        for k in range(n):
            if k % step != 0:
                yield FieldElement(ctx, ctx._exp[k])
    else:
        raise ValueError(f"unknown enumeration mode {which!r}")

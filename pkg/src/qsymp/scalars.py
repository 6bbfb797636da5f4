"""Exact arithmetic in the coefficient field used by the whole engine.

Scalars are fractions of integer-coefficient Laurent polynomials in a
single generator ``u``.  The deformation parameter is ``q = u**4``, so
``v = q**(1/2) = u**2`` and ``q**(1/4) = u`` are exact ring elements.
Working over Q(q^(1/4)) rather than Q(q^(1/2)) is forced by the
exponential coefficients of the half-fields, which carry q^(k/4) powers
for odd k; every value the public API promises in terms of v is still
an exact element here.

Internally a Scalar keeps its denominator factored: an integer part and
a multiset of primitive polynomial factors (q-bracket denominators
recur constantly, so products and common denominators are multiset
operations, with no polynomial gcd in the arithmetic hot path).  The
canonical reduced form - denominator with no negative powers of u,
nonzero constant term, positive leading coefficient, and
gcd(num, den) = 1 - is produced lazily for equality, hashing,
serialization and the classical-limit evaluation.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd


class LaurentU:
    """Integer-coefficient Laurent polynomial in u.

    Stored as ``offset`` plus a dense coefficient tuple; ``coeffs[i]``
    multiplies ``u**(offset+i)``.  Invariant: first and last entries of
    ``coeffs`` are nonzero, and the zero polynomial is ``offset=0,
    coeffs=()``.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int, coeffs):
        coeffs = list(coeffs)
        lo = 0
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        if lo == hi:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = offset + lo
            self.coeffs = tuple(coeffs[lo:hi])

    @staticmethod
    def const(c: int) -> "LaurentU":
        return LaurentU(0, (c,))

    @staticmethod
    def upow(e: int, c: int = 1) -> "LaurentU":
        return LaurentU(e, (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.offset == 0 and self.coeffs == (1,)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            return 0
        return self.offset + len(self.coeffs) - 1

    def __add__(self, other: "LaurentU") -> "LaurentU":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return LaurentU(lo, out)

    def __neg__(self) -> "LaurentU":
        return LaurentU(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentU") -> "LaurentU":
        return self + (-other)

    def __mul__(self, other: "LaurentU") -> "LaurentU":
        if not self.coeffs or not other.coeffs:
            return _L_ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) * len(b) <= 256:
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] += ca * cb
            return LaurentU(self.offset + other.offset, out)
        return LaurentU(self.offset + other.offset, _kronecker_mul(a, b))

    def shifted(self, e: int) -> "LaurentU":
        if not self.coeffs:
            return self
        return LaurentU(self.offset + e, self.coeffs)

    def scaled(self, c: int) -> "LaurentU":
        if c == 0:
            return _L_ZERO
        if c == 1:
            return self
        return LaurentU(self.offset, tuple(c * a for a in self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
        return g

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentU)
            and self.offset == other.offset
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.offset + i
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*u")
            else:
                parts.append(f"{c}*u^{e}")
        return " + ".join(parts)


_L_ZERO = LaurentU(0, ())
_L_ONE = LaurentU(0, (1,))


def _kronecker_mul(a: tuple, b: tuple) -> list:
    """Dense polynomial product via evaluation at a power of two.

    Packing both factors into single integers hands the convolution to
    the C-level big-integer multiply; balanced digits recover signed
    coefficients exactly (the digit base exceeds twice the largest
    possible output coefficient).
    """
    ma = -min(a)
    x = max(a)
    if x > ma:
        ma = x
    mb = -min(b)
    x = max(b)
    if x > mb:
        mb = x
    bound = ma * mb * min(len(a), len(b))
    B = bound.bit_length() + 2
    M = 1 << B
    half = M >> 1
    ia = 0
    for c in reversed(a):
        ia = (ia << B) + c
    ib = 0
    for c in reversed(b):
        ib = (ib << B) + c
    x = ia * ib
    out = []
    nout = len(a) + len(b) - 1
    mask = M - 1
    for _ in range(nout):
        r = x & mask
        if r >= half:
            r -= M
        out.append(r)
        x = (x - r) >> B
    return out


def _poly_gcd(a: tuple, b: tuple) -> tuple:
    """Gcd of dense integer polynomials via a primitive PRS."""

    def prim(p):
        g = 0
        for c in p:
            g = igcd(g, c)
        if g == 0:
            return ()
        p = tuple(c // g for c in p)
        if p[-1] < 0:
            p = tuple(-c for c in p)
        return p

    def prem(p, d):
        p = list(p)
        dn = len(d) - 1
        lc = d[-1]
        while len(p) - 1 >= dn and any(p):
            while p and p[-1] == 0:
                p.pop()
            if len(p) - 1 < dn or not p:
                break
            k = len(p) - 1 - dn
            head = p[-1]
            p = [c * lc for c in p]
            for i, c in enumerate(d):
                p[k + i] -= head * c
            while p and p[-1] == 0:
                p.pop()
        return tuple(p)

    a, b = prim(a), prim(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prim(prem(a, b))
        a, b = b, r
    return prim(a)


_GCD_PRIME = 2147483647


def _gcd_is_one_modp(a: tuple, b: tuple, p: int = _GCD_PRIME) -> bool:
    """Sound fast path: a constant gcd over GF(p) forces a constant
    integer gcd (the modular gcd degree only overestimates)."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return False
    fa = [c % p for c in a]
    fb = [c % p for c in b]

    def strip(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    fa, fb = strip(fa), strip(fb)
    if not fa or not fb:
        return False
    while fb:
        if len(fb) == 1:
            return True
        inv = pow(fb[-1], p - 2, p)
        r = fa[:]
        for k in range(len(r) - len(fb), -1, -1):
            c = r[k + len(fb) - 1]
            if c:
                q = c * inv % p
                for i2, bc in enumerate(fb):
                    r[k + i2] = (r[k + i2] - q * bc) % p
        fa, fb = fb, strip(r)
    return len(fa) == 1


_GCD_CACHE: dict = {}


def _laurent_gcd_coeffs(a: tuple, b: tuple) -> tuple:
    if _gcd_is_one_modp(a, b):
        return (1,)
    key = (a, b)
    g = _GCD_CACHE.get(key)
    if g is None:
        g = _poly_gcd(a, b)
        _GCD_CACHE[key] = g
    return g


def _divexact_poly(p: tuple, d: tuple) -> tuple:
    if d == (1,):
        return p
    p = list(p)
    out = [0] * (len(p) - len(d) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = p[k + len(d) - 1]
        assert c % d[-1] == 0, "nonexact polynomial division"
        q = c // d[-1]
        out[k] = q
        if q:
            for i, dc in enumerate(d):
                p[k + i] -= q * dc
    assert not any(p), "nonexact polynomial division"
    return tuple(out)


def _try_divexact(p: tuple, d: tuple):
    """Exact polynomial division, or None if not divisible."""
    lp, ld = len(p), len(d)
    if lp < ld:
        return None
    p = list(p)
    out = [0] * (lp - ld + 1)
    lead = d[-1]
    top = ld - 1
    dbody = d[:-1]
    for k in range(lp - ld, -1, -1):
        c = p[k + top]
        if c:
            if c % lead:
                return None
            q = c // lead
            out[k] = q
            p[k + top] = 0
            for i, dc in enumerate(dbody):
                if dc:
                    p[k + i] -= q * dc
    if any(p):
        return None
    return tuple(out)


_FVALS_CACHE: dict = {}


def _fvals(f: tuple):
    got = _FVALS_CACHE.get(f)
    if got is None:
        v1 = sum(f)
        vm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(f))
        v2 = 0
        for c in reversed(f):
            v2 = (v2 << 1) + c
        got = (v1, vm1, v2)
        _FVALS_CACHE[f] = got
    return got


def _reduce_num_df(num: LaurentU, df: dict):
    """Divide num by denominator factors while possible (exact probes
    gated by cheap evaluation filters at u = 1, -1, 2)."""
    while df and not num.is_zero():
        cs = num.coeffs
        p1 = sum(cs)
        pm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(cs))
        p2 = None
        hit = False
        for f in list(df):
            f1, fm1, f2 = _fvals(f)
            if (f1 == 0 and p1 != 0) or (f1 != 0 and p1 % f1):
                continue
            if (fm1 == 0 and pm1 != 0) or (fm1 != 0 and pm1 % fm1):
                continue
            if f2 != 0:
                if p2 is None:
                    p2 = 0
                    for c in reversed(cs):
                        p2 = (p2 << 1) + c
                if p2 % f2:
                    continue
            q = _try_divexact(cs, f)
            if q is None:
                continue
            num = LaurentU(num.offset, q)
            df[f] -= 1
            if df[f] == 0:
                del df[f]
            hit = True
            break
        if not hit:
            break
    return num, df


# factor multiset helpers: a "df" is a sorted tuple of (coeffs, mult)
# with coeffs a primitive polynomial (positive leading coefficient,
# nonzero constant term, not the unit).
#
# Denominators here descend from q-bracket polynomials, so their
# irreducible factors are cyclotomic; keeping the factors irreducible
# makes full reduction a matter of divisibility probes.

_CYCLO_CACHE: dict = {1: (-1, 1)}
_IRREDUCIBLE: set = {(-1, 1)}


def _cyclotomic(d: int) -> tuple:
    got = _CYCLO_CACHE.get(d)
    if got is None:
        poly = [0] * d + [1]
        poly[0] = -1  # u^d - 1
        got = tuple(poly)
        for e in range(1, d):
            if d % e == 0:
                got = _divexact_poly(got, _cyclotomic(e))
        _CYCLO_CACHE[d] = got
        _IRREDUCIBLE.add(got)
    return got


def _phi_degrees(limit: int):
    """(d, deg Phi_d) pairs with deg <= limit, by increasing degree."""
    out = []
    d = 1
    while True:
        phi = len(_cyclotomic(d)) - 1
        if d > 4 * limit + 4:
            break
        if phi <= limit:
            out.append((d, phi))
        d += 1
    out.sort(key=lambda t: t[1])
    return out


_FACTORIZE_CACHE: dict = {}


def _factorize(coeffs: tuple) -> tuple:
    """Factor a primitive polynomial into cyclotomics plus an opaque rest."""
    got = _FACTORIZE_CACHE.get(coeffs)
    if got is not None:
        return got
    rem = coeffs
    found: dict = {}
    deg = len(rem) - 1
    for d, phi in _phi_degrees(deg):
        f = _cyclotomic(d)
        while len(rem) - 1 >= phi:
            q = _try_divexact(rem, f)
            if q is None:
                break
            found[f] = found.get(f, 0) + 1
            rem = q
        if len(rem) == 1:
            break
    if len(rem) > 1:
        found[rem] = found.get(rem, 0) + 1
    got = tuple(sorted(found.items()))
    _FACTORIZE_CACHE[coeffs] = got
    return got


_EXPAND_CACHE: dict = {}


def _df_expand(df: tuple) -> LaurentU:
    if not df:
        return _L_ONE
    got = _EXPAND_CACHE.get(df)
    if got is None:
        got = _L_ONE
        for coeffs, mult in df:
            f = LaurentU(0, coeffs)
            for _ in range(mult):
                got = got * f
        _EXPAND_CACHE[df] = got
    return got


def _df_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for coeffs, mult in b:
        d[coeffs] = d.get(coeffs, 0) + mult
    return tuple(sorted(d.items()))


def _df_lcm_parts(a: tuple, b: tuple):
    """lcm = a * (b missing from a); returns (lcm, extra_for_a, extra_for_b)."""
    da, db = dict(a), dict(b)
    lcm = {}
    for coeffs in set(da) | set(db):
        lcm[coeffs] = max(da.get(coeffs, 0), db.get(coeffs, 0))
    extra_a = {c: m - da.get(c, 0) for c, m in lcm.items() if m > da.get(c, 0)}
    extra_b = {c: m - db.get(c, 0) for c, m in lcm.items() if m > db.get(c, 0)}
    return (
        tuple(sorted(lcm.items())),
        tuple(sorted(extra_a.items())),
        tuple(sorted(extra_b.items())),
    )


def _make_factor(poly: LaurentU):
    """Split a nonzero Laurent polynomial into (unit u-shift, integer
    content with sign, factor multiset)."""
    off = poly.offset
    c = poly.content()
    if poly.coeffs[-1] < 0:
        c = -c
    coeffs = tuple(a // c for a in poly.coeffs)
    if coeffs == (1,):
        return off, c, ()
    return off, c, _factorize(coeffs)


class Scalar:
    """Element of the fraction field Q(u); see the module docstring."""

    __slots__ = ("_n", "_di", "_df", "_canonpair")

    def __init__(self, num: LaurentU, den: LaurentU, _canonical: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero divisor")
        if num.is_zero():
            self._n = _L_ZERO
            self._di = 1
            self._df = ()
            self._canonpair = (_L_ZERO, _L_ONE)
            return
        off, c, df = _make_factor(den)
        self._n = num.shifted(-off)
        self._di = abs(c)
        if c < 0:
            self._n = -self._n
        self._df = df
        self._canonpair = None

    @classmethod
    def _raw(cls, n: LaurentU, di: int, df: tuple) -> "Scalar":
        self = object.__new__(cls)
        if di < 0:
            n = -n
            di = -di
        self._n = n
        self._di = di
        self._df = df if not n.is_zero() else ()
        if n.is_zero():
            self._di = 1
        self._canonpair = None
        return self

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_int(c: int) -> "Scalar":
        return Scalar._raw(LaurentU.const(c), 1, ())

    @staticmethod
    def from_fraction(f) -> "Scalar":
        f = Fraction(f)
        return Scalar._raw(LaurentU.const(f.numerator), f.denominator, ())

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        n, d = self.canonical_pair()
        return n.is_one() and d.is_one()

    # -- field operations ---------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        if self._df == other._df:
            if self._di == other._di:
                return Scalar._raw(self._n + other._n, self._di, self._df)
            g = igcd(self._di, other._di)
            da, db = self._di // g, other._di // g
            return Scalar._raw(
                self._n.scaled(db) + other._n.scaled(da), self._di * db, self._df
            )
        lcm, ea, eb = _df_lcm_parts(self._df, other._df)
        g = igcd(self._di, other._di)
        da, db = self._di // g, other._di // g
        na = self._n * _df_expand(ea)
        nb = other._n * _df_expand(eb)
        return Scalar._raw(na.scaled(db) + nb.scaled(da), self._di * db, lcm)

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self._n, self._di, self._df)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self._n.is_zero() or other._n.is_zero():
            return ZERO
        return Scalar._raw(
            self._n * other._n, self._di * other._di, _df_mul(self._df, other._df)
        )

    def inv(self) -> "Scalar":
        if self._n.is_zero():
            raise ZeroDivisionError("zero divisor")
        num = _df_expand(self._df).scaled(self._di)
        off, c, df = _make_factor(self._n)
        num = num.shifted(-off)
        if c < 0:
            num = -num
        return Scalar._raw(num, abs(c), df)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inv()

    def scaled(self, f) -> "Scalar":
        f = Fraction(f)
        if f == 1:
            return self
        return Scalar._raw(self._n.scaled(f.numerator), self._di * f.denominator, self._df)

    # -- canonical form ---------------------------------------------------

    def canonical_pair(self):
        """(num, den) in canonical reduced form."""
        got = self._canonpair
        if got is not None:
            return got
        num = self._n
        if all(f in _IRREDUCIBLE for f, _ in self._df):
            # divisibility probes complete the reduction
            num, df = _reduce_num_df(num, dict(self._df))
            den = _df_expand(tuple(sorted(df.items()))).scaled(self._di)
        else:
            den = _df_expand(self._df).scaled(self._di)
            if len(num.coeffs) > 1 and len(den.coeffs) > 1:
                g = _laurent_gcd_coeffs(num.coeffs, den.coeffs)
                if g and g != (1,):
                    num = LaurentU(num.offset, _divexact_poly(num.coeffs, g))
                    den = LaurentU(den.offset, _divexact_poly(den.coeffs, g))
        c = igcd(num.content(), den.content())
        if den.coeffs[-1] < 0:
            c = -c
        if c != 1:
            num = LaurentU(num.offset, tuple(a // c for a in num.coeffs))
            den = LaurentU(den.offset, tuple(a // c for a in den.coeffs))
        num = num.shifted(-den.offset)
        den = LaurentU(0, den.coeffs)
        self._canonpair = (num, den)
        return self._canonpair

    @property
    def num(self) -> LaurentU:
        return self.canonical_pair()[0]

    @property
    def den(self) -> LaurentU:
        return self.canonical_pair()[1]

    def canonical(self) -> "Scalar":
        self.canonical_pair()
        return self

    def size_hint(self) -> int:
        return len(self._n.coeffs) + sum(
            (len(c) - 1) * m for c, m in self._df
        )

    def compacted(self) -> "Scalar":
        """Fully reduced copy; cheap to use downstream."""
        num, den = self.canonical_pair()
        if den.is_one():
            out = Scalar._raw(num, 1, ())
        else:
            out = Scalar(num, den)
        out._canonpair = (num, den)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        if self._df == other._df and self._di == other._di:
            return self._n == other._n
        diff = self - other
        return diff._n.is_zero()

    def __hash__(self):
        return hash(self.canonical_pair())

    def eval_limit_one(self) -> Fraction:
        """Exact value at q = 1 (i.e. u = 1).

        Raises ArithmeticError("pole at classical limit") if the
        canonical denominator vanishes there.
        """
        num, den = self.canonical_pair()
        d = den.eval_at_one()
        if d == 0:
            raise ArithmeticError("pole at classical limit")
        return Fraction(num.eval_at_one(), d)

    # -- canonical text form -------------------------------------------------
    # "num_coeffs/den_coeffs@offset": integer lists, used by reports,
    # fixtures and cache files.

    def text(self) -> str:
        num, den = self.canonical_pair()
        n = ",".join(str(c) for c in num.coeffs) or "0"
        d = ",".join(str(c) for c in den.coeffs)
        return f"{n}/{d}@{num.offset}"

    @staticmethod
    def from_text(s: str) -> "Scalar":
        body, off = s.rsplit("@", 1)
        n, d = body.split("/")
        num = () if n == "0" else tuple(int(c) for c in n.split(","))
        den = tuple(int(c) for c in d.split(","))
        return Scalar(LaurentU(int(off), num), LaurentU(0, den))

    def __repr__(self):
        num, den = self.canonical_pair()
        if den.is_one():
            return f"({num!r})"
        return f"({num!r})/({den!r})"


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)


def scalar_sum(terms) -> Scalar:
    """Sum of Scalars with a single common-denominator lift.

    Summing a long list pairwise makes unreduced numerators snowball;
    here every term is lifted once to the joint denominator, and the
    result is reduced against the (few) denominator factors by cheap
    divisibility probes.
    """
    terms = [t for t in terms if not t._n.is_zero()]
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    lcm_df: dict = {}
    lcm_di = 1
    same_df = True
    df0 = terms[0]._df
    for t in terms:
        if t._df != df0:
            same_df = False
        for coeffs, mult in t._df:
            if lcm_df.get(coeffs, 0) < mult:
                lcm_df[coeffs] = mult
        if t._di != lcm_di:
            lcm_di = lcm_di // igcd(lcm_di, t._di) * t._di
    num = _L_ZERO
    for t in terms:
        lift = t._n.scaled(lcm_di // t._di)
        if not same_df:
            tdf = dict(t._df)
            extra = tuple(
                sorted(
                    (c, m - tdf.get(c, 0))
                    for c, m in lcm_df.items()
                    if m > tdf.get(c, 0)
                )
            )
            if extra:
                lift = lift * _df_expand(extra)
        num = num + lift
    if num.is_zero():
        return ZERO
    # reduce against the factor family only when the parts grew; small
    # unreduced fractions are cheaper to leave alone
    if len(num.coeffs) > 16:
        num, lcm_df = _reduce_num_df(num, lcm_df)
        if lcm_di != 1:
            c = igcd(num.content(), lcm_di)
            if c > 1:
                num = LaurentU(num.offset, tuple(a // c for a in num.coeffs))
                lcm_di //= c
    return Scalar._raw(num, lcm_di, tuple(sorted(lcm_df.items())))


def upow(e: int) -> Scalar:
    """u**e as a Scalar (negative powers live in the numerator)."""
    return Scalar._raw(LaurentU.upow(e), 1, ())


def qpow(e) -> Scalar:
    """q**e for e in (1/4)Z, as an exact Scalar u**(4e)."""
    e4 = Fraction(e) * 4
    if e4.denominator != 1:
        raise ValueError(f"q-exponent {e} not on the q^(1/4) grid")
    return upow(int(e4))


def vpow(e) -> Scalar:
    """v**e = q**(e/2) for e in (1/2)Z."""
    return qpow(Fraction(e) / 2)


@lru_cache(maxsize=None)
def _qnum_cached(num: int, den: int) -> Scalar:
    x = Fraction(num, den)
    return (qpow(x) - qpow(-x)) / (qpow(1) - qpow(-1))


def qnum(x) -> Scalar:
    """The symmetric q-bracket [x] = (q^x - q^-x)/(q - q^-1), x in (1/2)Z."""
    x = Fraction(x)
    if x == 0:
        return ZERO
    return _qnum_cached(x.numerator, x.denominator)


def root_norms(n: int) -> list:
    """(alpha_i|alpha_i) for i = 0..n; nodes 0 and n are long."""
    norms = [2] + [1] * (n - 1) + [2]
    if n == 1:
        norms = [2, 2]
    return norms


def q_i(i: int, n: int) -> Scalar:
    """q_i = q^((alpha_i|alpha_i)/2)."""
    return qpow(Fraction(root_norms(n)[i], 2))


@lru_cache(maxsize=None)
def _qnum_i_cached(k: int, two_d: int) -> Scalar:
    d = Fraction(two_d, 2)
    return (qpow(d * k) - qpow(-d * k)) / (qpow(d) - qpow(-d))


def qnum_i(k: int, i: int, n: int) -> Scalar:
    """[k]_i with base q_i."""
    if k == 0:
        return ZERO
    return _qnum_i_cached(k, root_norms(n)[i])


def qfactorial_i(k: int, i: int, n: int) -> Scalar:
    """[k]_i! = [1]_i [2]_i ... [k]_i, with [0]_i! = 1."""
    if k < 0:
        raise ValueError("negative q-factorial")
    out = ONE
    for m in range(1, k + 1):
        out = out * qnum_i(m, i, n)
    return out


def eval_limit_one(s: Scalar) -> Fraction:
    return s.eval_limit_one()

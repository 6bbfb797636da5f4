"""Fock space with the deformed two-family Heisenberg action.

States are creation-mode multisets over a vacuum |alpha, beta> with
alpha in P + (1/2)Z*lambda_n and beta in P.  The a-family bracket
couples adjacent colors; the b-family bracket is color diagonal:

    [a_i(m), a_j(l)] = delta_{m+l,0} [m(alpha_i|alpha_j)][-m/2]/m
    [b_i(m), b_j(l)] = m delta_ij delta_{m+l,0}
    [a_i(m), b_j(l)] = 0
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .lattice import LatticeVector, alpha as simple_root, inner, lam
from .scalars import ONE, Scalar, qnum


class BasisState:
    """Vacuum labels dressed with per-color multisets of creation levels."""

    __slots__ = ("alpha", "beta", "a_modes", "b_modes", "_hash")

    def __init__(self, alpha: LatticeVector, beta: LatticeVector, a_modes, b_modes):
        self.alpha = alpha
        self.beta = beta
        self.a_modes = tuple(tuple(sorted(m)) for m in a_modes)
        self.b_modes = tuple(tuple(sorted(m)) for m in b_modes)
        self._hash = hash((self.alpha, self.beta, self.a_modes, self.b_modes))

    @staticmethod
    def vacuum(alpha: LatticeVector, beta: LatticeVector) -> "BasisState":
        n = alpha.n
        if not alpha.in_P_half_lambda_n():
            raise ValueError("alpha outside P + (1/2)Z*lambda_n")
        if not beta.in_P():
            raise ValueError("beta outside P")
        return BasisState(alpha, beta, ((),) * n, ((),) * n)

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def degree(self) -> int:
        return sum(sum(m) for m in self.a_modes) + sum(sum(m) for m in self.b_modes)

    def add_mode(self, fam: str, i: int, k: int) -> "BasisState":
        """Append one creation mode fam_i(-k), k > 0 (1-based color)."""
        if fam == "a":
            mods = list(self.a_modes)
            mods[i - 1] = mods[i - 1] + (k,)
            return BasisState(self.alpha, self.beta, mods, self.b_modes)
        mods = list(self.b_modes)
        mods[i - 1] = mods[i - 1] + (k,)
        return BasisState(self.alpha, self.beta, self.a_modes, mods)

    def add_modes(self, cfg) -> "BasisState":
        """Append creation modes from ((fam, i, k), mult) pairs at once."""
        amods = None
        bmods = None
        for (fam, i, k), mult in cfg:
            if fam == "a":
                if amods is None:
                    amods = list(self.a_modes)
                amods[i - 1] = amods[i - 1] + (k,) * mult
            else:
                if bmods is None:
                    bmods = list(self.b_modes)
                bmods[i - 1] = bmods[i - 1] + (k,) * mult
        return BasisState(
            self.alpha,
            self.beta,
            self.a_modes if amods is None else amods,
            self.b_modes if bmods is None else bmods,
        )

    def remove_mode(self, fam: str, i: int, k: int) -> "BasisState":
        mods = list(self.a_modes if fam == "a" else self.b_modes)
        lst = list(mods[i - 1])
        lst.remove(k)
        mods[i - 1] = tuple(lst)
        if fam == "a":
            return BasisState(self.alpha, self.beta, mods, self.b_modes)
        return BasisState(self.alpha, self.beta, self.a_modes, mods)

    def shifted(self, da: LatticeVector, db: LatticeVector) -> "BasisState":
        return BasisState(self.alpha + da, self.beta + db, self.a_modes, self.b_modes)

    def sort_key(self):
        return (
            self.alpha.eps2,
            self.beta.eps2,
            self.a_modes,
            self.b_modes,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BasisState)
            and self._hash == other._hash
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.a_modes == other.a_modes
            and self.b_modes == other.b_modes
        )

    def __hash__(self):
        return self._hash

    def text(self) -> str:
        am = ",".join(f"{i + 1}:{list(m)}" for i, m in enumerate(self.a_modes) if m)
        bm = ",".join(f"{i + 1}:{list(m)}" for i, m in enumerate(self.b_modes) if m)
        return (
            f"alpha={self.alpha.text()};beta={self.beta.text()};"
            f"a={{{am}}};b={{{bm}}}"
        )

    __repr__ = text


class FockVector:
    """Finite Scalar-linear combination of basis states."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for s, c in terms.items():
                if not c.is_zero():
                    self.terms[s] = c

    @staticmethod
    def unit(state: BasisState, coeff: Scalar = ONE) -> "FockVector":
        v = FockVector()
        if not coeff.is_zero():
            v.terms[state] = coeff
        return v

    @staticmethod
    def from_buckets(buckets: dict) -> "FockVector":
        """Build from {state: [Scalar, ...]}, summing each bucket once.

        Oversized results are fully reduced here: these are operator
        outputs, whose canonical coefficients stay small.
        """
        from .scalars import scalar_sum

        v = FockVector()
        for s, lst in buckets.items():
            c = scalar_sum(lst)
            if not c.is_zero():
                if c.size_hint() > 24:
                    c = c.compacted()
                v.terms[s] = c
        return v

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, state: BasisState, coeff: Scalar) -> None:
        cur = self.terms.get(state)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(state, None)
        else:
            if new.size_hint() > 24:
                new = new.compacted()
            self.terms[state] = new

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector(dict(self.terms))
        for s, c in other.terms.items():
            out.add_term(s, c)
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(Scalar.from_int(-1))

    def scaled(self, c: Scalar) -> "FockVector":
        if c.is_zero():
            return FockVector()
        return FockVector({s: x * c for s, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def max_degree(self) -> int:
        return max((s.degree for s in self.terms), default=0)

    def text(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return " + ".join(f"({c.text()})*{s.text()}" for s, c in items) or "0"

    __repr__ = text


@lru_cache(maxsize=None)
def a_bracket(i: int, j: int, m: int, n: int) -> Scalar:
    """[a_i(m), a_j(-m)] for m > 0: [m(alpha_i|alpha_j)][-m/2]/m."""
    c = inner(simple_root(i, n), simple_root(j, n))
    if c == 0:
        return Scalar.from_int(0)
    return (qnum(m * c) * qnum(Fraction(-m, 2))).scaled(Fraction(1, m))


def apply_a(i: int, m: int, x: FockVector, n: int) -> FockVector:
    """Act with a_i(m), m != 0 (zero modes are separate)."""
    if m == 0:
        raise ValueError("use zero_mode")
    out = FockVector()
    if m < 0:
        for s, c in x.terms.items():
            out.add_term(s.add_mode("a", i, -m), c)
        return out
    for s, c in x.terms.items():
        for j in range(1, n + 1):
            cnt = s.a_modes[j - 1].count(m)
            if cnt:
                br = a_bracket(i, j, m, n)
                if not br.is_zero():
                    out.add_term(s.remove_mode("a", j, m), c * br.scaled(cnt))
    return out


def apply_b(i: int, m: int, x: FockVector, n: int) -> FockVector:
    if m == 0:
        raise ValueError("use zero_mode")
    out = FockVector()
    if m < 0:
        for s, c in x.terms.items():
            out.add_term(s.add_mode("b", i, -m), c)
        return out
    for s, c in x.terms.items():
        cnt = s.b_modes[i - 1].count(m)
        if cnt:
            out.add_term(s.remove_mode("b", i, m), c.scaled(cnt * m))
    return out


def zero_mode_a(i: int, s: BasisState) -> Fraction:
    """Eigenvalue of a_i(0): (alpha_i|alpha)."""
    return inner(simple_root(i, s.n), s.alpha)


def zero_mode_b(i: int, s: BasisState) -> Fraction:
    """Eigenvalue of b_i(0): (2 eps_i|beta)."""
    from .lattice import eps

    return 2 * inner(eps(i, s.n), s.beta)


def d_eigenvalue(s: BasisState) -> Fraction:
    """(alpha|alpha) - (beta|beta - lambda_n) minus total creation degree.

    The vacuum value is the display's; creation modes lower the
    derivation eigenvalue by their level (they raise the grading degree
    used for truncation).
    """
    ln = lam(s.n, s.n)
    return inner(s.alpha, s.alpha) - inner(s.beta, s.beta - ln) - s.degree


# -- lattice operators ------------------------------------------------

COCYCLES = {}


def _trivial_cocycle(gamma_pair, mu_pair) -> int:
    return 1


COCYCLES["trivial"] = _trivial_cocycle


def get_cocycle(spec: str):
    try:
        return COCYCLES[spec]
    except KeyError:
        raise ValueError(f"unknown cocycle {spec!r}") from None


def apply_shift(
    da: LatticeVector,
    db: LatticeVector,
    x: FockVector,
    cocycle=_trivial_cocycle,
) -> FockVector:
    """e^{da} (alpha slot) e^{db} (beta slot); commutes with all modes."""
    out = FockVector()
    for s, c in x.terms.items():
        sgn = cocycle((da, db), (s.alpha, s.beta))
        t = s.shifted(da, db)
        if not t.alpha.in_P_half_lambda_n() or not t.beta.in_P():
            raise ValueError("shift leaves the allowed lattice sectors")
        out.add_term(t, c if sgn == 1 else c.scaled(-1))
    return out


# -- graded enumeration ------------------------------------------------


def _partitions(total: int):
    """Partitions of total as sorted tuples (ascending)."""
    if total == 0:
        yield ()
        return

    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - p, p):
                yield tail + (p,)

    yield from rec(total, total)


def graded_basis(alpha: LatticeVector, beta: LatticeVector, max_degree: int):
    """Deterministic list of all basis states of degree <= max_degree."""
    n = alpha.n
    vac = BasisState.vacuum(alpha, beta)
    out = []
    for total in range(max_degree + 1):
        layer = []

        def rec(slot, rest, acc):
            if slot == 2 * n:
                if rest == 0:
                    layer.append(
                        BasisState(alpha, beta, acc[:n], acc[n:])
                    )
                return
            for dput in range(rest + 1):
                for part in _partitions(dput):
                    rec(slot + 1, rest - dput, acc + [part])

        rec(0, total, [])
        layer.sort(key=BasisState.sort_key)
        out.extend(layer)
    assert out[0] == vac
    return out


def truncate(x: FockVector, max_degree: int) -> FockVector:
    """Drop terms of creation degree above max_degree."""
    return FockVector({s: c for s, c in x.terms.items() if s.degree <= max_degree})

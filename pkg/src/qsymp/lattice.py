"""Weight lattice data: basis eps_1..eps_n, delta, d, inner product,
simple roots and coroots, fundamental weights, and the four
distinguished sector weights.

Half-integer coordinates are stored doubled, so all arithmetic is on
plain integers; pairings come out as Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class LatticeVector:
    """Vector in the span of eps_1..eps_n, delta, d (doubled coords)."""

    __slots__ = ("eps2", "delta2", "d2")

    def __init__(self, eps2, delta2: int = 0, d2: int = 0):
        self.eps2 = tuple(eps2)
        self.delta2 = delta2
        self.d2 = d2

    @property
    def n(self) -> int:
        return len(self.eps2)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(
            tuple(a + b for a, b in zip(self.eps2, other.eps2, strict=True)),
            self.delta2 + other.delta2,
            self.d2 + other.d2,
        )

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.eps2), -self.delta2, -self.d2)

    def scale(self, f) -> "LatticeVector":
        f = Fraction(f)

        def m(c):
            r = f * c
            if r.denominator != 1:
                raise ValueError("scaling leaves the doubled-integer lattice")
            return int(r)

        return LatticeVector(tuple(m(c) for c in self.eps2), m(self.delta2), m(self.d2))

    def is_zero(self) -> bool:
        return not any(self.eps2) and self.delta2 == 0 and self.d2 == 0

    def classical(self) -> "LatticeVector":
        """Drop the delta and d components."""
        return LatticeVector(self.eps2, 0, 0)

    # -- membership predicates ----------------------------------------

    def in_P(self) -> bool:
        """Integer eps coordinates, no delta/d part."""
        return all(c % 2 == 0 for c in self.eps2) and self.delta2 == 0 and self.d2 == 0

    def in_P_half_lambda_n(self) -> bool:
        """P + (1/2)Z*lambda_n: eps coords in (1/2)Z with equal parity."""
        if self.delta2 != 0 or self.d2 != 0:
            return False
        pars = {c % 2 for c in self.eps2}
        return len(pars) <= 1

    def in_Q(self) -> bool:
        """Root lattice of C_n: integer coords with even sum."""
        return self.in_P() and sum(self.eps2) % 4 == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticeVector)
            and self.eps2 == other.eps2
            and self.delta2 == other.delta2
            and self.d2 == other.d2
        )

    def __hash__(self):
        return hash((self.eps2, self.delta2, self.d2))

    def __lt__(self, other: "LatticeVector"):
        return (self.eps2, self.delta2, self.d2) < (other.eps2, other.delta2, other.d2)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.eps2):
            if c:
                parts.append(f"{Fraction(c, 2)}e{i + 1}")
        if self.delta2:
            parts.append(f"{Fraction(self.delta2, 2)}delta")
        if self.d2:
            parts.append(f"{Fraction(self.d2, 2)}d")
        return "+".join(parts) if parts else "0"

    def text(self) -> str:
        return "[" + ",".join(str(c) for c in self.eps2) + "]"


def inner(a: LatticeVector, b: LatticeVector) -> Fraction:
    """(eps_i|eps_j) = delta_ij/2, (d|delta) = 1, all else zero."""
    s = sum(x * y for x, y in zip(a.eps2, b.eps2, strict=True))
    return Fraction(s, 8) + Fraction(a.d2 * b.delta2 + a.delta2 * b.d2, 4)


def zero(n: int) -> LatticeVector:
    return LatticeVector((0,) * n)


def eps(i: int, n: int) -> LatticeVector:
    """eps_i, 1-based."""
    return LatticeVector(tuple(2 if j == i - 1 else 0 for j in range(n)))


def delta(n: int) -> LatticeVector:
    return LatticeVector((0,) * n, delta2=2)


def dvec(n: int) -> LatticeVector:
    return LatticeVector((0,) * n, d2=2)


def alpha(i: int, n: int) -> LatticeVector:
    """Simple roots alpha_0..alpha_n."""
    if i == 0:
        return delta(n) - eps(1, n).scale(2)
    if i < n:
        return eps(i, n) - eps(i + 1, n)
    return eps(n, n).scale(2)


def coroot(i: int, n: int) -> LatticeVector:
    """h_0..h_n."""
    if i == 0:
        return alpha(0, n)
    if i < n:
        return alpha(i, n).scale(2)
    return alpha(n, n)


def theta(n: int) -> LatticeVector:
    """Exponent of K_theta: 2a_1+...+2a_{n-1}+a_n = 2eps_1."""
    out = zero(n)
    for i in range(1, n):
        out = out + alpha(i, n).scale(2)
    return out + alpha(n, n)


def lam(i: int, n: int) -> LatticeVector:
    """Classical fundamental weights lambda_i = eps_1+...+eps_i (lambda_0 = 0)."""
    out = zero(n)
    for j in range(1, i + 1):
        out = out + eps(j, n)
    return out


def cartan(n: int) -> list:
    """Generalized Cartan matrix ((h_i|alpha_j)), integer entries."""
    mat = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            e = inner(coroot(i, n), alpha(j, n))
            assert e.denominator == 1
            row.append(int(e))
        mat.append(row)
    return mat


def mu_classical(k: int, n: int) -> LatticeVector:
    """Classical part of the four sector weights mu_1..mu_4."""
    if k == 1:
        return zero(n)
    if k == 2:
        return lam(1, n)
    if k == 3:
        return lam(n, n).scale(Fraction(-1, 2))
    if k == 4:
        return lam(n, n).scale(Fraction(-3, 2)) + lam(n - 1, n)
    raise ValueError(k)


def mu_vacuum_labels(k: int, n: int) -> tuple:
    """(alpha, beta) Fock vacuum labels of the highest weight vectors.

    For k = 2 the highest weight vector carries an extra b_1(-1) mode on
    top of this vacuum.
    """
    if k == 1:
        return zero(n), zero(n)
    if k == 2:
        return lam(1, n), lam(1, n)
    if k == 3:
        return lam(n, n).scale(Fraction(-1, 2)), zero(n)
    if k == 4:
        return lam(n, n).scale(Fraction(-1, 2)) + eps(n, n).scale(-1), eps(n, n).scale(-1)
    raise ValueError(k)

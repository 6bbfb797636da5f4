"""Independent brute-force expander used as the oracle for the vertex
engine.

Deliberately different machinery: a factor's exponentials are applied
by iterated operator exponentiation exp(A)v = sum A^m v / m! on a
z-graded vector, with an explicit creation cap, instead of the engine's
fixed-power combinatorial enumeration.  Only the scalar field and the
raw Heisenberg mode action are shared.
"""

from fractions import Fraction

from qsymp.fock import FockVector, apply_a, apply_b
from qsymp.scalars import ONE, Scalar, qpow


class OracleFactor:
    """One exponential factor in canonical order.

    cre(fam, i, k) / ann(fam, i, k): Scalar coefficients (k >= 1).
    lines: list of (fam, i) with nonzero coefficients.
    da/db: lattice shifts; zpow/qpow: functions (alpha, beta) -> Fraction.
    pref: dict z-power -> Scalar.
    """

    def __init__(self, lines, cre, ann, da, db, zpow, qpow_fn, pref=None):
        self.lines = lines
        self.cre = cre
        self.ann = ann
        self.da = da
        self.db = db
        self.zpow = zpow
        self.qpow_fn = qpow_fn
        self.pref = pref or {Fraction(0): ONE}


def _apply_mode(fam, i, k, vec, n):
    return apply_a(i, k, vec, n) if fam == "a" else apply_b(i, k, vec, n)


def _exp_apply(coeff_fn, lines, signs_k, zvec, n, cap):
    """exp(sum_k coeff(k) mode(k) z^{sign*k}) on a z-graded vector.

    signs_k = +1 for creation (z^k, modes -k), -1 for annihilation.
    ``cap`` bounds the total creation degree kept.
    """
    out = {p: FockVector(dict(v.terms)) for p, v in zvec.items()}
    term = {p: v for p, v in zvec.items()}
    m = 1
    while True:
        new = {}
        for p, vec in term.items():
            for (fam, i) in lines:
                for k in range(1, cap + 1):
                    c = coeff_fn(fam, i, k)
                    if c.is_zero():
                        continue
                    moved = _apply_mode(fam, i, signs_k * -k, vec, n).scaled(c)
                    if moved.is_zero():
                        continue
                    q = p + signs_k * k
                    cur = new.get(q)
                    new[q] = moved if cur is None else cur + moved
        # divide by m (building A^m/m! incrementally)
        new = {p: v.scaled(Scalar.from_fraction(Fraction(1, m))) for p, v in new.items()}
        # drop states beyond the creation cap
        pruned = {}
        for p, v in new.items():
            keep = FockVector({s: c for s, c in v.terms.items() if s.degree <= cap})
            if not keep.is_zero():
                pruned[p] = keep
        if not pruned:
            return out
        for p, v in pruned.items():
            cur = out.get(p)
            out[p] = v if cur is None else cur + v
        term = pruned
        m += 1


def oracle_apply(factors, state, n, cap):
    """Apply factors (operator order: rightmost acts first) to a state.

    Returns dict z-power -> FockVector, exact for total powers whose
    creation content stays within ``cap``.
    """
    zvec = {Fraction(0): FockVector.unit(state)}
    for factor in reversed(factors):
        nxt = {}
        for p, vec in zvec.items():
            for s, c in vec.terms.items():
                ze = factor.zpow(s.alpha, s.beta)
                qe = factor.qpow_fn(s.alpha, s.beta)
                scalar = c * (qpow(qe) if qe else ONE)
                shifted = FockVector.unit(
                    s.shifted(factor.da, factor.db), scalar
                )
                cur = nxt.get(p + ze)
                nxt[p + ze] = shifted if cur is None else cur + shifted
        zvec = nxt
        zvec = _exp_apply(factor.ann, factor.lines, -1, zvec, n, cap)
        zvec = _exp_apply(factor.cre, factor.lines, +1, zvec, n, cap)
        conv = {}
        for pp, pc in factor.pref.items():
            for p, v in zvec.items():
                w = v.scaled(pc)
                cur = conv.get(p + pp)
                conv[p + pp] = w if cur is None else cur + w
        zvec = conv
    return {p: v for p, v in zvec.items() if not v.is_zero()}


def factor_from_monomial(m):
    """Adapter: view an engine monomial as an oracle factor (shared data,
    independent application path)."""
    lines = sorted(set(m.cre) | set(m.ann))
    return OracleFactor(
        lines,
        lambda fam, i, k: m.cre_coeff(fam, i, k),
        lambda fam, i, k: m.ann_coeff(fam, i, k),
        m.da,
        m.db,
        m.zpow.eval_labels,
        m.qp.eval_labels,
        dict(m.pref),
    )

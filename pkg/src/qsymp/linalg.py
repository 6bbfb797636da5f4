"""Exact linear algebra over the scalar field.

Gaussian elimination with exact fraction arithmetic; the coefficient
field keeps every entry canonical, so fractions never drift.  Two pivot
orders are exposed so kernel computations can be cross-checked against
an independent elimination order (rank-nullity must agree).
"""

from __future__ import annotations

from .scalars import ONE, Scalar, ZERO


def nullspace(rows, ncols: int, reverse_pivots: bool = False):
    """Basis of {x : M x = 0} for M given as a list of Scalar rows."""
    mat = [list(r) for r in rows]
    col_order = list(range(ncols))
    if reverse_pivots:
        col_order.reverse()
    pivots = {}  # column -> row index
    r = 0
    for c in col_order:
        pr = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [e * inv for e in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for c, pr in pivots.items():
            vec[c] = -mat[pr][fc]
        basis.append(vec)
    return basis


def rank(rows, ncols: int) -> int:
    return ncols - len(nullspace(rows, ncols))


def kernel_on_slice(op, domain, codomain):
    """Kernel basis of a linear operator between graded slices.

    ``op`` maps a basis state to a FockVector supported on ``codomain``;
    returns kernel vectors as coefficient lists over ``domain``.
    """
    index = {s: i for i, s in enumerate(codomain)}
    cols = []
    for s in domain:
        img = op(s)
        col = [ZERO] * len(codomain)
        for t, c in img.terms.items():
            if t not in index:
                raise ValueError("operator leaves the declared codomain slice")
            col[index[t]] = c
        cols.append(col)
    if not codomain:
        rows = []
    else:
        rows = [[cols[j][i] for j in range(len(domain))] for i in range(len(codomain))]
    return nullspace(rows, len(domain))

"""Chevalley generators on the Fock space, twisted commutators, and the
full defining-relation suite of the quantum affine algebra on graded
truncations.

Every check quantifies over the full graded basis of its sectors, so a
pass proves the linear identity on the whole truncation.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .fock import BasisState, FockVector, graded_basis
from .lattice import (
    LatticeVector,
    alpha as simple_root,
    cartan,
    coroot,
    eps,
    inner,
    mu_vacuum_labels,
    theta,
    zero as zero_vec,
)
from .report import RelationReport
from .scalars import ONE, Scalar, ZERO, qfactorial_i, qnum_i, qpow
from .vertex import (
    VertexField,
    build_X,
    field_power_coeff,
    make_Z,
    mode_apply,
    trivial_cocycle,
)


class GradedOperator:
    """Lazy linear operator on Fock vectors, memoized per basis state."""

    __slots__ = ("n", "fn", "name", "da", "db", "_memo")

    def __init__(self, n, fn, name="", da=None, db=None):
        self.n = n
        self.fn = fn
        self.name = name
        self.da = da
        self.db = db
        self._memo = {}

    def apply_state(self, s: BasisState) -> FockVector:
        v = self._memo.get(s)
        if v is None:
            v = self.fn(s)
            self._memo[s] = v
        return v

    def apply(self, x: FockVector) -> FockVector:
        buckets: dict = {}
        for s, c in x.terms.items():
            img = self.apply_state(s)
            unit = c.is_one()
            for t, c2 in img.terms.items():
                buckets.setdefault(t, []).append(c2 if unit else c * c2)
        return FockVector.from_buckets(buckets)

    # -- combinators ----------------------------------------------------

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(
            self.n,
            lambda s: self.apply(other.apply_state(s)),
            f"({self.name}@{other.name})",
        )

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(
            self.n,
            lambda s: self.apply_state(s) + other.apply_state(s),
            f"({self.name}+{other.name})",
        )

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(
            self.n,
            lambda s: self.apply_state(s) - other.apply_state(s),
            f"({self.name}-{other.name})",
        )

    def scaled(self, c: Scalar) -> "GradedOperator":
        return GradedOperator(
            self.n, lambda s: self.apply_state(s).scaled(c), f"{c!r}*{self.name}"
        )

    @staticmethod
    def zero(n: int) -> "GradedOperator":
        return GradedOperator(n, lambda s: FockVector(), "0")

    @staticmethod
    def identity(n: int) -> "GradedOperator":
        return GradedOperator(n, lambda s: FockVector.unit(s), "1")

    @staticmethod
    def diagonal(n: int, eig, name="diag") -> "GradedOperator":
        """eig: BasisState -> Scalar."""
        return GradedOperator(n, lambda s: FockVector.unit(s, eig(s)), name)

    @staticmethod
    def from_field_mode(field: VertexField, m: int, n: int, cocycle=trivial_cocycle, name="") -> "GradedOperator":
        return GradedOperator(
            n,
            lambda s: mode_apply(field, m, FockVector.unit(s), cocycle),
            name or f"mode[{m}]",
        )


def qcomm(A: GradedOperator, B: GradedOperator, u: Scalar) -> GradedOperator:
    """[A, B]_u = A B - u B A."""
    return (A @ B) - (B @ A).scaled(u)


def twisted_chain(ops, weights) -> GradedOperator:
    """[b_1, ..., b_m]_{w_1...w_{m-1}} nested from the right."""
    if len(weights) != len(ops) - 1:
        raise ValueError("weights length must be len(ops) - 1")
    if len(ops) == 1:
        return ops[0]
    return qcomm(ops[0], twisted_chain(ops[1:], weights[:-1]), weights[-1])


def twisted_chain_primed(ops, weights) -> GradedOperator:
    """Primed variant, nested from the left."""
    if len(weights) != len(ops) - 1:
        raise ValueError("weights length must be len(ops) - 1")
    if len(ops) == 1:
        return ops[0]
    return qcomm(twisted_chain_primed(ops[:-1], weights[:-1]), ops[-1], weights[-1])


# -- generator tables ----------------------------------------------------


class Generators:
    """All generators and currents for one configuration, with shared memos."""

    def __init__(self, n: int, cocycle=trivial_cocycle, yhalf: dict | None = None, gamma: Scalar = ONE):
        self.n = n
        self.cocycle = cocycle
        self.gamma = gamma
        self.fields = {}
        for i in range(1, n + 1):
            for sgn in (1, -1):
                self.fields[(i, sgn)] = build_X(i, sgn, n, cocycle, yhalf)
        self._modes = {}
        self.e = {i: self.x_mode(i, 1, 0) for i in range(1, n + 1)}
        self.f = {i: self.x_mode(i, -1, 0) for i in range(1, n + 1)}
        self.t = {i: self._t_i(i) for i in range(1, n + 1)}
        self.K_theta = GradedOperator.diagonal(
            n, lambda s: qpow(inner(theta(n), s.alpha)), "K_theta"
        )
        self.K_theta_inv = GradedOperator.diagonal(
            n, lambda s: qpow(-inner(theta(n), s.alpha)), "K_theta^-1"
        )
        self.t[0] = GradedOperator.diagonal(
            n,
            lambda s: qpow(Fraction(-1, 2) - inner(theta(n), s.alpha)),
            "t_0",
        )
        self.tinv = {
            i: GradedOperator.diagonal(
                n,
                lambda s, i=i: qpow(-inner(simple_root(i, n), s.alpha)),
                f"t_{i}^-1",
            )
            for i in range(1, n + 1)
        }
        self.tinv[0] = GradedOperator.diagonal(
            n,
            lambda s: qpow(Fraction(1, 2) + inner(theta(n), s.alpha)),
            "t_0^-1",
        )
        self.e[0], self.f[0] = self._affine_ef()

    def x_mode(self, i: int, sgn: int, m: int) -> GradedOperator:
        key = (i, sgn, m)
        op = self._modes.get(key)
        if op is None:
            pm = "+" if sgn > 0 else "-"
            op = GradedOperator.from_field_mode(
                self.fields[(i, sgn)], m, self.n, self.cocycle, f"x_{i}^{pm}({m})"
            )
            op.da = simple_root(i, self.n).scale(sgn).classical()
            if i < self.n:
                op.db = (eps(i, self.n) - eps(i + 1, self.n)).scale(sgn)
            else:
                op.db = eps(self.n, self.n).scale(2 * sgn)
            self._modes[key] = op
        return op

    def _t_i(self, i: int) -> GradedOperator:
        n = self.n
        return GradedOperator.diagonal(
            n, lambda s, i=i: qpow(inner(simple_root(i, n), s.alpha)), f"t_{i}"
        )

    def q_h(self, h: LatticeVector) -> GradedOperator:
        return GradedOperator.diagonal(
            self.n, lambda s: qpow(inner(h, s.alpha)), "q^h"
        )

    def chain_weights(self) -> list:
        n = self.n
        if n == 1:
            return [qpow(-1)]
        half = [qpow(Fraction(-1, 2))] * (n - 2)
        return half + [qpow(-1)] + half + [ONE]

    def ehat0(self) -> GradedOperator:
        """The bare twisted chain (-1)^n [x_1^-(0),...,x_1^-(1)]_{...}.

        Equals [2]_1 e_0 gamma^-1 K_theta; the central gamma cancels.
        """
        n = self.n
        ops = [self.x_mode(i, -1, 0) for i in range(1, n + 1)]
        ops += [self.x_mode(i, -1, 0) for i in range(n - 1, 1, -1)]
        ops += [self.x_mode(1, -1, 1)]
        chain = twisted_chain(ops, self.chain_weights())
        return chain if n % 2 == 0 else chain.scaled(Scalar.from_int(-1))

    def _affine_ef(self):
        """The affine generators.

        For n >= 2 these are the displayed twisted chains; f_0 carries
        one extra balancing power of q fixed by the [e_0, f_0] relation
        (the chains reproduce the theta-root vectors only up to a
        central scalar, the display's undetermined gamma).  For n = 1
        the chain degenerates: theta is the single finite root, so the
        generators are the bare +-1 current modes, with the balancing
        scalar q^2 split evenly.
        """
        n = self.n
        if n == 1:
            sc = qpow(1).scaled(-1)
            e0 = (self.x_mode(1, -1, 1) @ self.K_theta_inv).scaled(sc * self.gamma)
            f0 = (self.x_mode(1, 1, -1) @ self.K_theta).scaled(sc)
            return e0, f0
        two1 = qnum_i(2, 1, n)
        eops = [self.x_mode(i, -1, 0) for i in range(1, n + 1)]
        eops += [self.x_mode(i, -1, 0) for i in range(n - 1, 1, -1)]
        eops += [self.x_mode(1, -1, 1)]
        fops = [self.x_mode(i, 1, 0) for i in range(1, n + 1)]
        fops += [self.x_mode(i, 1, 0) for i in range(n - 1, 1, -1)]
        fops += [self.x_mode(1, 1, -1)]
        w = self.chain_weights()
        sgn_e = Scalar.from_int((-1) ** n)
        sgn_f = qpow(n + 1) if n % 2 == 0 else qpow(n + 1).scaled(-1)
        e0 = (twisted_chain(eops, w) @ self.K_theta_inv).scaled(
            sgn_e * self.gamma / two1
        )
        f0 = (twisted_chain(fops, w) @ self.K_theta).scaled(sgn_f / two1)
        return e0, f0

    def screening(self, j: int) -> GradedOperator:
        zfield = VertexField(self.n, [make_Z(j, -1, self.n)])
        return GradedOperator(
            self.n,
            lambda s: field_power_coeff(
                zfield, Fraction(-1), FockVector.unit(s), self.cocycle
            ),
            f"Q_{j}^-",
        )


# -- the defining-relation suite -----------------------------------------


def default_sectors(n: int):
    """(alpha, beta) vacuum labels of the four irreducible sectors."""
    return [mu_vacuum_labels(k, n) for k in (1, 2, 3, 4)]


def sector_name(labels) -> str:
    a, b = labels
    return f"(a={a.text()},b={b.text()})"


def _check_zero_on(op: GradedOperator, probes, rid, n, cutoff, sector) -> RelationReport:
    t0 = time.monotonic()
    for s in probes:
        got = op.apply_state(s)
        if not got.is_zero():
            return RelationReport(
                rid, n, cutoff, sector, "fail",
                {"state": s.text(), "value": got.text()},
                int((time.monotonic() - t0) * 1000),
            )
    return RelationReport(rid, n, cutoff, sector, "pass", None, int((time.monotonic() - t0) * 1000))


def relation_suite(
    n: int,
    cutoff: int,
    sectors=None,
    cocycle=trivial_cocycle,
    yhalf: dict | None = None,
    gens: Generators | None = None,
):
    """Check every defining relation on all probes of degree <= cutoff."""
    gens = gens or Generators(n, cocycle, yhalf)
    sectors = sectors if sectors is not None else default_sectors(n)
    A = cartan(n)
    reports = []
    for labels in sectors:
        sec = sector_name(labels)
        probes = graded_basis(labels[0], labels[1], cutoff)

        # level identity: t_0 K_theta = q^(-1/2)
        op = (gens.t[0] @ gens.K_theta) - GradedOperator.identity(n).scaled(
            qpow(Fraction(-1, 2))
        )
        reports.append(_check_zero_on(op, probes, "level", n, cutoff, sec))

        # Cartan conjugation: q^h e_i q^-h = q^((h|alpha_i)) e_i
        for j in range(n + 1):
            h = coroot(j, n)
            qh = gens.q_h(h)
            qhi = gens.q_h(-h)
            for i in range(n + 1):
                # finite-node generators read the classical pairing; the
                # affine generators carry the delta correction (h|delta)
                # on their x_1(+-1) mode, giving (h|alpha_0) overall.
                pair = inner(h, simple_root(i, n))
                for kind, x, sg in (("e", gens.e[i], 1), ("f", gens.f[i], -1)):
                    op = (qh @ x @ qhi) - x.scaled(qpow(sg * pair))
                    reports.append(
                        _check_zero_on(
                            op, probes, f"weight:{kind}{i}:h{j}", n, cutoff, sec
                        )
                    )

        # [e_i, f_j] = delta_ij (t_i - t_i^-1)/(q_i - q_i^-1)
        from .scalars import root_norms

        norms = root_norms(n)
        for i in range(n + 1):
            for j in range(n + 1):
                op = qcomm(gens.e[i], gens.f[j], ONE)
                if i == j:
                    d = Fraction(norms[i], 2)
                    rhs = (gens.t[i] - gens.tinv[i]).scaled(
                        (qpow(d) - qpow(-d)).inv()
                    )
                    op = op - rhs
                reports.append(
                    _check_zero_on(op, probes, f"ef:{i},{j}", n, cutoff, sec)
                )

        # q-Serre relations for every ordered pair
        for i in range(n + 1):
            for j in range(n + 1):
                if i == j:
                    continue
                b = 1 - A[i][j]
                for kind in ("e", "f"):
                    x_i = gens.e[i] if kind == "e" else gens.f[i]
                    x_j = gens.e[j] if kind == "e" else gens.f[j]
                    total = GradedOperator.zero(n)
                    for k in range(b + 1):
                        c = (qfactorial_i(k, i, n) * qfactorial_i(b - k, i, n)).inv()
                        if k % 2 == 1:
                            c = c.scaled(-1)
                        term = x_j
                        for _ in range(k):
                            term = x_i @ term
                        for _ in range(b - k):
                            term = term @ x_i
                        total = total + term.scaled(c)
                    reports.append(
                        _check_zero_on(
                            total, probes, f"serre:{kind}:{i},{j}", n, cutoff, sec
                        )
                    )

        # weight metadata of the finite-node currents
        t0 = time.monotonic()
        bad = None
        for i in range(1, n + 1):
            for sgn in (1, -1):
                op = gens.x_mode(i, sgn, 0)
                for s in probes:
                    img = op.apply_state(s)
                    for tstate in img.terms:
                        if (
                            tstate.alpha - s.alpha != op.da
                            or tstate.beta - s.beta != op.db
                        ):
                            bad = {"op": op.name, "state": s.text()}
        reports.append(
            RelationReport(
                "wtmeta", n, cutoff, sec,
                "pass" if bad is None else "fail", bad,
                int((time.monotonic() - t0) * 1000),
            )
        )
    return reports


def hwv_suite(n: int, cocycle=trivial_cocycle, yhalf: dict | None = None, gens: Generators | None = None):
    """Highest-weight checks for the four distinguished vectors."""
    gens = gens or Generators(n, cocycle, yhalf)
    reports = []
    # affine t_0 exponents (alpha_0|mu_k); the rest are classical pairings
    t0_exp = {1: Fraction(-1, 2), 2: Fraction(-3, 2), 3: Fraction(0), 4: Fraction(0)}
    if n == 1:
        t0_exp[4] = Fraction(1)
    for k in (1, 2, 3, 4):
        al, be = mu_vacuum_labels(k, n)
        vec = BasisState.vacuum(al, be)
        if k == 2:
            vec = vec.add_mode("b", 1, 1)
        x = FockVector.unit(vec)
        for i in range(n + 1):
            got = gens.e[i].apply(x)
            reports.append(
                RelationReport(
                    f"hwv:mu{k}:e{i}", n, 0, f"mu{k}",
                    "pass" if got.is_zero() else "fail",
                    None if got.is_zero() else {"value": got.text()},
                )
            )
        from .lattice import mu_classical

        for i in range(n + 1):
            exp = (
                t0_exp[k]
                if i == 0
                else inner(simple_root(i, n), mu_classical(k, n))
            )
            got = gens.t[i].apply(x)
            want = x.scaled(qpow(exp))
            reports.append(
                RelationReport(
                    f"hwv:mu{k}:t{i}", n, 0, f"mu{k}",
                    "pass" if got == want else "fail",
                    None if got == want else {"value": got.text(), "want": want.text()},
                )
            )
        for j in range(1, n + 1):
            got = gens.screening(j).apply(x)
            reports.append(
                RelationReport(
                    f"hwv:mu{k}:Q{j}", n, 0, f"mu{k}",
                    "pass" if got.is_zero() else "fail",
                    None if got.is_zero() else {"value": got.text()},
                )
            )
    return reports


def screening_commutation_suite(n: int, cutoff: int, cocycle=trivial_cocycle, gens: Generators | None = None):
    """Q_j^- commutes with every e_i, f_i on probes."""
    gens = gens or Generators(n, cocycle)
    reports = []
    for labels in default_sectors(n):
        sec = sector_name(labels)
        probes = graded_basis(labels[0], labels[1], cutoff)
        for j in range(1, n + 1):
            Q = gens.screening(j)
            for i in range(n + 1):
                for kind, x in (("e", gens.e[i]), ("f", gens.f[i])):
                    op = qcomm(Q, x, ONE)
                    reports.append(
                        _check_zero_on(
                            op, probes, f"screen:[Q{j},{kind}{i}]", n, cutoff, sec
                        )
                    )
    return reports


# -- kernels of screening operators --------------------------------------


def bsector_states(j: int, lj: int, degree: int, n: int):
    """Basis of the color-j oscillator sector over |0, l_j eps_j> at exact degree."""
    from .fock import _partitions

    al = zero_vec(n)
    be = eps(j, n).scale(lj)
    out = []
    for part in _partitions(degree):
        s = BasisState.vacuum(al, be)
        for k in part:
            s = s.add_mode("b", j, k)
        out.append(s)
    out.sort(key=BasisState.sort_key)
    return out


def screening_kernel_dim(j: int, lj: int, degree: int, n: int, cocycle=trivial_cocycle, reverse=False) -> int:
    """dim Ker Q_j^- on one graded piece of the color-j sector."""
    from .linalg import kernel_on_slice

    gens = Generators(n, cocycle)
    Q = gens.screening(j)
    domain = bsector_states(j, lj, degree, n)
    tdeg = degree + lj - 1
    if tdeg < 0:
        return len(domain)
    codomain = bsector_states(j, lj - 1, tdeg, n)
    basis = kernel_on_slice(Q.apply_state, domain, codomain)
    if reverse:
        from .linalg import nullspace

        index = {s: i for i, s in enumerate(codomain)}
        rows = []
        cols = []
        for s in domain:
            img = Q.apply_state(s)
            col = [ZERO] * len(codomain)
            for t2, c in img.terms.items():
                col[index[t2]] = c
            cols.append(col)
        rows = [[cols[jj][ii] for jj in range(len(domain))] for ii in range(len(codomain))]
        basis = nullspace(rows, len(domain), reverse_pivots=True)
    return len(basis)


def submodule_slice(i: int, alpha_sel: LatticeVector, degree: int, n: int, cocycle=trivial_cocycle):
    """Graded dimensions of F'_{alpha,beta} pieces entering F_i.

    Returns the per-color b-sector kernel dimensions at the given degree
    together with the a-sector dimension; the slice itself is their
    tensor product.  For i in (1, 2) the index runs over alpha_sel in Q;
    for i = 3 over Q and for i = 4 over Q + eps_n, both with the
    -lambda_n/2 shift on the a-side label.
    """
    from .lattice import lam

    if i == 1:
        al, be = alpha_sel, alpha_sel
    elif i == 2:
        al, be = alpha_sel + eps(1, n), alpha_sel + eps(1, n)
    elif i in (3, 4):
        al, be = alpha_sel + lam(n, n).scale(Fraction(-1, 2)), alpha_sel
    else:
        raise ValueError(i)
    ls = [Fraction(2 * inner(eps(jj, n), be)) for jj in range(1, n + 1)]
    dims = {}
    for jj in range(1, n + 1):
        lj = int(ls[jj - 1])
        dims[jj] = [screening_kernel_dim(jj, lj, d, n, cocycle) for d in range(degree + 1)]
    a_dims = [
        sum(1 for _ in _a_sector_states(d, n)) for d in range(degree + 1)
    ]
    return al, be, a_dims, dims


def _a_sector_states(degree: int, n: int):
    from .fock import _partitions

    def rec(color, rest):
        if color == n:
            if rest == 0:
                yield ()
            return
        for d in range(rest + 1):
            for part in _partitions(d):
                for tail in rec(color + 1, rest - d):
                    yield (part,) + tail

    yield from rec(0, degree)


# -- q-adjoint transformers ----------------------------------------------


def adjoint_transformer(gens: Generators, i: int, sign: int, variant: str):
    """S_i^+- and T_i^+- acting on graded operators."""
    X = gens.x_mode(i, sign, 0)
    K = gens.t[i]
    Kinv = gens.tinv[i]
    if variant == "S":
        left, right = (K, Kinv) if sign > 0 else (Kinv, K)
    elif variant == "T":
        left, right = (Kinv, K) if sign > 0 else (K, Kinv)
    else:
        raise ValueError(variant)

    def transform(y: GradedOperator) -> GradedOperator:
        return (X @ y) - ((left @ y @ right) @ X)

    return transform


def adjoint_identity_suite(n: int, cutoff: int, cocycle=trivial_cocycle, yhalf=None, gens: Generators | None = None):
    """E:Adj3/E:Adj4/E:Adj5 for the S and T transformers on mode probes."""
    gens = gens or Generators(n, cocycle, yhalf)
    A = cartan(n)
    reports = []
    probes = []
    for labels in default_sectors(n):
        probes.extend(graded_basis(labels[0], labels[1], cutoff))
    ys = [gens.x_mode(j, -1, m) for j in range(1, n + 1) for m in (0, 1)]
    for variant in ("S", "T"):
        for sign in (-1,):
            tr = {
                i: adjoint_transformer(gens, i, sign, variant)
                for i in range(1, n + 1)
            }
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    if A[i][j] == 0:
                        for y in ys:
                            op = tr[i](tr[j](y)) - tr[j](tr[i](y))
                            reports.append(
                                _check_zero_on(
                                    op, probes,
                                    f"adj3:{variant}:[{i},{j}]:{y.name}",
                                    n, cutoff, "all",
                                )
                            )
                    if A[i][j] == -1:
                        from .scalars import root_norms

                        qi = qpow(Fraction(root_norms(n)[i], 2))
                        for y in ys:
                            inner_c = lambda z: tr[i](tr[j](z)) - tr[j](tr[i](z)).scaled(qi)
                            op = tr[i](inner_c(y)) - inner_c(tr[i](y)).scaled(qi.inv())
                            reports.append(
                                _check_zero_on(
                                    op, probes,
                                    f"adj4:{variant}:[{i},{i},{j}]:{y.name}",
                                    n, cutoff, "all",
                                )
                            )
                        for m in (0, 1):
                            y = gens.x_mode(j, sign, m)
                            op = tr[i](tr[i](y))
                            reports.append(
                                _check_zero_on(
                                    op, probes,
                                    f"adj5:{variant}{i}^2(x_{j}({m}))",
                                    n, cutoff, "all",
                                )
                            )
    return reports

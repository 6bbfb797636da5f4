from fractions import Fraction

from qsymp.lattice import (
    LatticeVector,
    alpha,
    cartan,
    coroot,
    delta,
    dvec,
    eps,
    inner,
    lam,
    mu_classical,
    mu_vacuum_labels,
    theta,
    zero,
)


def test_inner_product_basics():
    n = 3
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert inner(eps(i, n), eps(j, n)) == (Fraction(1, 2) if i == j else 0)
    assert inner(dvec(n), delta(n)) == 1
    assert inner(dvec(n), dvec(n)) == 0
    assert inner(delta(n), delta(n)) == 0
    assert inner(eps(1, n), dvec(n)) == 0
    assert inner(eps(1, n), delta(n)) == 0


def test_root_normalizations():
    # brute-force expansion of (alpha_1|alpha_1) with the stated form
    assert inner(alpha(1, 2), alpha(1, 2)) == 1
    assert inner(alpha(1, 3), alpha(1, 3)) == 1
    for n in (1, 2, 3):
        assert inner(alpha(0, n), alpha(0, n)) == 2
        assert inner(alpha(n, n), alpha(n, n)) == 2


def test_cartan_matrix_n2():
    assert cartan(2) == [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]
    # cross-check one entry by direct expansion
    assert inner(coroot(1, 2), alpha(0, 2)) == -2


def test_cartan_matrix_n1_n3():
    assert cartan(1) == [[2, -2], [-2, 2]]
    c3 = cartan(3)
    assert c3[0] == [2, -1, 0, 0]
    assert c3[1] == [-2, 2, -1, 0]
    assert c3[2] == [0, -1, 2, -2]
    assert c3[3] == [0, 0, -1, 2]


def test_theta():
    for n in (1, 2, 3):
        assert theta(n) == eps(1, n).scale(2)


def test_membership():
    n = 2
    assert eps(1, n).in_P()
    assert not eps(1, n).scale(Fraction(1, 2)).in_P()
    assert lam(n, n).scale(Fraction(1, 2)).in_P_half_lambda_n()
    assert not (eps(1, n).scale(Fraction(1, 2))).in_P_half_lambda_n()
    assert alpha(1, n).in_Q()
    assert alpha(n, n).in_Q()
    assert not eps(1, n).in_Q()


def test_mu_data():
    n = 2
    # (lambda_1|mu_i) classical pairings used by the vertex operators
    assert inner(lam(1, n), mu_classical(1, n)) == 0
    assert inner(lam(1, n), mu_classical(2, n)) == Fraction(1, 2)
    assert inner(lam(1, n), mu_classical(3, n)) == Fraction(-1, 4)
    assert inner(lam(1, n), mu_classical(4, n)) == Fraction(-1, 4)
    a4, b4 = mu_vacuum_labels(4, n)
    assert a4 == mu_classical(4, n)  # -1/2*lam_n - eps_n equals the classical part
    assert b4 == eps(n, n).scale(-1)
    # t_n eigenvalue exponent on mu_3: (alpha_n|-lambda_n/2) = -1/2
    assert inner(alpha(n, n), mu_classical(3, n)) == Fraction(-1, 2)


def test_mu4_classical_equals_vacuum_alpha():
    for n in (2, 3):
        assert mu_classical(4, n) == mu_vacuum_labels(4, n)[0]
    # n=1: classical part is -3/2 lambda_1, vacuum alpha is -1/2 lambda_1 - eps_1
    assert mu_classical(4, 1) == mu_vacuum_labels(4, 1)[0]

import random
from fractions import Fraction

import pytest

from helpers import EXACT_COMBOS, random_edges, with_gains
from skewgain.charpoly import charpoly_subgraphs
from skewgain.errors import NotCommuting, NotSquare, ShapeMismatch, SingularBlock
from skewgain.graph import build_graph, make_complete_bipartite, make_cycle, random_gain
from skewgain.matrix import (
    Matrix, adjacency_matrix, block, block_determinant_check, characteristic_polynomial,
    det, det_cofactor, inverse, sharp, shifted,
)
from skewgain.scalar import AntiInvolution as F, Domain, GaussianRational

Q, QI, C = Domain.RATIONAL, Domain.GAUSSIAN_RATIONAL, Domain.COMPLEX_FLOAT
I = GaussianRational(0, 1)


def random_matrix(rng, n, domain, cols=None, density=0.8):
    cols = cols or n
    rows = [[random_gain(rng, domain, bound=4) if rng.random() < density else 0 for _ in range(cols)]
            for _ in range(n)]
    return Matrix.from_rows(rows, domain)


def test_adjacency_examples():
    assert adjacency_matrix(build_graph(2, [(0, 1, 2)], F.IDENTITY, Q)) == Matrix.from_rows([[0, 2], [2, 0]], Q)
    assert adjacency_matrix(build_graph(2, [(0, 1, "i")], F.CONJUGATE, QI)) == \
        Matrix.from_rows([[0, "i"], [0, 0]], QI) + Matrix.from_rows([[0, 0], ["-i", 0]], QI)
    assert adjacency_matrix(build_graph(3, [], F.IDENTITY, Q)) == Matrix.zeros(3, 3, Q)


def test_adjacency_f_symmetry():
    rng = random.Random(4)
    for domain, f in EXACT_COMBOS:
        G = with_gains(6, random_edges(6, 0.6, rng), rng, domain, f)
        A = adjacency_matrix(G)
        for i in range(6):
            assert A[i, i] == 0
            for j in range(6):
                if A[i, j]:
                    assert A[j, i] == f(A[i, j])
        if f is F.CONJUGATE:
            assert A == sharp(A, f)


def test_sharp_examples():
    assert sharp(Matrix.from_rows([["i"]], QI), F.CONJUGATE) == Matrix.from_rows([["-i"]], QI)
    B = Matrix.from_rows([[1, 2, 0], [0, 3, 4]], Q)
    assert sharp(B, F.IDENTITY) == B.transpose()
    assert sharp(B, F.INVERSE) == Matrix.from_rows([[1, 0], [Fraction(1, 2), Fraction(1, 3)], [0, Fraction(1, 4)]], Q)


def test_sharp_is_involution():
    rng = random.Random(8)
    for domain, f in EXACT_COMBOS:
        B = random_matrix(rng, 3, domain, cols=4)
        assert sharp(sharp(B, f), f) == B


def test_det_examples():
    assert det(Matrix.identity(3, Q)) == 1
    assert det(adjacency_matrix(make_cycle(3))) == 2
    assert det(Matrix.from_rows([[0, "i"], ["-i", 0]], QI)) == -1
    with pytest.raises(NotSquare):
        det(Matrix.zeros(2, 3, Q))


@pytest.mark.parametrize("domain", [Q, QI])
def test_det_matches_cofactor(domain):
    rng = random.Random(12)
    for _ in range(60):
        n = rng.randint(1, 5)
        M = random_matrix(rng, n, domain, density=rng.choice([0.3, 0.7, 1.0]))
        assert det(M) == det_cofactor(M)


def test_det_float_close_to_exact():
    rng = random.Random(3)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 6), QI)
        F_ = Matrix.from_rows([[complex(x) for x in r] for r in M.entries], C)
        assert abs(det(F_) - complex(det(M))) <= 1e-9 * max(1.0, abs(complex(det(M))))


def test_inverse():
    rng = random.Random(6)
    for domain in (Q, QI):
        for _ in range(10):
            M = random_matrix(rng, 4, domain, density=1.0)
            if det(M):
                assert M @ inverse(M) == Matrix.identity(4, domain)
    with pytest.raises(SingularBlock):
        inverse(Matrix.zeros(2, 2, Q))


def test_shifted_evaluation_matches_charpoly():
    rng = random.Random(21)
    for domain, f in EXACT_COMBOS:
        G = with_gains(6, random_edges(6, 0.5, rng), rng, domain, f)
        A = adjacency_matrix(G)
        p = charpoly_subgraphs(G)
        q = characteristic_polynomial(A)
        assert p == q
        for _ in range(20):
            x = domain.coerce(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
            assert det(shifted(A, x)) == p(x)


def test_block_trivial():
    z, one = Matrix.zeros(1, 1, Q), Matrix.identity(1, Q)
    check = block_determinant_check(z, z, z, one)
    assert check.agree and check.lhs == check.rhs == 0


def test_block_kmn_reduction_at_three():
    # det(3I - M) for K_{2,2} ones, via the commuting identity on [[xI, -B], [-B#, xI]]
    G = make_complete_bipartite(2, 2)
    A = adjacency_matrix(G)
    B = A.submatrix([0, 1], [2, 3])
    Bs = sharp(B, G.f)
    x = Matrix.identity(2, Q, 3)
    check = block_determinant_check(x, B.scale(-1), Bs.scale(-1), x, branch="commuting")
    assert check.agree
    assert check.lhs == check.rhs == 45
    assert det(Matrix.identity(2, Q, 9) - B @ Bs) == 45


def test_block_commuting_with_d_equal_c():
    rng = random.Random(30)
    for domain in (Q, QI):
        A, B, Cm = (random_matrix(rng, 2, domain) for _ in range(3))
        check = block_determinant_check(A, B, Cm, Cm, branch="commuting")
        assert check.agree and check.lhs == check.rhs


def test_block_schur_branches():
    rng = random.Random(31)
    for _ in range(10):
        A, B, Cm, D = (random_matrix(rng, 3, QI, density=1.0) for _ in range(4))
        for branch in ("schur_a", "schur_d"):
            try:
                check = block_determinant_check(A, B, Cm, D, branch=branch)
            except SingularBlock:
                continue
            assert check.agree and check.lhs == check.rhs


def test_block_errors():
    one = Matrix.identity(2, Q)
    Cm = Matrix.from_rows([[0, 1], [0, 0]], Q)
    D = Matrix.from_rows([[1, 0], [0, 2]], Q)
    with pytest.raises(NotCommuting):
        block_determinant_check(one, one, Cm, D, branch="commuting")
    z = Matrix.zeros(2, 2, Q)
    with pytest.raises(SingularBlock):
        block_determinant_check(z, one, one, z, branch="schur_a")
    with pytest.raises(ShapeMismatch):
        block(one, Matrix.zeros(3, 1, Q), one, one)
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows([[1, 2], [3]], Q)

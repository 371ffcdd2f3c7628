import random

import pytest

from helpers import (
    EXACT_COMBOS, random_bipartite_edges, random_connected_edges, random_edges,
    random_tree_edges, random_unicyclic_edges, sympy_charpoly, with_gains,
)
from skewgain.charpoly import (
    applicable_routes, auto_route, charpoly_bipartite, charpoly_cycle, charpoly_direct,
    charpoly_kmn, charpoly_path, charpoly_star, charpoly_subgraphs, charpoly_unicyclic,
    compute_charpoly, cycle_gain, cycle_term, det_cycle, det_path, matching_sums,
)
from skewgain.errors import NotACycle, NotAPath, NotBipartite, NotUnicyclic
from skewgain.graph import (
    build_graph, make_complete_bipartite, make_cycle, make_double_star, make_path, make_star,
    random_gains,
)
from skewgain.matrix import adjacency_matrix, det
from skewgain.poly import Polynomial
from skewgain.scalar import AntiInvolution as F, Domain

Q, QI, C = Domain.RATIONAL, Domain.GAUSSIAN_RATIONAL, Domain.COMPLEX_FLOAT

PAW = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)], F.IDENTITY, Q)
TRI_I = make_cycle(3, ["i", 1, 1], F.CONJUGATE, QI)
P3_I = make_path(3, [1, "i"], F.CONJUGATE, QI)
K2 = build_graph(2, [(0, 1, 2)], F.IDENTITY, Q)


@pytest.mark.parametrize("route", [charpoly_subgraphs, charpoly_direct])
@pytest.mark.parametrize("G,expected", [
    (K2, [1, 0, -4]),
    (make_cycle(3), [1, 0, -3, -2]),
    (TRI_I, [1, 0, -3, 0]),
    (P3_I, [1, 0, -2, 0]),
    (make_cycle(4), [1, 0, -4, 0, 0]),
    (make_path(4), [1, 0, -3, 0, 1]),
    (PAW, [1, 0, -4, -2, 1]),
    (make_complete_bipartite(2, 3), [1, 0, -6, 0, 0, 0]),
    (make_double_star(2, 1), [1, 0, -4, 0, 2, 0]),
])
def test_general_routes_examples(route, G, expected):
    assert route(G).descending() == expected


def test_family_examples():
    assert charpoly_path(K2).descending() == [1, 0, -4]
    assert charpoly_path(make_path(4)).descending() == [1, 0, -3, 0, 1]
    assert charpoly_path(P3_I).descending() == [1, 0, -2, 0]
    assert charpoly_cycle(make_cycle(3)).descending() == [1, 0, -3, -2]
    assert charpoly_cycle(make_cycle(4)).descending() == [1, 0, -4, 0, 0]
    assert charpoly_cycle(TRI_I).descending() == [1, 0, -3, 0]
    assert charpoly_bipartite(make_complete_bipartite(2, 2)).descending() == [1, 0, -4, 0, 0]
    assert charpoly_bipartite(make_path(4)).descending() == [1, 0, -3, 0, 1]
    assert charpoly_bipartite(make_star(3)).descending() == [1, 0, -3, 0, 0]
    assert charpoly_unicyclic(make_cycle(3)).descending() == [1, 0, -3, -2]
    assert charpoly_unicyclic(PAW).descending() == [1, 0, -4, -2, 1]
    c4_pendant = build_graph(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 4, 1)], F.IDENTITY, Q)
    assert charpoly_unicyclic(c4_pendant) == charpoly_subgraphs(c4_pendant)
    assert charpoly_unicyclic(c4_pendant).descending() == [1, 0, -5, 0, 2, 0]


def test_determinant_examples():
    assert det_path(make_path(3, random_gains(2, QI, rng=random.Random(0)), F.CONJUGATE, QI)) == 0
    assert det_cycle(make_cycle(5)) == 2
    assert det_cycle(make_cycle(4)) == 0
    assert det_cycle(TRI_I) == 0 == det(adjacency_matrix(TRI_I))


def test_structure_errors():
    with pytest.raises(NotAPath):
        charpoly_path(make_cycle(4))
    with pytest.raises(NotACycle):
        charpoly_cycle(make_star(3))
    with pytest.raises(NotACycle):
        det_cycle(make_path(4))
    with pytest.raises(NotBipartite):
        charpoly_bipartite(make_cycle(5))
    with pytest.raises(NotUnicyclic):
        charpoly_unicyclic(make_complete_bipartite(2, 3))
    with pytest.raises(ValueError):
        compute_charpoly(K2, "nope")


def test_paw_all_routes():
    assert applicable_routes(PAW) == ["subgraphs", "direct", "unicyclic"]
    for name in applicable_routes(PAW):
        assert compute_charpoly(PAW, name).descending() == [1, 0, -4, -2, 1]


@pytest.mark.parametrize("G,route", [
    (make_path(5), "path"), (make_cycle(5), "cycle"), (make_star(4), "star"),
    (make_double_star(2, 2), "doublestar"), (make_complete_bipartite(2, 3), "kmn"),
    (PAW, "unicyclic"), (make_complete_bipartite(1, 1), "path"), (make_cycle(4), "cycle"),
    (build_graph(6, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 4, 1), (1, 5, 1), (4, 5, 1)],
                 F.IDENTITY, Q), "bipartite"),
])
def test_auto_route_preference(G, route):
    assert auto_route(G) == route


# ---------------------------------------------------------------------------
# independent sympy oracle

@pytest.mark.parametrize("domain,f", EXACT_COMBOS, ids=lambda x: x.value)
def test_subgraphs_and_direct_match_sympy(domain, f):
    rng = random.Random(f"{domain.value}-{f.value}")
    for _ in range(12):
        n = rng.randint(1, 7)
        G = with_gains(n, random_edges(n, 0.55, rng), rng, domain, f)
        expected = sympy_charpoly(G)
        assert charpoly_subgraphs(G).descending() == expected
        assert charpoly_direct(G).descending() == expected


def test_float_domain_routes_agree():
    rng = random.Random(17)
    for f in F:
        for _ in range(5):
            n = rng.randint(2, 8)
            G = with_gains(n, random_connected_edges(n, 0.4, rng), rng, C, f)
            assert charpoly_subgraphs(G).is_close(charpoly_direct(G), 1e-8)


# ---------------------------------------------------------------------------
# properties

def test_family_routes_agree_with_subgraphs():
    rng = random.Random(40)
    for k in range(60):
        domain, f = EXACT_COMBOS[k % len(EXACT_COMBOS)]
        n = rng.randint(3, 9)
        gains = random_gains(n, domain, rng=rng)
        P = make_path(n, gains[:n - 1], f, domain)
        Cy = make_cycle(n, gains, f, domain)
        assert charpoly_path(P) == charpoly_subgraphs(P)
        assert charpoly_cycle(Cy) == charpoly_subgraphs(Cy)
        U = with_gains(n, random_unicyclic_edges(n, rng), rng, domain, f)
        assert charpoly_unicyclic(U) == charpoly_subgraphs(U)
        B = with_gains(n, random_bipartite_edges(n, 0.5, rng), rng, domain, f)
        assert charpoly_bipartite(B) == charpoly_subgraphs(B)


def test_closed_families_agree_with_subgraphs():
    rng = random.Random(41)
    for k in range(30):
        domain, f = EXACT_COMBOS[k % len(EXACT_COMBOS)]
        n = rng.randint(1, 6)
        S = make_star(n, random_gains(n, domain, rng=rng), f, domain)
        assert charpoly_star(S) == charpoly_subgraphs(S)
        m, r = sorted((rng.randint(1, 4), rng.randint(1, 4)))
        K = make_complete_bipartite(m, r, random_gains(m * r, domain, rng=rng), f, domain)
        assert charpoly_kmn(K) == charpoly_subgraphs(K)
        p, q = rng.randint(1, 4), rng.randint(1, 4)
        D = make_double_star(p, q, random_gains(p + q + 1, domain, rng=rng), f, domain)
        assert compute_charpoly(D, "doublestar") == charpoly_subgraphs(D)


def test_determinants_match_det_and_constant_term():
    rng = random.Random(42)
    for k in range(40):
        domain, f = EXACT_COMBOS[k % len(EXACT_COMBOS)]
        n = rng.randint(3, 10)
        P = make_path(n, random_gains(n - 1, domain, rng=rng), f, domain)
        Cy = make_cycle(n, random_gains(n, domain, rng=rng), f, domain)
        for G, d in ((P, det_path(P)), (Cy, det_cycle(Cy))):
            assert d == det(adjacency_matrix(G))
            assert d == charpoly_subgraphs(G).coeff(0) * (-1) ** n


def test_inverse_paths_depend_only_on_shape():
    rng = random.Random(43)
    for n in range(2, 9):
        ones = charpoly_path(make_path(n, f=F.INVERSE))
        for domain in (Q, QI):
            P = make_path(n, random_gains(n - 1, domain, rng=rng), F.INVERSE, domain)
            assert charpoly_path(P).descending() == ones.descending()


def test_conjugate_coefficients_are_real():
    rng = random.Random(44)
    for _ in range(20):
        n = rng.randint(2, 8)
        G = with_gains(n, random_edges(n, 0.5, rng), rng, QI, F.CONJUGATE)
        assert all(c.imag == 0 for c in charpoly_subgraphs(G).coeffs)


def test_trace_coefficient_vanishes_and_monic():
    rng = random.Random(45)
    for domain, f in EXACT_COMBOS:
        n = rng.randint(2, 8)
        p = charpoly_subgraphs(with_gains(n, random_edges(n, 0.6, rng), rng, domain, f))
        assert p.degree == n and p.is_monic and p.coeff(n - 1) == 0


def test_cycle_term_orientation_independent():
    rng = random.Random(46)
    for domain, f in EXACT_COMBOS:
        n = rng.randint(3, 8)
        G = make_cycle(n, random_gains(n, domain, rng=rng), f, domain)
        fwd = tuple(range(n))
        back = tuple(reversed(fwd))
        assert cycle_gain(G, back) == f(cycle_gain(G, fwd))
        assert cycle_term(G, fwd) == cycle_term(G, back)


def test_matching_sums_on_ones_count_matchings():
    assert matching_sums(make_path(4)) == [1, 3, 1]
    assert matching_sums(make_cycle(6)) == [1, 6, 9, 2]
    assert matching_sums(make_complete_bipartite(2, 2)) == [1, 4, 2]


def test_tree_routes():
    rng = random.Random(47)
    for k in range(20):
        domain, f = EXACT_COMBOS[k % len(EXACT_COMBOS)]
        n = rng.randint(2, 10)
        T = with_gains(n, random_tree_edges(n, rng), rng, domain, f)
        assert charpoly_bipartite(T) == charpoly_direct(T)


def test_polynomial_format():
    assert compute_charpoly(TRI_I).format() == "1 0 -3 0"
    assert Polynomial.from_descending([1, "1/2+i", 0], QI).format() == "1 1/2+i 0"

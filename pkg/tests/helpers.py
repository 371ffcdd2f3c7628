"""Random graph samplers and an independent sympy oracle for the test suite."""
import random
from fractions import Fraction

import sympy

from skewgain.graph import build_graph, random_gain
from skewgain.scalar import AntiInvolution, Domain, GaussianRational

EXACT_COMBOS = [
    (Domain.RATIONAL, AntiInvolution.IDENTITY),
    (Domain.RATIONAL, AntiInvolution.INVERSE),
    (Domain.GAUSSIAN_RATIONAL, AntiInvolution.IDENTITY),
    (Domain.GAUSSIAN_RATIONAL, AntiInvolution.INVERSE),
    (Domain.GAUSSIAN_RATIONAL, AntiInvolution.CONJUGATE),
    (Domain.GAUSSIAN_RATIONAL, AntiInvolution.CONJUGATE_INVERSE),
]


def with_gains(n, pairs, rng, domain, f):
    return build_graph(n, [(u, v, random_gain(rng, domain)) for u, v in pairs], f, domain)


def random_edges(n, p, rng):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_tree_edges(n, rng):
    return [(rng.randrange(v), v) for v in range(1, n)]


def random_connected_edges(n, p, rng):
    edges = set(random_tree_edges(n, rng))
    edges |= set(random_edges(n, p, rng))
    perm = list(range(n))
    rng.shuffle(perm)
    return sorted({tuple(sorted((perm[u], perm[v]))) for u, v in edges})


def random_bipartite_edges(n, p, rng):
    side = [rng.randrange(2) for _ in range(n)]
    return [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and rng.random() < p]


def random_unicyclic_edges(n, rng):
    """A cycle of random length with random trees hanging off it."""
    p = rng.randint(3, n)
    edges = [(k, (k + 1) % p) for k in range(p)]
    edges += [(rng.randrange(v), v) for v in range(p, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[u], perm[v]) for u, v in edges]


def random_combo(rng):
    return rng.choice(EXACT_COMBOS)


# ---------------------------------------------------------------------------
# sympy oracle: builds the adjacency matrix from the stored gains using its
# own reverse-gain rule, then expands det(xI - A) symbolically.

X = sympy.Symbol("x")


def to_sympy(a):
    if isinstance(a, GaussianRational):
        return sympy.Rational(a.real.numerator, a.real.denominator) + sympy.I * sympy.Rational(
            a.imag.numerator, a.imag.denominator)
    a = Fraction(a)
    return sympy.Rational(a.numerator, a.denominator)


def from_sympy(c, domain):
    re_, im = sympy.re(c), sympy.im(c)
    re_q = Fraction(int(re_.p), int(re_.q))
    im_q = Fraction(int(im.p), int(im.q))
    if domain is Domain.RATIONAL:
        assert im_q == 0
        return re_q
    return GaussianRational(re_q, im_q)


SYMPY_F = {
    AntiInvolution.IDENTITY: lambda a: a,
    AntiInvolution.INVERSE: lambda a: 1 / a,
    AntiInvolution.CONJUGATE: sympy.conjugate,
    AntiInvolution.CONJUGATE_INVERSE: lambda a: 1 / sympy.conjugate(a),
}


def sympy_adjacency(G):
    A = sympy.zeros(G.n, G.n)
    f = SYMPY_F[G.f]
    for u, v, a in G.edges:
        s = to_sympy(a)
        A[u, v] = s
        A[v, u] = sympy.nsimplify(sympy.expand(f(s)))
    return A


def sympy_charpoly(G):
    """Descending coefficients of det(xI - A) in G's domain."""
    A = sympy_adjacency(G)
    poly = sympy.Poly(sympy.expand((X * sympy.eye(G.n) - A).det(method="berkowitz")), X)
    return [from_sympy(sympy.expand(c), G.domain) for c in poly.all_coeffs()]

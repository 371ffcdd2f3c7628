"""Characteristic polynomials of skew gain graphs by several independent routes.

Every route returns the monic ``Polynomial`` of det(xI - A) in ascending
coefficient order, so results from different routes compare directly.
"""
from __future__ import annotations

import math

from .errors import (
    NotACycle, NotADoubleStar, NotAPath, NotAStar, NotBipartite,
    NotCompleteBipartite, NotUnicyclic,
)
from .graph import (
    bipartition, complete_bipartite_parts, cycle_order, double_star_centers,
    elementary_families, induced_subgraph, path_order, star_center, unique_cycle,
)
from .matrix import adjacency_matrix, characteristic_polynomial, sharp
from .poly import Polynomial
from .scalar import apply_anti_involution, gmap


def cycle_gain(G, cycle):
    """Product of the oriented gains around ``cycle`` in the given direction."""
    prod = G.domain.one
    for k, v in enumerate(cycle):
        prod = prod * G.gain(v, cycle[(k + 1) % len(cycle)])
    return prod


def cycle_term(G, cycle):
    """phi(C) + f(phi(C)): both traversal directions of the cycle together."""
    phi = cycle_gain(G, cycle)
    return phi + apply_anti_involution(G.f, phi, G.domain)


def edge_g(G, k):
    return gmap(G.f, G.edges[k][2], G.domain)


def _from_codegree(G, a):
    """Polynomial with coefficient ``a[i]`` on ``x^(n-i)``."""
    n = G.n
    coeffs = [G.domain.zero] * (n + 1)
    for i, c in enumerate(a):
        if i <= n:
            coeffs[n - i] = c
    return Polynomial(tuple(coeffs), G.domain)


def _component_weights(G, comps):
    """Signed weight of each component; the (-1)^K(L) sign is spread over the components."""
    weights = []
    for kind, payload, _ in comps:
        if kind == "edge":
            weights.append(-edge_g(G, payload))
        else:
            weights.append(-cycle_term(G, payload))
    return weights


def _subgraph_sums(G, keep=None):
    zero, one = G.domain.zero, G.domain.one
    comps, families = elementary_families(G)
    weights = _component_weights(G, comps)
    orders = [bin(c[2]).count("1") for c in comps]
    a = [zero] * (G.n + 1)
    for fam in families:
        order = sum(orders[c] for c in fam)
        if keep is not None and not keep(order):
            continue
        a[order] = a[order] + math.prod((weights[c] for c in fam), start=one)
    return a


def charpoly_subgraphs(G):
    """Coefficients summed over elementary subgraphs.

    The coefficient of x^(n-i) is the sum over elementary subgraphs L of
    order i of (-1)^K(L) times g(phi(e)) for each single-edge component and
    phi(C) + f(phi(C)) for each cycle component.
    """
    a = _subgraph_sums(G)
    a[0] = G.domain.one
    return _from_codegree(G, a)


def charpoly_direct(G):
    """det(xI - A) straight from the adjacency matrix, no subgraphs involved."""
    return characteristic_polynomial(adjacency_matrix(G))


def matching_sums(G):
    """``S[k]`` = sum over k-matchings of the product of g over their edges."""
    zero, one = G.domain.zero, G.domain.one
    comps, families = elementary_families(G, with_cycles=False)
    g = [edge_g(G, k) for k in range(G.m)]
    S = [zero] * (G.n // 2 + 1)
    S[0] = one
    for fam in families:
        if fam:
            S[len(fam)] = S[len(fam)] + math.prod((g[comps[c][1]] for c in fam), start=one)
    return S


def _signed_matching_poly(G):
    S = matching_sums(G)
    return [S[i // 2] * (-1) ** (i // 2) if i % 2 == 0 else G.domain.zero for i in range(G.n + 1)]


def charpoly_path(G):
    if path_order(G) is None:
        raise NotAPath("underlying graph is not a path")
    return _from_codegree(G, _signed_matching_poly(G))


def charpoly_cycle(G):
    cyc = cycle_order(G)
    if cyc is None:
        raise NotACycle("underlying graph is not a cycle")
    a = _signed_matching_poly(G)
    a[G.n] = a[G.n] - cycle_term(G, cyc)
    return _from_codegree(G, a)


def det_path(G):
    if path_order(G) is None:
        raise NotAPath("underlying graph is not a path")
    if G.n % 2:
        return G.domain.zero
    return matching_sums(G)[G.n // 2] * (-1) ** (G.n // 2)


def det_cycle(G):
    cyc = cycle_order(G)
    if cyc is None:
        raise NotACycle("underlying graph is not a cycle")
    if G.n % 2:
        return cycle_term(G, cyc)
    return matching_sums(G)[G.n // 2] * (-1) ** (G.n // 2) - cycle_term(G, cyc)


def charpoly_bipartite(G):
    """Elementary-subgraph sum restricted to even orders; odd codegrees are zero."""
    if bipartition(G) is None:
        raise NotBipartite("underlying graph has an odd cycle")
    a = _subgraph_sums(G, keep=lambda order: order % 2 == 0)
    a[0] = G.domain.one
    return _from_codegree(G, a)


def charpoly_unicyclic(G):
    """Matchings of U plus the cycle term times matchings of U with the cycle's vertices removed."""
    cyc = unique_cycle(G)
    if cyc is None:
        raise NotUnicyclic("underlying graph is not connected with exactly one cycle")
    n, p = G.n, len(cyc)
    a = _signed_matching_poly(G)
    rest = [v for v in range(n) if v not in set(cyc)]
    S_rest = matching_sums(induced_subgraph(G, rest)) if rest else [G.domain.one]
    term = cycle_term(G, cyc)
    for i in range((n - p) // 2 + 1):
        if i < len(S_rest):
            a[p + 2 * i] = a[p + 2 * i] + term * S_rest[i] * (-1) ** (i + 1)
    return _from_codegree(G, a)


def charpoly_star(G):
    """x^(n+1) - (sum of g over the edges) x^(n-1)."""
    if star_center(G) is None:
        raise NotAStar("underlying graph is not a star K_{1,n}")
    a = [G.domain.zero] * (G.n + 1)
    a[0] = G.domain.one
    a[2] = -sum((edge_g(G, k) for k in range(G.m)), G.domain.zero)
    return _from_codegree(G, a)


def double_star_coefficients(G):
    """``(a2, a4)``: sum of g over edges and over 2-matchings."""
    if double_star_centers(G) is None:
        raise NotADoubleStar("underlying graph is not a double star")
    S = matching_sums(G)
    return S[1], S[2]


def charpoly_double_star(G):
    a2, a4 = double_star_coefficients(G)
    a = [G.domain.zero] * (G.n + 1)
    a[0] = G.domain.one
    a[2] = -a2
    a[4] = a4
    return _from_codegree(G, a)


def kmn_blocks(G):
    """``(B, Bsharp, left, right)`` for K_{m,n} with ``len(left) = m <= n``.

    ``B[i][j]`` is the gain of left[i] -> right[j]; the adjacency matrix in
    the order left + right is ``[[0, B], [B#, 0]]``.
    """
    parts = complete_bipartite_parts(G)
    if parts is None:
        raise NotCompleteBipartite("underlying graph is not complete bipartite")
    left, right = parts
    A = adjacency_matrix(G)
    B = A.submatrix(left, right)
    return B, sharp(B, G.f), left, right


def charpoly_kmn(G):
    """x^(n-m) det(x^2 I - B B#)."""
    B, Bs, left, right = kmn_blocks(G)
    q = characteristic_polynomial(B @ Bs).compose_square()
    return q * Polynomial.monomial(len(right) - len(left), G.domain)


ROUTES = {
    "subgraphs": charpoly_subgraphs,
    "direct": charpoly_direct,
    "path": charpoly_path,
    "cycle": charpoly_cycle,
    "star": charpoly_star,
    "doublestar": charpoly_double_star,
    "kmn": charpoly_kmn,
    "unicyclic": charpoly_unicyclic,
    "bipartite": charpoly_bipartite,
}

# most specific first
AUTO_PREFERENCE = ("path", "cycle", "star", "doublestar", "kmn", "unicyclic", "bipartite", "subgraphs")


def applicable_routes(G):
    """Names of all routes whose structural precondition G satisfies."""
    checks = {
        "path": lambda: path_order(G) is not None,
        "cycle": lambda: cycle_order(G) is not None,
        "star": lambda: star_center(G) is not None,
        "doublestar": lambda: double_star_centers(G) is not None,
        "kmn": lambda: complete_bipartite_parts(G) is not None,
        "unicyclic": lambda: unique_cycle(G) is not None,
        "bipartite": lambda: bipartition(G) is not None,
    }
    names = ["subgraphs", "direct"]
    names += [name for name in AUTO_PREFERENCE if name in checks and checks[name]()]
    return names


def auto_route(G):
    available = set(applicable_routes(G))
    return next(name for name in AUTO_PREFERENCE if name in available)


def compute_charpoly(G, route="auto"):
    if route == "auto":
        route = auto_route(G)
    try:
        fn = ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; choose from auto, {', '.join(ROUTES)}") from None
    return fn(G)

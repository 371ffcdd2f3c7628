"""Skew gain graphs, named families, and the combinatorics of their subgraphs."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import kernels
from .errors import (
    BadGainCount, DomainMismatch, DuplicateEdge, FamilyTooSmall, LoopEdge,
    VertexOutOfRange, ZeroGain,
)
from .scalar import AntiInvolution, Domain, GaussianRational, apply_anti_involution


@dataclass(frozen=True, eq=False)
class SkewGainGraph:
    """A simple graph on vertices ``0..n-1`` with one gain per edge.

    ``edges[k] = (u, v, a)`` with ``u < v`` stores the gain of the oriented
    edge u -> v; the gain of v -> u is always ``f(a)`` and is never stored.
    Build instances with :func:`build_graph` or the ``make_*`` helpers.
    """

    n: int
    edges: tuple
    f: AntiInvolution
    domain: Domain
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def m(self):
        return len(self.edges)

    def edge_index(self, u, v):
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self._index

    def gain(self, u, v):
        """Gain of the oriented edge u -> v."""
        if u < v:
            return self.edges[self._index[(u, v)]][2]
        return apply_anti_involution(self.f, self.edges[self._index[(v, u)]][2], self.domain)

    @cached_property
    def adjacency_masks(self):
        adj = [0] * self.n
        for u, v, _ in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def neighbors(self):
        return tuple(tuple(w for w in range(self.n) if mask >> w & 1) for mask in self.adjacency_masks)

    def degree(self, v):
        return len(self.neighbors[v])

    def same_structure(self, other):
        return (self.n, self.f, self.domain) == (other.n, other.f, other.domain) and \
            sorted(self._index) == sorted(other._index) and \
            all(self.gain(u, v) == other.gain(u, v) for u, v in self._index)

    @cached_property
    def cycles(self):
        """All simple cycles, canonical rotation and direction, deterministic order."""
        return tuple(kernels.simple_cycles(self.n, list(self.adjacency_masks)))


def build_graph(n, edges, f, domain):
    """Validate and canonicalise a skew gain graph.

    An edge given as ``(v, u, a)`` with ``v > u`` describes the gain of
    v -> u, so it is stored as ``(u, v, f(a))``.
    """
    f = AntiInvolution(f)
    domain = Domain(domain)
    if not f.admissible(domain):
        raise DomainMismatch(f"{f.value} is not admissible for the {domain.value} domain")
    if n < 1:
        raise VertexOutOfRange("a graph needs at least one vertex")
    stored = []
    index = {}
    for u, v, a in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        a = domain.coerce(a)
        if not a:
            raise ZeroGain(f"edge ({u}, {v}) has zero gain")
        if u > v:
            u, v, a = v, u, apply_anti_involution(f, a, domain)
        if (u, v) in index:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        index[(u, v)] = len(stored)
        stored.append((u, v, a))
    return SkewGainGraph(n, tuple(stored), f, domain, index)


def induced_subgraph(G, keep):
    """Subgraph induced on ``keep``, relabelled ``0..len(keep)-1`` in the given order."""
    keep = list(keep)
    relabel = {v: k for k, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v], a) for u, v, a in G.edges if u in relabel and v in relabel]
    if not keep:
        return None
    return build_graph(len(keep), edges, G.f, G.domain)


# ---------------------------------------------------------------------------
# families

def _gains(gains, count, domain):
    if gains is None:
        return [domain.one] * count
    gains = list(gains)
    if len(gains) != count:
        raise BadGainCount(f"expected {count} gains, got {len(gains)}")
    return gains


def make_path(n, gains=None, f=AntiInvolution.IDENTITY, domain=Domain.RATIONAL):
    if n < 1:
        raise FamilyTooSmall("a path needs at least one vertex")
    gains = _gains(gains, n - 1, Domain(domain))
    return build_graph(n, [(k, k + 1, g) for k, g in enumerate(gains)], f, domain)


def make_cycle(n, gains=None, f=AntiInvolution.IDENTITY, domain=Domain.RATIONAL):
    """C_n with edges k -> k+1 and finally n-1 -> 0, in that orientation."""
    if n < 3:
        raise FamilyTooSmall("a simple cycle needs at least three vertices")
    gains = _gains(gains, n, Domain(domain))
    return build_graph(n, [(k, (k + 1) % n, g) for k, g in enumerate(gains)], f, domain)


def make_star(n_leaves, gains=None, f=AntiInvolution.IDENTITY, domain=Domain.RATIONAL):
    """K_{1,n}: centre 0, leaves 1..n, edges oriented centre -> leaf."""
    if n_leaves < 1:
        raise FamilyTooSmall("a star needs at least one leaf")
    gains = _gains(gains, n_leaves, Domain(domain))
    return build_graph(n_leaves + 1, [(0, k + 1, g) for k, g in enumerate(gains)], f, domain)


def make_double_star(p_leaves, q_leaves, gains=None, f=AntiInvolution.IDENTITY, domain=Domain.RATIONAL):
    """Adjacent centres 0 and 1 carrying p and q leaves.

    Gain order: the centre edge 0 -> 1 first, then 0 -> leaf for the p
    leaves ``2..p+1``, then 1 -> leaf for the q leaves.
    """
    if p_leaves < 1 or q_leaves < 1:
        raise FamilyTooSmall("each centre of a double star needs a leaf")
    gains = _gains(gains, p_leaves + q_leaves + 1, Domain(domain))
    edges = [(0, 1)]
    edges += [(0, 2 + k) for k in range(p_leaves)]
    edges += [(1, 2 + p_leaves + k) for k in range(q_leaves)]
    return build_graph(p_leaves + q_leaves + 2, [(u, v, g) for (u, v), g in zip(edges, gains)], f, domain)


def make_complete_bipartite(m, n, gains=None, f=AntiInvolution.IDENTITY, domain=Domain.RATIONAL):
    """K_{m,n}: left part ``0..m-1``, right part ``m..m+n-1``, gains row-major."""
    if m < 1 or n < 1:
        raise FamilyTooSmall("both parts of K_{m,n} must be nonempty")
    gains = _gains(gains, m * n, Domain(domain))
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return build_graph(m + n, [(u, v, g) for (u, v), g in zip(edges, gains)], f, domain)


def random_gain(rng, domain, bound=3):
    """A small nonzero gain: numerators and denominators up to ``bound``."""
    def rat(allow_zero):
        while True:
            q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if q or allow_zero:
                return q

    if domain is Domain.RATIONAL:
        return rat(False)
    if domain is Domain.GAUSSIAN_RATIONAL:
        while True:
            z = GaussianRational(rat(True), rat(True))
            if z:
                return z
    while True:
        z = complex(round(rng.uniform(-2, 2), 6), round(rng.uniform(-2, 2), 6))
        if abs(z) > 1e-3:
            return z


def random_gains(count, domain, seed=None, rng=None):
    rng = rng or random.Random(seed)
    return [random_gain(rng, Domain(domain)) for _ in range(count)]


# ---------------------------------------------------------------------------
# matchings and elementary subgraphs

@dataclass(frozen=True, order=True)
class ElementarySubgraph:
    """Vertex-disjoint single edges (by edge index) and cycles (vertex tuples)."""

    k2_edges: tuple
    cycles: tuple

    @property
    def order(self):
        return 2 * len(self.k2_edges) + sum(len(c) for c in self.cycles)

    @property
    def components(self):
        return len(self.k2_edges) + len(self.cycles)


def _components(G, with_cycles=True):
    """Component catalogue: ``(kind, payload, mask)`` for every edge and cycle."""
    comps = [("edge", k, (1 << u) | (1 << v)) for k, (u, v, _) in enumerate(G.edges)]
    if with_cycles:
        for cyc in G.cycles:
            mask = 0
            for w in cyc:
                mask |= 1 << w
            comps.append(("cycle", cyc, mask))
    return comps


def elementary_families(G, order=-1, with_cycles=True):
    """Raw enumeration: ``(components, families)`` where each family indexes components."""
    comps = _components(G, with_cycles)
    families = kernels.disjoint_families(G.n, [c[2] for c in comps], order)
    return comps, families


def enumerate_matchings(G, k):
    """All k-edge matchings as sorted edge-index tuples, in lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if 2 * k > G.n:
        return []
    comps, families = elementary_families(G, 2 * k, with_cycles=False)
    return sorted(tuple(sorted(comps[c][1] for c in fam)) for fam in families)


def enumerate_elementary_subgraphs(G, i):
    """All elementary subgraphs of order exactly i, sorted."""
    if i < 0 or i > G.n:
        raise ValueError(f"order must lie in 0..{G.n}")
    comps, families = elementary_families(G, i)
    out = []
    for fam in families:
        k2 = tuple(sorted(comps[c][1] for c in fam if comps[c][0] == "edge"))
        cyc = tuple(sorted(comps[c][1] for c in fam if comps[c][0] == "cycle"))
        out.append(ElementarySubgraph(k2, cyc))
    return sorted(out)


def matching_number(G):
    """Size of a maximum matching, by exhaustive search."""
    best = 0
    for k in range(1, G.n // 2 + 1):
        if not kernels.disjoint_families(G.n, [c[2] for c in _components(G, False)], 2 * k):
            break
        best = k
    return best


# ---------------------------------------------------------------------------
# structure recognition

def is_connected(G):
    seen = 1
    frontier = [0]
    adj = G.adjacency_masks
    while frontier:
        v = frontier.pop()
        new = adj[v] & ~seen
        seen |= new
        frontier.extend(w for w in range(G.n) if new >> w & 1)
    return seen == (1 << G.n) - 1


def is_tree(G):
    return G.m == G.n - 1 and is_connected(G)


def bipartition(G):
    """A 2-colouring as a list of 0/1, or None if G has an odd cycle."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def path_order(G):
    """Vertices along the path if G is a path, else None."""
    if not is_tree(G) or any(G.degree(v) > 2 for v in range(G.n)):
        return None
    if G.n == 1:
        return [0]
    start = min(v for v in range(G.n) if G.degree(v) == 1)
    order, prev = [start], None
    while len(order) < G.n:
        nxt = next(w for w in G.neighbors[order[-1]] if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def cycle_order(G):
    """The canonical vertex cycle if G is a cycle, else None."""
    if G.n < 3 or G.m != G.n or not is_connected(G) or any(G.degree(v) != 2 for v in range(G.n)):
        return None
    return G.cycles[0]


def star_center(G):
    """Centre of K_{1,n} (n >= 1), else None.  K_2 reports vertex 0."""
    if G.n < 2 or G.m != G.n - 1:
        return None
    for v in range(G.n):
        if G.degree(v) == G.n - 1:
            return v
    return None


def double_star_centers(G):
    """``(c0, c1)`` for a double star with p, q >= 1 leaves, else None."""
    if G.n < 4 or not is_tree(G):
        return None
    inner = [v for v in range(G.n) if G.degree(v) > 1]
    if len(inner) != 2 or not G.has_edge(*inner):
        return None
    return tuple(inner)


def complete_bipartite_parts(G):
    """``(smaller, larger)`` vertex lists if G is K_{m,n}, else None."""
    if G.n < 2 or not is_connected(G):
        return None
    color = bipartition(G)
    if color is None:
        return None
    left = [v for v in range(G.n) if color[v] == 0]
    right = [v for v in range(G.n) if color[v] == 1]
    if G.m != len(left) * len(right):
        return None
    return (left, right) if len(left) <= len(right) else (right, left)


def unique_cycle(G):
    """The only cycle of a connected unicyclic graph, else None."""
    if G.m != G.n or not is_connected(G):
        return None
    cycles = G.cycles
    return cycles[0] if len(cycles) == 1 else None

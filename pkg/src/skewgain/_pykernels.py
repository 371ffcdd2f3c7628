"""Pure-Python kernels; the reference the compiled versions must agree with.

Graphs reach these functions as adjacency bitmasks: ``adj[v]`` has bit ``w``
set when ``v ~ w``.
"""


def simple_cycles(n, adj):
    """All simple cycles of length >= 3, each once, in canonical form.

    A cycle is reported starting at its smallest vertex and walking towards
    the smaller of that vertex's two cycle neighbours.
    """
    out = []
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(v, used):
            nbrs = adj[v] & higher & ~used
            while nbrs:
                low = nbrs & -nbrs
                w = low.bit_length() - 1
                nbrs ^= low
                path.append(w)
                if len(path) >= 3 and adj[w] >> s & 1 and path[1] < w:
                    out.append(tuple(path))
                extend(w, used | low)
                path.pop()

        extend(s, 1 << s)
    return out


def disjoint_families(n, masks, order=-1):
    """Every set of pairwise vertex-disjoint components.

    ``masks[k]`` is the vertex set of component k (nonzero). Each family is
    returned once as a tuple of component indices ordered by smallest
    vertex. With ``order >= 0`` only families covering exactly that many
    vertices are produced.
    """
    by_min = [[] for _ in range(n)]
    for k, m in enumerate(masks):
        by_min[(m & -m).bit_length() - 1].append(k)
    sizes = [bin(m).count("1") for m in masks]
    out = []
    chosen = []

    def rec(v, used, covered):
        if order >= 0 and (covered > order or covered + (n - v) < order):
            return
        if v == n:
            if order < 0 or covered == order:
                out.append(tuple(chosen))
            return
        rec(v + 1, used, covered)
        if used >> v & 1:
            return
        for k in by_min[v]:
            if masks[k] & used:
                continue
            chosen.append(k)
            rec(v + 1, used | masks[k], covered + sizes[k])
            chosen.pop()

    rec(0, 0, 0)
    return out


def durand_kerner(coeffs, tol=1e-14, max_iter=2000):
    """Simultaneous Weierstrass iteration for the roots of a polynomial.

    ``coeffs`` are complex, descending degree, leading coefficient nonzero.
    Returns ``(roots, converged)``.
    """
    lead = coeffs[0]
    c = [x / lead for x in coeffs]
    deg = len(c) - 1
    if deg < 1:
        return [], True
    radius = 1.0 + max(abs(x) for x in c[1:])
    seed = complex(0.4, 0.9)
    roots = [radius * seed ** k for k in range(deg)]
    roots = [r if r != 0 else complex(radius, 0) for r in roots]
    for _ in range(max_iter):
        worst = 0.0
        for i in range(deg):
            z = roots[i]
            val = _horner(c, z)
            denom = 1.0 + 0j
            for j in range(deg):
                if j != i:
                    diff = z - roots[j]
                    denom *= diff if diff != 0 else 1e-300
            step = val / denom
            roots[i] = z - step
            scale = max(1.0, abs(z))
            if abs(step) / scale > worst:
                worst = abs(step) / scale
        if worst < tol:
            return roots, True
    return roots, False


def _horner(c, z):
    val = 0j
    for a in c:
        val = val * z + a
    return val

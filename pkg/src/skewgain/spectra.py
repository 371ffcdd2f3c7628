"""Spectra of skew gain graphs: numeric roots and the closed forms for special families."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from .charpoly import (
    charpoly_direct, double_star_coefficients, edge_g, kmn_blocks,
)
from .errors import NotAStar
from .graph import (
    complete_bipartite_parts, double_star_centers, is_tree, matching_number, star_center,
)
from .matrix import characteristic_polynomial
from .poly import numeric_roots

MERGE_TOL = 1e-7


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted by (real, imag)."""

    entries: tuple

    @property
    def order(self):
        return sum(m for _, m in self.entries)

    def values(self):
        """Eigenvalues repeated by multiplicity."""
        return [lam for lam, m in self.entries for _ in range(m)]

    def multiplicity(self, value, tol=MERGE_TOL):
        return sum(m for lam, m in self.entries if abs(lam - value) < tol)

    def is_close(self, other, tol=MERGE_TOL):
        """Same multiset of eigenvalues up to ``tol``, paired greedily."""
        a, b = self.values(), other.values()
        if len(a) != len(b):
            return False
        for x in a:
            k = min(range(len(b)), key=lambda j: abs(b[j] - x))
            if abs(b[k] - x) >= tol:
                return False
            del b[k]
        return True

    def lines(self):
        return [f"{format_eigenvalue(lam)} {m}" for lam, m in self.entries]


def format_eigenvalue(z, digits=12):
    def fmt(x):
        if abs(x) < 10 ** -digits:
            return "0"
        return f"{x:.{digits}g}"

    re_, im = fmt(z.real), fmt(z.imag)
    if im == "0":
        return re_
    if re_ == "0":
        return f"{im}i"
    return f"{re_}{'' if im.startswith('-') else '+'}{im}i"


def cluster(weighted_roots, tol=MERGE_TOL):
    """Merge roots closer than ``tol`` by repeated closest-pair agglomeration.

    Input is ``[(root, multiplicity), ...]``; a merged root is the
    multiplicity-weighted mean of its members.
    """
    groups = [[complex(r), m] for r, m in weighted_roots if m > 0]
    while len(groups) > 1:
        best, pair = None, None
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                d = abs(groups[i][0] - groups[j][0])
                if best is None or d < best:
                    best, pair = d, (i, j)
        if best >= tol:
            break
        i, j = pair
        (zi, mi), (zj, mj) = groups[i], groups[j]
        groups[i] = [(zi * mi + zj * mj) / (mi + mj), mi + mj]
        del groups[j]
    for g in groups:
        # snap numerical noise so real spectra print as real numbers
        z = g[0]
        g[0] = complex(0.0 if abs(z.real) < 1e-13 else z.real, 0.0 if abs(z.imag) < 1e-13 else z.imag)
    return Spectrum(tuple(sorted(((z, m) for z, m in groups), key=lambda e: (e[0].real, e[0].imag))))


def spectrum_numeric(G):
    """Roots of the characteristic polynomial with multiplicities."""
    return cluster(numeric_roots(charpoly_direct(G)))


def _pm_sqrt(value, mult=1):
    r = cmath.sqrt(complex(value))
    return [(-r, mult), (r, mult)]


def star_spectrum(G):
    """+-sqrt(sum of g over the edges), and 0 with multiplicity n - 1 for K_{1,n}."""
    if star_center(G) is None:
        raise NotAStar("underlying graph is not a star K_{1,n}")
    total = sum((edge_g(G, k) for k in range(G.m)), G.domain.zero)
    return cluster(_pm_sqrt(total) + [(0j, G.n - 2)])


def double_star_spectrum(G):
    """+-sqrt((a2 +- sqrt(a2^2 - 4 a4)) / 2) and 0 with multiplicity n - 4."""
    a2, a4 = double_star_coefficients(G)
    a2, a4 = complex(a2), complex(a4)
    disc = cmath.sqrt(a2 * a2 - 4 * a4)
    roots = _pm_sqrt((a2 - disc) / 2) + _pm_sqrt((a2 + disc) / 2)
    return cluster(roots + [(0j, G.n - 4)])


def _cubic_roots(c2, c1, c0):
    """Roots of x^3 + c2 x^2 + c1 x + c0 by Cardano, Newton-polished."""
    p = c1 - c2 * c2 / 3
    q = 2 * c2 ** 3 / 27 - c2 * c1 / 3 + c0
    disc = cmath.sqrt(q * q / 4 + p ** 3 / 27)
    u3 = -q / 2 + disc
    if abs(u3) < abs(-q / 2 - disc):
        u3 = -q / 2 - disc
    omega = complex(-0.5, 3 ** 0.5 / 2)
    if u3 == 0:
        ts = [0j, 0j, 0j]
    else:
        u = u3 ** (1 / 3)
        ts = [u * omega ** k - p / (3 * u * omega ** k) for k in range(3)]
    roots = []
    for t in ts:
        x = t - c2 / 3
        for _ in range(3):
            fx = ((x + c2) * x + c1) * x + c0
            dfx = (3 * x + 2 * c2) * x + c1
            if dfx == 0:
                break
            x -= fx / dfx
        roots.append(x)
    return roots


def bbsharp_eigenvalues(M):
    """Eigenvalues of the m x m matrix B B#, from its exact characteristic polynomial.

    m <= 3 is solved in closed form; larger m goes through the general root
    backend.  Returned with multiplicity as ``[(mu, mult), ...]``.
    """
    p = characteristic_polynomial(M)
    c = [complex(x) for x in p.coeffs]
    m = p.degree
    if m == 1:
        return [(-c[0], 1)]
    if m == 2:
        disc = cmath.sqrt(c[1] * c[1] - 4 * c[0])
        return [((-c[1] - disc) / 2, 1), ((-c[1] + disc) / 2, 1)]
    if m == 3:
        return [(r, 1) for r in _cubic_roots(c[2], c[1], c[0])]
    return numeric_roots(p)


def kmn_spectrum(G):
    """Nonzero eigenvalues +-sqrt(mu) for mu in spec(B B#), plus 0 with multiplicity n - m."""
    B, Bs, left, right = kmn_blocks(G)
    roots = []
    for mu, mult in bbsharp_eigenvalues(B @ Bs):
        roots += _pm_sqrt(mu, mult)
    return cluster(roots + [(0j, len(right) - len(left))])


def zero_multiplicity_bound(G):
    """Structural lower bound on the multiplicity of 0; 0 when no bound applies."""
    parts = complete_bipartite_parts(G)
    if parts is not None:
        return len(parts[1]) - len(parts[0])
    if is_tree(G):
        return G.n - 2 * matching_number(G)
    return 0


METHODS = {
    "numeric": spectrum_numeric,
    "star": star_spectrum,
    "doublestar": double_star_spectrum,
    "kmn": kmn_spectrum,
}


def compute_spectrum(G, method="auto"):
    if method == "auto":
        method = applicable_methods(G)[-1]
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from auto, {', '.join(METHODS)}") from None
    return fn(G)


def applicable_methods(G):
    """Methods usable on G, most generic first."""
    names = ["numeric"]
    if complete_bipartite_parts(G) is not None:
        names.append("kmn")
    if double_star_centers(G) is not None:
        names.append("doublestar")
    if star_center(G) is not None:
        names.append("star")
    return names

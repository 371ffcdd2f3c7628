"""Dense univariate polynomials over a scalar domain, and their roots."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceFailure
from .scalar import Domain

ROOT_RESIDUAL = 1e-10


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree; trailing (top) zeros are stripped."""

    coeffs: tuple
    domain: Domain

    def __post_init__(self):
        coeffs = [self.domain.coerce(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_descending(cls, coeffs, domain):
        return cls(tuple(reversed(list(coeffs))), domain)

    @classmethod
    def monomial(cls, k, domain, coeff=1):
        return cls((0,) * k + (coeff,), domain)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    def descending(self):
        return list(reversed(self.coeffs))

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        k = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(k)), self.domain)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs), self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = self.domain.coerce(other)
            return Polynomial(tuple(c * other for c in self.coeffs), self.domain)
        if not self.coeffs or not other.coeffs:
            return Polynomial((), self.domain)
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out), self.domain)

    __rmul__ = __mul__

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial((), self.domain), self
        quot = [self.domain.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            q = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * b
        return Polynomial(tuple(quot), self.domain), Polynomial(tuple(rem[: len(other.coeffs) - 1]), self.domain)

    def derivative(self):
        return Polynomial(tuple(c * k for k, c in enumerate(self.coeffs) if k), self.domain)

    def monic(self):
        lead = self.coeffs[-1]
        return Polynomial(tuple(c / lead for c in self.coeffs), self.domain)

    def compose_square(self):
        """p(x^2)."""
        out = []
        for c in self.coeffs:
            out.extend((c, self.domain.zero))
        return Polynomial(tuple(out), self.domain)

    def trailing_zeros(self):
        """Multiplicity of 0 as a root (number of vanishing low coefficients)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return len(self.coeffs)

    def shift_down(self, k):
        """Divide by x**k; the k low coefficients must vanish."""
        return Polynomial(self.coeffs[k:], self.domain)

    def is_close(self, other, tol=1e-9):
        k = max(len(self.coeffs), len(other.coeffs))
        return all(self.domain.is_close(self.coeff(i), other.coeff(i), tol) for i in range(k))

    def format(self):
        """Descending, space-separated literals."""
        if not self.coeffs:
            return self.domain.format(self.domain.zero)
        return " ".join(self.domain.format(c) for c in self.descending())

    def __str__(self):
        return self.format()


def poly_gcd(a, b):
    """Monic gcd over an exact field."""
    while b.coeffs:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a.coeffs else a


def squarefree_decomposition(p):
    """Yun's algorithm: ``[(factor, multiplicity), ...]`` with square-free monic factors."""
    p = p.monic()
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.divmod(a)[0]
    c = dp.divmod(a)[0]
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b.divmod(a)[0]
        c = d.divmod(a)[0]
        d = c - b.derivative()
        k += 1
    return out


def interpolate(xs, ys, domain):
    """Exact Newton interpolation through the points ``(xs[k], ys[k])``."""
    n = len(xs)
    table = list(ys)
    coeffs = [table[0]]
    for level in range(1, n):
        table = [(table[k + 1] - table[k]) / (xs[k + level] - xs[k]) for k in range(n - level)]
        coeffs.append(table[0])
    result = Polynomial((coeffs[-1],), domain)
    for k in range(n - 2, -1, -1):
        result = result * Polynomial((-xs[k], 1), domain) + Polynomial((coeffs[k],), domain)
    return result


def interpolation_points(count):
    """0, 1, -1, 2, -2, ..."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


# ---------------------------------------------------------------------------
# numeric roots

def _horner(coeffs, z):
    val = 0j
    for a in coeffs:
        val = val * z + a
    return val


def _polish(desc, root, steps=3):
    deg = len(desc) - 1
    ddesc = [desc[k] * (deg - k) for k in range(deg)]
    for _ in range(steps):
        d = _horner(ddesc, root)
        if d == 0:
            break
        step = _horner(desc, root) / d
        if not cmath.isfinite(step):
            break
        root -= step
    return root


def _relative_residual(desc, z):
    scale = sum(abs(c) * abs(z) ** (len(desc) - 1 - k) for k, c in enumerate(desc))
    return abs(_horner(desc, z)) / scale if scale else 0.0


def simple_roots(desc):
    """Roots of a complex polynomial (descending coefficients) with simple roots.

    Degrees 1 and 2 are solved in closed form; higher degrees by
    Durand-Kerner, falling back to companion-matrix eigenvalues if the
    iteration stalls.  Every root is Newton-polished and must reach a
    relative residual below ``ROOT_RESIDUAL``.
    """
    desc = [complex(c) for c in desc]
    deg = len(desc) - 1
    if deg < 1:
        return []
    if deg == 1:
        return [-desc[1] / desc[0]]
    if deg == 2:
        a, b, c = desc
        disc = cmath.sqrt(b * b - 4 * a * c)
        # avoid cancellation
        q = -0.5 * (b + disc if (b.conjugate() * disc).real >= 0 else b - disc)
        if q == 0:
            return [0j, 0j]
        roots = [q / a, c / q]
    else:
        roots, ok = kernels.durand_kerner(desc)
        if not ok:
            roots = list(np.roots(desc))
    roots = [_polish(desc, complex(r)) for r in roots]
    worst = max(_relative_residual(desc, r) for r in roots)
    if worst > ROOT_RESIDUAL:
        raise ConvergenceFailure(f"root residual {worst:.3g} above {ROOT_RESIDUAL}")
    return roots


def numeric_roots(p):
    """All roots of p with multiplicity, as ``[(root, multiplicity), ...]``.

    Exact polynomials are first split into square-free factors so that
    repeated roots are found as simple roots of a factor.
    """
    if p.degree < 1:
        return []
    out = []
    z = p.trailing_zeros()
    if z:
        out.append((0j, z))
        p = p.shift_down(z)
    if p.domain.is_exact:
        for factor, mult in squarefree_decomposition(p):
            for r in simple_roots(factor.descending()):
                out.append((r, mult))
    else:
        out.extend((r, 1) for r in simple_roots(p.descending()))
    return out

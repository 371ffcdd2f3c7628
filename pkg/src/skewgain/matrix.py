"""Dense matrices over a scalar domain: adjacency, B^#, determinants, block identities."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import NotCommuting, NotSquare, ShapeMismatch, SingularBlock
from .poly import Polynomial, interpolate, interpolation_points
from .scalar import FLOAT_TOL, Domain, GaussianRational, apply_anti_involution


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple
    domain: Domain

    @classmethod
    def from_rows(cls, rows, domain):
        rows = [tuple(domain.coerce(x) for x in r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeMismatch("matrices must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), len(rows[0]), tuple(rows), domain)

    @classmethod
    def zeros(cls, rows, cols, domain):
        z = domain.zero
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)), domain)

    @classmethod
    def identity(cls, n, domain, scale=1):
        z, s = domain.zero, domain.coerce(scale)
        return cls(n, n, tuple(tuple(s if i == j else z for j in range(n)) for i in range(n)), domain)

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)), self.domain)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)), self.domain)

    def __neg__(self):
        return Matrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries), self.domain)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        z = self.domain.zero
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.rows, other.cols, tuple(out), self.domain)

    def scale(self, s):
        s = self.domain.coerce(s)
        return Matrix(self.rows, self.cols, tuple(tuple(a * s for a in r) for r in self.entries), self.domain)

    def transpose(self):
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)), self.domain)

    def submatrix(self, rows, cols):
        return Matrix(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
                      self.domain)

    def is_close(self, other, tol=FLOAT_TOL):
        return self.shape == other.shape and all(
            self.domain.is_close(a, b, tol)
            for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def to_numpy(self):
        import numpy as np
        return np.array([[complex(x) for x in r] for r in self.entries], dtype=complex)

    def format(self):
        return "\n".join(" ".join(self.domain.format(x) for x in r) for r in self.entries)


def block(A, B, C, D):
    """Assemble ``[[A, B], [C, D]]``."""
    if A.rows != B.rows or C.rows != D.rows or A.cols != C.cols or B.cols != D.cols:
        raise ShapeMismatch("blocks are not conformable")
    top = tuple(ra + rb for ra, rb in zip(A.entries, B.entries))
    bottom = tuple(rc + rd for rc, rd in zip(C.entries, D.entries))
    return Matrix(A.rows + C.rows, A.cols + B.cols, top + bottom, A.domain)


def adjacency_matrix(G):
    z = G.domain.zero
    rows = [[z] * G.n for _ in range(G.n)]
    for u, v, a in G.edges:
        rows[u][v] = a
        rows[v][u] = G.gain(v, u)
    return Matrix(G.n, G.n, tuple(tuple(r) for r in rows), G.domain)


def sharp(B, f):
    """B^# = (B^f)^T, with f applied to nonzero entries only."""
    z = B.domain.zero
    image = tuple(tuple(apply_anti_involution(f, x, B.domain) if x else z for x in r) for r in B.entries)
    return Matrix(B.rows, B.cols, image, B.domain).transpose()


# ---------------------------------------------------------------------------
# determinants

def _bareiss_int(rows):
    """Fraction-free elimination over Z; rows are mutated."""
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        p = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - a * rk[j]) // prev
        prev = p
    return sign * rows[n - 1][n - 1]


def _bareiss_gauss(rows):
    """Fraction-free elimination over Z[i]; entries are (re, im) int pairs."""
    n = len(rows)
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if rows[k][k] == (0, 0):
            for r in range(k + 1, n):
                if rows[r][k] != (0, 0):
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        pr, pi = rows[k][k]
        qr, qi = prev
        qn = qr * qr + qi * qi
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            ar, ai = ri[k]
            for j in range(k + 1, n):
                xr, xi = ri[j]
                br, bi = rk[j]
                # x*p - a*b, then exact division by prev (multiply by conj, divide by norm)
                tr = xr * pr - xi * pi - (ar * br - ai * bi)
                ti = xr * pi + xi * pr - (ar * bi + ai * br)
                ri[j] = ((tr * qr + ti * qi) // qn, (ti * qr - tr * qi) // qn)
        prev = (pr, pi)
    dr, di = rows[n - 1][n - 1]
    return (sign * dr, sign * di)


def _det_float(rows):
    n = len(rows)
    det = 1 + 0j
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(rows[r][k]))
        if rows[piv][k] == 0:
            return 0j
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        p = rows[k][k]
        det *= p
        for i in range(k + 1, n):
            factor = rows[i][k] / p
            if factor:
                ri, rk = rows[i], rows[k]
                for j in range(k + 1, n):
                    ri[j] -= factor * rk[j]
    return det


def det(M):
    """Determinant: Bareiss elimination in exact domains, partial pivoting for floats."""
    if not M.is_square:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    dom = M.domain
    if dom is Domain.COMPLEX_FLOAT:
        return _det_float([list(r) for r in M.entries])
    if dom is Domain.RATIONAL:
        rows, scale = [], 1
        for r in M.entries:
            L = math.lcm(*(x.denominator for x in r))
            rows.append([x.numerator * (L // x.denominator) for x in r])
            scale *= L
        return Fraction(_bareiss_int(rows), scale)
    rows, scale = [], 1
    for r in M.entries:
        parts = [x.as_integers() for x in r]
        L = math.lcm(*(d for _, _, d in parts))
        rows.append([(a * (L // d), b * (L // d)) for a, b, d in parts])
        scale *= L
    dr, di = _bareiss_gauss(rows)
    return GaussianRational(Fraction(dr, scale), Fraction(di, scale))


def det_cofactor(M):
    """Leibniz permutation expansion; the meta-oracle for small matrices."""
    if not M.is_square:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    n = M.rows
    total = M.domain.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = M.domain.one
        for i, j in enumerate(perm):
            term = term * M.entries[i][j]
            if not term:
                break
        if term:
            total = total - term if inversions % 2 else total + term
    return total


def shifted(M, x):
    """x I - M."""
    x = M.domain.coerce(x)
    return Matrix(M.rows, M.cols, tuple(
        tuple((x - a) if i == j else -a for j, a in enumerate(r)) for i, r in enumerate(M.entries)),
        M.domain)


def characteristic_polynomial(M):
    """det(x I - M) by evaluation at n+1 points and interpolation.

    Exact domains use the points 0, 1, -1, 2, -2, ... with exact Newton
    interpolation.  Complex floats sample a circle enclosing the spectrum
    and invert the discrete Fourier transform, which stays well conditioned.
    """
    if not M.is_square:
        raise NotSquare(f"characteristic polynomial of a {M.rows}x{M.cols} matrix")
    n = M.rows
    dom = M.domain
    if dom.is_exact:
        xs = [dom.coerce(x) for x in interpolation_points(n + 1)]
        ys = [det(shifted(M, x)) for x in xs]
        return interpolate(xs, ys, dom)
    radius = max(1.0, max(sum(abs(a) for a in r) for r in M.entries))
    N = n + 1
    xs = [radius * cmath.exp(2j * cmath.pi * k / N) for k in range(N)]
    ys = [det(shifted(M, x)) for x in xs]
    coeffs = []
    for j in range(N):
        s = sum(ys[k] * cmath.exp(-2j * cmath.pi * j * k / N) for k in range(N)) / N
        coeffs.append(s / radius ** j)
    coeffs[-1] = 1 + 0j
    return Polynomial(tuple(coeffs), dom)


def inverse(M):
    """Gauss-Jordan inverse; SingularBlock if M is singular."""
    if not M.is_square:
        raise NotSquare("only square matrices have inverses")
    n = M.rows
    dom = M.domain
    aug = [list(r) + [dom.one if i == j else dom.zero for j in range(n)] for i, r in enumerate(M.entries)]
    for k in range(n):
        if dom.is_exact:
            piv = next((r for r in range(k, n) if aug[r][k]), None)
        else:
            piv = max(range(k, n), key=lambda r: abs(aug[r][k]))
            if abs(aug[piv][k]) <= FLOAT_TOL:
                piv = None
        if piv is None:
            raise SingularBlock("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        p = aug[k][k]
        aug[k] = [x / p for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                factor = aug[i][k]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[k])]
    return Matrix(n, n, tuple(tuple(r[n:]) for r in aug), dom)


@dataclass(frozen=True)
class BlockCheck:
    identity: str
    lhs: object
    rhs: object
    agree: bool


def block_determinant_check(A, B, C, D, branch="auto", tol=FLOAT_TOL):
    """Evaluate both sides of a block-determinant identity for ``M = [[A, B], [C, D]]``.

    Branches: ``"commuting"`` uses det M = det(AD - BC) when CD = DC;
    ``"schur_a"`` uses det A det(D - C A^-1 B); ``"schur_d"`` uses
    det D det(A - B D^-1 C).  ``"auto"`` tries them in that order.
    """
    M = block(A, B, C, D)
    dom = A.domain
    lhs = det(M)

    if branch == "auto":
        for name in ("commuting", "schur_a", "schur_d"):
            try:
                return block_determinant_check(A, B, C, D, name, tol)
            except (NotCommuting, SingularBlock, ShapeMismatch, NotSquare):
                continue
        raise SingularBlock("no block identity applies to these blocks")

    if branch == "commuting":
        if not (A.is_square and C.is_square and A.shape == C.shape == D.shape):
            raise ShapeMismatch("commuting branch needs four square blocks of one size")
        if not (C @ D).is_close(D @ C, tol):
            raise NotCommuting("C and D do not commute")
        rhs = det(A @ D - B @ C)
    elif branch == "schur_a":
        if not A.is_square:
            raise NotSquare("A must be square")
        rhs = det(A) * det(D - C @ inverse(A) @ B)
    elif branch == "schur_d":
        if not D.is_square:
            raise NotSquare("D must be square")
        rhs = det(D) * det(A - B @ inverse(D) @ C)
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return BlockCheck(branch, lhs, rhs, dom.is_close(lhs, rhs, tol))

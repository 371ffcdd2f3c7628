"""Scalar domains and the anti-involutions of their multiplicative groups.

Three fields are supported:

* ``Domain.RATIONAL``: values are :class:`fractions.Fraction`.
* ``Domain.GAUSSIAN_RATIONAL``: values are :class:`GaussianRational`, exact
  elements ``a + b i`` of Q(i).
* ``Domain.COMPLEX_FLOAT``: values are plain ``complex``.

Values are ordinary Python numbers, so the rest of the package does its
arithmetic with the usual operators and only consults the :class:`Domain`
when it needs to parse, print, coerce or pick a tolerance.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational

from .errors import DomainMismatch, ZeroGain

FLOAT_TOL = 1e-9


class GaussianRational:
    """Exact element of Q(i).

    Stored as ``(re + im*i) / den`` with ``den > 0`` and
    ``gcd(re, im, den) == 1``, so equality is structural.
    """

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, real=0, imag=0):
        real = Fraction(real)
        imag = Fraction(imag)
        den = real.denominator * imag.denominator // math.gcd(real.denominator, imag.denominator)
        self._set(real.numerator * (den // real.denominator),
                  imag.numerator * (den // imag.denominator), den)

    def _set(self, re_, im_, den):
        g = math.gcd(math.gcd(re_, im_), den)
        if g != 1:
            re_ //= g
            im_ //= g
            den //= g
        self._re, self._im, self._den = re_, im_, den

    @classmethod
    def _raw(cls, re_, im_, den):
        # den must be positive
        obj = object.__new__(cls)
        obj._set(re_, im_, den)
        return obj

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return cls._raw(other, 0, 1)
        if isinstance(other, Rational):
            return cls._raw(other.numerator, 0, other.denominator)
        return None

    @property
    def real(self):
        return Fraction(self._re, self._den)

    @property
    def imag(self):
        return Fraction(self._im, self._den)

    def as_integers(self):
        """Return ``(re, im, den)`` with value ``(re + im i) / den``."""
        return self._re, self._im, self._den

    def conjugate(self):
        return GaussianRational._raw(self._re, -self._im, self._den)

    def norm(self):
        """``|z|**2`` as a Fraction."""
        return Fraction(self._re * self._re + self._im * self._im, self._den * self._den)

    def __complex__(self):
        return complex(self._re / self._den, self._im / self._den)

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im and self._den == o._den

    def __hash__(self):
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __neg__(self):
        return GaussianRational._raw(-self._re, -self._im, self._den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        if d1 == d2:
            return GaussianRational._raw(self._re + o._re, self._im + o._im, d1)
        return GaussianRational._raw(self._re * d2 + o._re * d1, self._im * d2 + o._im * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational._raw(a * c - b * d, a * d + b * c, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero in Q(i)")
        # (a+bi)/p / ((c+di)/q) = q (a+bi)(c-di) / (p (c^2+d^2))
        a, b, c, d = self._re, self._im, o._re, o._im
        nrm = c * c + d * d
        return GaussianRational._raw(o._den * (a * c + b * d), o._den * (b * c - a * d), self._den * nrm)

    def __rtruediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussianRational._raw(1, 0, 1) / self) ** (-k)
        result = GaussianRational._raw(1, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"

    def __str__(self):
        return format_gaussian(self)


# ---------------------------------------------------------------------------
# literals

_RAT = r"\d+(?:/\d+)?"
_FLT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_RAT_RE = re.compile(rf"^[+-]?{_RAT}$")
_GAUSS_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RAT})?i$")
_GAUSS_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_RAT})(?:(?P<sign>[+-])(?P<im>{_RAT})?i)?$")
_FLT_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_FLT})?i$")
_FLT_FULL_RE = re.compile(rf"^(?P<re>[+-]?(?:{_FLT}))(?:(?P<sign>[+-])(?P<im>{_FLT})?i)?$")


def _parse_rational(text):
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational literal {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def _split_complex(text, imag_re, full_re, conv):
    m = imag_re.match(text)
    if m:
        im = conv(m["im"]) if m["im"] else conv("1")
        return conv("0"), (-im if m["sign"] == "-" else im)
    m = full_re.match(text)
    if not m:
        raise ValueError(f"malformed complex literal {text!r}")
    re_ = conv(m["re"])
    if m["sign"] is None:
        return re_, conv("0")
    im = conv(m["im"]) if m["im"] else conv("1")
    return re_, (-im if m["sign"] == "-" else im)


def _format_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z):
    re_, im = z.real, z.imag
    if im == 0:
        return _format_fraction(re_)
    mag = abs(im)
    imag_txt = "i" if mag == 1 else f"{_format_fraction(mag)}i"
    if re_ == 0:
        return ("-" if im < 0 else "") + imag_txt
    return f"{_format_fraction(re_)}{'-' if im < 0 else '+'}{imag_txt}"


def _format_float(x):
    if x == 0:
        return "0"
    return repr(float(x))


def format_complex(z):
    z = complex(z)
    if z.imag == 0:
        return _format_float(z.real)
    mag = abs(z.imag)
    imag_txt = "i" if mag == 1 else f"{_format_float(mag)}i"
    if z.real == 0:
        return ("-" if z.imag < 0 else "") + imag_txt
    return f"{_format_float(z.real)}{'-' if z.imag < 0 else '+'}{imag_txt}"


# ---------------------------------------------------------------------------
# domains

class Domain(enum.Enum):
    RATIONAL = "rational"
    GAUSSIAN_RATIONAL = "gaussian"
    COMPLEX_FLOAT = "complex"

    @property
    def is_exact(self):
        return self is not Domain.COMPLEX_FLOAT

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        """Convert a Python number into this domain, refusing lossy moves."""
        if isinstance(x, str):
            return self.parse(x)
        if self is Domain.COMPLEX_FLOAT:
            if isinstance(x, (int, float, complex, Rational, GaussianRational)):
                return complex(x)
        elif isinstance(x, bool):
            pass
        elif self is Domain.RATIONAL:
            if isinstance(x, Rational):
                return Fraction(x)
            if isinstance(x, GaussianRational) and x.imag == 0:
                return x.real
        else:
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, Rational):
                return GaussianRational(x)
        raise DomainMismatch(f"{x!r} is not an element of the {self.value} domain")

    def contains(self, x):
        if self is Domain.RATIONAL:
            return isinstance(x, Fraction)
        if self is Domain.GAUSSIAN_RATIONAL:
            return isinstance(x, GaussianRational)
        return isinstance(x, complex)

    def parse(self, text):
        """Parse a gain literal (``p/q``, ``a+bi``, ``1.5-2e-3i`` ...)."""
        text = text.strip()
        if self is Domain.RATIONAL:
            return _parse_rational(text)
        if self is Domain.GAUSSIAN_RATIONAL:
            re_, im = _split_complex(text, _GAUSS_IMAG_RE, _GAUSS_FULL_RE, _parse_rational)
            return GaussianRational(re_, im)
        re_, im = _split_complex(text, _FLT_IMAG_RE, _FLT_FULL_RE, float)
        return complex(re_, im)

    def format(self, x):
        if self is Domain.RATIONAL:
            return _format_fraction(x)
        if self is Domain.GAUSSIAN_RATIONAL:
            return format_gaussian(x)
        return format_complex(x)

    def conjugate(self, x):
        if self is Domain.RATIONAL:
            raise DomainMismatch("conjugation is not an automorphism offered for the rational domain")
        return x.conjugate()

    def is_close(self, x, y, tol=FLOAT_TOL):
        if self.is_exact:
            return x == y
        return abs(complex(x) - complex(y)) <= tol


def domain_of(x):
    """Infer the domain of a bare value."""
    if isinstance(x, GaussianRational):
        return Domain.GAUSSIAN_RATIONAL
    if isinstance(x, (complex, float)):
        return Domain.COMPLEX_FLOAT
    if isinstance(x, Rational) and not isinstance(x, bool):
        return Domain.RATIONAL
    raise DomainMismatch(f"{x!r} does not belong to a supported domain")


# ---------------------------------------------------------------------------
# anti-involutions

class AntiInvolution(enum.Enum):
    """The anti-involutions of F^x available for the supported fields.

    Each is an involutive automorphism (identity or conjugation) composed
    with inversion or not.
    """

    IDENTITY = "identity"
    INVERSE = "inverse"
    CONJUGATE = "conjugate"
    CONJUGATE_INVERSE = "conjinverse"

    @property
    def needs_conjugation(self):
        return self in (AntiInvolution.CONJUGATE, AntiInvolution.CONJUGATE_INVERSE)

    def admissible(self, domain):
        return not (self.needs_conjugation and domain is Domain.RATIONAL)

    def __call__(self, x):
        return apply_anti_involution(self, x)


def _check_gain(x):
    if not x:
        raise ZeroGain("gains live in the multiplicative group; zero is not allowed")


def apply_anti_involution(f, x, domain=None):
    """Return f(x) for nonzero x."""
    domain = domain or domain_of(x)
    _check_gain(x)
    if not f.admissible(domain):
        raise DomainMismatch(f"{f.value} is not admissible for the {domain.value} domain")
    if f is AntiInvolution.IDENTITY:
        return x
    if f is AntiInvolution.INVERSE:
        return domain.one / x
    if f is AntiInvolution.CONJUGATE:
        return x.conjugate()
    return domain.one / x.conjugate()


def gmap(f, x, domain=None):
    """x * f(x); the contribution of one edge traversed both ways."""
    domain = domain or domain_of(x)
    if f is AntiInvolution.INVERSE:
        _check_gain(x)
        return domain.one
    return x * apply_anti_involution(f, x, domain)


# ---------------------------------------------------------------------------
# validation

LAWS = (
    "involution",
    "anti_homomorphism",
    "fixes_identity",
    "inverse_compatible",
    "g_multiplicative",
)


@dataclass
class ValidationReport:
    f: AntiInvolution
    samples: int
    laws: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.laws.values())

    def lines(self):
        for law in LAWS:
            status = "PASS" if self.laws[law] else "FAIL"
            extra = f"  counterexample: {self.counterexamples[law]}" if law in self.counterexamples else ""
            yield f"{law}: {status}{extra}"


def validate_anti_involution(f, samples):
    """Check the anti-involution laws for f on every sample and sample pair.

    Laws: f(f(x)) = x, f(xy) = f(y) f(x), f(1) = 1, f(1/x) = 1/f(x), and
    multiplicativity of g(x) = x f(x).  Exact domains compare exactly;
    complex floats use a relative tolerance of 1e-12.
    """
    samples = list(samples)
    for x in samples:
        _check_gain(x)
    domain = domain_of(samples[0]) if samples else Domain.RATIONAL
    samples = [domain.coerce(x) for x in samples]
    if not f.admissible(domain):
        raise DomainMismatch(f"{f.value} is not admissible for the {domain.value} domain")

    if domain.is_exact:
        def same(a, b):
            return a == b
    else:
        def same(a, b):
            return abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))

    report = ValidationReport(f, len(samples), dict.fromkeys(LAWS, True))

    def fail(law, witness):
        report.laws[law] = False
        report.counterexamples.setdefault(law, witness)

    one = domain.one
    fx = [apply_anti_involution(f, x, domain) for x in samples]
    gx = [x * y for x, y in zip(samples, fx)]

    if not same(apply_anti_involution(f, one, domain), one):
        fail("fixes_identity", "f(1) != 1")
    for x, y in zip(samples, fx):
        if not same(apply_anti_involution(f, y, domain), x):
            fail("involution", domain.format(x))
        if not same(apply_anti_involution(f, one / x, domain), one / y):
            fail("inverse_compatible", domain.format(x))

    for i, j in combinations_with_replacement(range(len(samples)), 2):
        xy = samples[i] * samples[j]
        fxy = apply_anti_involution(f, xy, domain)
        if not same(fxy, fx[j] * fx[i]):
            fail("anti_homomorphism", (domain.format(samples[i]), domain.format(samples[j])))
        if not same(xy * fxy, gx[i] * gx[j]):
            fail("g_multiplicative", (domain.format(samples[i]), domain.format(samples[j])))
    return report

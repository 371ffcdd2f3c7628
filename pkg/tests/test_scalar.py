from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewgain.errors import DomainMismatch, ZeroGain
from skewgain.scalar import (
    AntiInvolution, Domain, GaussianRational, apply_anti_involution, gmap,
    validate_anti_involution,
)

F = AntiInvolution
Q = Domain.RATIONAL
QI = Domain.GAUSSIAN_RATIONAL
C = Domain.COMPLEX_FLOAT

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) <= 10 ** 6)
nonzero_fractions = fractions.filter(bool)
gaussians = st.builds(GaussianRational, fractions, fractions).filter(bool)
complexes = st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False)


def test_apply_examples():
    assert apply_anti_involution(F.INVERSE, Fraction(2)) == Fraction(1, 2)
    assert apply_anti_involution(F.CONJUGATE, GaussianRational(3, 4)) == GaussianRational(3, -4)
    assert apply_anti_involution(F.IDENTITY, Fraction(7, 3)) == Fraction(7, 3)
    assert apply_anti_involution(F.CONJUGATE_INVERSE, GaussianRational(0, 2)) == GaussianRational(0, Fraction(1, 2))


def test_gmap_examples():
    assert gmap(F.CONJUGATE, GaussianRational(3, 4)) == 25
    assert gmap(F.INVERSE, Fraction(17, 5)) == 1
    assert gmap(F.IDENTITY, Fraction(5)) == 25


def test_zero_and_domain_errors():
    with pytest.raises(ZeroGain):
        apply_anti_involution(F.IDENTITY, Fraction(0))
    with pytest.raises(ZeroGain):
        gmap(F.INVERSE, GaussianRational(0))
    with pytest.raises(DomainMismatch):
        apply_anti_involution(F.CONJUGATE, Fraction(2))
    with pytest.raises(DomainMismatch):
        apply_anti_involution(F.CONJUGATE_INVERSE, Fraction(2))


@pytest.mark.parametrize("f,samples", [
    (F.CONJUGATE, [GaussianRational(0, 1), GaussianRational(2), GaussianRational(1, 1)]),
    (F.IDENTITY, [Fraction(2), Fraction(3)]),
    (F.INVERSE, [Fraction(2), Fraction(5, 3)]),
])
def test_validate_examples(f, samples):
    report = validate_anti_involution(f, samples)
    assert report.passed
    assert set(report.laws) == {"involution", "anti_homomorphism", "fixes_identity",
                                "inverse_compatible", "g_multiplicative"}


def test_validate_rejects_zero():
    with pytest.raises(ZeroGain):
        validate_anti_involution(F.IDENTITY, [Fraction(1), Fraction(0)])


class TestGaussianRational:
    def test_canonical_form(self):
        z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
        assert z.as_integers() == (2, -3, 4)
        assert z == GaussianRational(Fraction(1, 2), Fraction(-3, 4))
        assert hash(GaussianRational(Fraction(3, 2))) == hash(Fraction(3, 2))

    def test_arithmetic(self):
        a, b = GaussianRational(1, 2), GaussianRational(3, -1)
        assert a * b == GaussianRational(5, 5)
        assert a + b == GaussianRational(4, 1)
        assert a - b == GaussianRational(-2, 3)
        assert (a / b) * b == a
        assert a ** 2 == GaussianRational(-3, 4)
        assert a ** -1 == GaussianRational(Fraction(1, 5), Fraction(-2, 5))
        assert 2 * a == GaussianRational(2, 4)
        assert 1 - a == GaussianRational(0, -2)
        assert a.norm() == 5

    @given(gaussians, gaussians)
    def test_field_laws(self, a, b):
        assert a * b == b * a
        assert (a * b) / b == a
        assert (a + b) - b == a
        assert complex(a * b) == pytest.approx(complex(a) * complex(b))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)


@pytest.mark.parametrize("domain,text,value", [
    (Q, "3", Fraction(3)),
    (Q, "-7/4", Fraction(-7, 4)),
    (QI, "i", GaussianRational(0, 1)),
    (QI, "-i", GaussianRational(0, -1)),
    (QI, "2/3i", GaussianRational(0, Fraction(2, 3))),
    (QI, "1+i", GaussianRational(1, 1)),
    (QI, "1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
    (QI, "5", GaussianRational(5)),
    (C, "1.5-2e-3i", complex(1.5, -0.002)),
    (C, "i", 1j),
    (C, "-2.5", complex(-2.5)),
])
def test_literals(domain, text, value):
    parsed = domain.parse(text)
    assert parsed == value
    assert domain.parse(domain.format(parsed)) == parsed


@pytest.mark.parametrize("domain,text", [(Q, "1/0"), (Q, "1.5"), (Q, "i"), (QI, "1+"), (QI, "2i3"), (C, "abc")])
def test_bad_literals(domain, text):
    with pytest.raises(ValueError):
        domain.parse(text)


@given(gaussians)
def test_gaussian_literal_round_trip(z):
    assert QI.parse(QI.format(z)) == z


@given(complexes)
def test_complex_literal_round_trip(z):
    assert C.parse(C.format(z)) == z


# properties from the anti-involution laws

@pytest.mark.parametrize("f", list(F))
@given(a=gaussians, b=gaussians)
def test_exact_laws_gaussian(f, a, b):
    assert f(f(a)) == a
    assert f(a * b) == f(b) * f(a)
    assert gmap(f, a * b) == gmap(f, a) * gmap(f, b)


@pytest.mark.parametrize("f", [F.IDENTITY, F.INVERSE])
@given(a=nonzero_fractions, b=nonzero_fractions)
def test_exact_laws_rational(f, a, b):
    assert f(f(a)) == a
    assert f(a * b) == f(a) * f(b)
    assert gmap(f, a * b) == gmap(f, a) * gmap(f, b)


@pytest.mark.parametrize("f", list(F))
@given(z=complexes)
def test_float_involution(f, z):
    assert abs(f(f(z)) - z) <= 1e-12 * abs(z)


@given(gaussians)
def test_gmap_inverse_is_trivial_and_conjugate_is_positive(z):
    assert gmap(F.INVERSE, z) == 1
    g = gmap(F.CONJUGATE, z)
    assert g.imag == 0 and g.real > 0

import numpy as np
import pytest
from pydantic import ValidationError

from teichcurve.bers_map import (
    CircleVectorField,
    MoebiusDisc,
    beta_c_consistency,
    circle_modes,
    curve_betas,
    d0_B,
    d0_P,
    d0_P_inverse,
    moebius_apply,
    moebius_velocity,
)
from teichcurve.common import FOUR_PI_SQ, DomainError
from teichcurve.series import CuspFormCoeffs

from common import random_cusp_form


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


class TestCircleVectorField:
    def test_from_modes_mirrors(self):
        field = CircleVectorField.from_modes([1j, 0.5 + 0.5j], c0=-1.0)
        assert field.N == 2
        assert field.c(-1) == -1j
        assert field.c(-2) == 0.5 - 0.5j
        assert field.c(3) == 0

    def test_rejects_even_length(self):
        with pytest.raises(ValidationError):
            CircleVectorField(coeffs=[0, 0])

    def test_rejects_non_real_field(self):
        with pytest.raises(ValidationError):
            CircleVectorField(coeffs=[1j, 0, 1j])

    def test_rejects_field_moving_one(self):
        with pytest.raises(ValidationError):
            CircleVectorField.from_modes([1.0], c0=0.0)

    def test_zero(self):
        assert CircleVectorField().is_zero()
        assert CircleVectorField().N == 0


class TestD0P:
    def test_single_mode_substitution(self):
        field = d0_P(CuspFormCoeffs.from_values([FOUR_PI_SQ]))
        assert field.c(1) == pytest.approx(1j, rel=1e-15)
        assert field.c(-1) == pytest.approx(-1j, rel=1e-15)
        assert field.c(0) == pytest.approx(0, abs=1e-15)

    def test_c0_from_imaginary_part(self):
        # alpha_1 = i: c_1 = -1 / 4 pi^2, c_0 = 2 / 4 pi^2
        field = d0_P(CuspFormCoeffs.from_values([1j]))
        assert field.c(1) == pytest.approx(-1 / FOUR_PI_SQ, rel=1e-15)
        assert field.c(0) == pytest.approx(2 / FOUR_PI_SQ, rel=1e-15)

    def test_modes_decay_as_cube(self):
        modes = circle_modes(CuspFormCoeffs.from_values([1, 1, 1]))
        assert modes[2] * 27 == pytest.approx(modes[0], rel=1e-15)

    def test_empty(self):
        field = d0_P(CuspFormCoeffs())
        assert field.is_zero()

    def test_sum_vanishes(self, rng):
        for n in (1, 4, 32):
            field = d0_P(random_cusp_form(rng, n))
            scale = sum(abs(c) for c in field.coeffs)
            assert abs(field.total()) <= 1e-12 * scale

    def test_tangent_space_invariants(self, rng):
        for _ in range(100):
            field = d0_P(random_cusp_form(rng, int(rng.integers(1, 33))))
            for n in range(1, field.N + 1):
                assert field.c(-n) == field.c(n).conjugate()
            scale = sum(abs(c) for c in field.coeffs)
            assert abs(field.total()) <= 1e-12 * scale

    def test_linearity(self, rng):
        a = random_cusp_form(rng, 6)
        b = random_cusp_form(rng, 4)
        lhs = d0_P(a + b.scale(2.5))
        for n in range(-6, 7):
            assert lhs.c(n) == pytest.approx(
                d0_P(a).c(n) + 2.5 * d0_P(b).c(n), rel=1e-12, abs=1e-16
            )

    def test_inverse(self, rng):
        phi = random_cusp_form(rng, 10)
        back = d0_P_inverse(d0_P(phi))
        assert back.coeffs == pytest.approx(phi.coeffs, rel=1e-13)


class TestD0B:
    def test_puncture_velocity(self):
        tangent = d0_B(CuspFormCoeffs.from_values([FOUR_PI_SQ * (1 + 2j)]))
        assert tangent.a == pytest.approx(-(1 - 2j), rel=1e-15)
        assert tangent.betas == ()

    def test_second_mode(self):
        tangent = d0_B(CuspFormCoeffs.from_values([0, 1]))
        assert tangent.a == 0
        assert tangent.betas == pytest.approx((-1 / (32 * np.pi**2),), rel=1e-14)

    def test_curve_betas_skip_first_mode(self):
        betas = curve_betas(CuspFormCoeffs.from_values([5, 0, 27]))
        assert len(betas) == 2
        assert betas[1] == pytest.approx(-1 / FOUR_PI_SQ, rel=1e-15)

    def test_beta_equals_i_c(self, rng):
        for n in (2, 8, 32):
            assert beta_c_consistency(random_cusp_form(rng, n)) <= 1e-14

    def test_beta_c_empty(self):
        assert beta_c_consistency(CuspFormCoeffs.from_values([1])) == 0.0


class TestMoebius:
    def test_normalization(self):
        m = MoebiusDisc(w=0.3 - 0.4j)
        assert m.apply(0.3 - 0.4j) == pytest.approx(0, abs=1e-16)
        assert m.apply(1 + 0j) == pytest.approx(1, abs=1e-15)

    def test_circle_preserved(self):
        m = MoebiusDisc(w=0.5 + 0.2j)
        theta = np.linspace(0, 2 * np.pi, 50, endpoint=False)
        values = np.abs(moebius_apply(m, np.exp(1j * theta)))
        assert np.max(np.abs(values - 1)) <= 2e-15

    def test_inverse(self):
        m = MoebiusDisc(w=-0.2 + 0.6j)
        z = 0.1 + 0.3j
        assert m.inverse_apply(m.apply(z)) == pytest.approx(z, rel=1e-14)

    def test_compose(self):
        a = MoebiusDisc(w=0.2)
        b = MoebiusDisc(w=0.1j)
        c = a.compose(b)
        for z in (0.3 + 0.1j, -0.5j, np.exp(2.0j)):
            assert c.apply(z) == pytest.approx(a.apply(b.apply(z)), rel=1e-13)

    def test_parameter_inside_disc(self):
        with pytest.raises(ValidationError):
            MoebiusDisc(w=1.0)

    def test_pole(self):
        with pytest.raises(DomainError):
            moebius_apply(MoebiusDisc(w=0.5), 2.0)

    def test_velocity_matches_difference_quotient(self):
        a = 0.3 - 0.7j
        z = 0.4 + 0.1j
        t = 1e-6
        fd = (moebius_apply(MoebiusDisc(w=t * a), z) - z) / t
        assert moebius_velocity(a, z) == pytest.approx(fd, rel=1e-5)

    def test_velocity_fixes_one(self):
        assert moebius_velocity(0.3 + 0.9j, 1.0) == pytest.approx(0, abs=1e-16)

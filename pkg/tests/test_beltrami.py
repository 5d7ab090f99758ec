import logging

import numpy as np
import pytest

from teichcurve.beltrami import (
    HarmonicBeltramiDisc,
    HarmonicBeltramiUHP,
    covering_preimage,
    eval_lambda,
    eval_mu,
    pushdown_covering,
    sup_bound,
)
from teichcurve.common import DomainError
from teichcurve.series import CuspFormCoeffs


class TestHarmonicBeltramiUHP:
    def test_mu_at_i(self):
        mu = HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1]))
        assert eval_mu(mu, 1j) == pytest.approx(-2 * np.exp(-2 * np.pi), rel=1e-15)

    def test_mu_is_periodic(self):
        mu = HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1, 2j]))
        assert eval_mu(mu, 0.25 + 0.3j) == eval_mu(mu, 1.25 + 0.3j)

    def test_mu_needs_open_half_plane(self):
        mu = HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1]))
        with pytest.raises(DomainError):
            eval_mu(mu, 0.5 + 0j)

    def test_sup_bound_dominates_samples(self):
        phi = CuspFormCoeffs.from_values([1, -0.5 + 0.5j, 0.25j])
        mu = HarmonicBeltramiUHP(phi=phi)
        xs, ys = np.meshgrid(np.linspace(0, 1, 41), np.linspace(0.01, 2, 200))
        values = np.abs(eval_mu(mu, xs + 1j * ys))
        assert np.max(values) <= sup_bound(phi) * (1 + 1e-12)

    def test_large_bound_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="teichcurve.beltrami"):
            HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([100]))
        assert "exceeds 1" in caplog.text

    def test_small_bound_is_silent(self, caplog):
        with caplog.at_level(logging.WARNING, logger="teichcurve.beltrami"):
            HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1]))
        assert caplog.text == ""


class TestHarmonicBeltramiDisc:
    def test_lambda_vanishes_on_boundary(self):
        lam = HarmonicBeltramiDisc.from_betas([-1 / (32 * np.pi**2), 0.01j])
        theta = 2 * np.pi * np.arange(64) / 64
        assert np.max(np.abs(eval_lambda(lam, np.exp(1j * theta)))) <= 1e-30

    def test_lambda_at_half(self):
        # phi_lambda = 6 beta_2 = 6, lambda(1/2) = -(9/16)/2 * 6
        lam = HarmonicBeltramiDisc.from_betas([1.0])
        assert eval_lambda(lam, 0.5) == pytest.approx(-27 / 16, rel=1e-15)

    def test_lambda_at_origin(self):
        lam = HarmonicBeltramiDisc.from_betas([-1 / (32 * np.pi**2)])
        assert eval_lambda(lam, 0j) == pytest.approx(3 / (32 * np.pi**2), rel=1e-15)

    def test_lambda_with_third_mode(self):
        # beta_3 = 1 / (64 pi^2): phi_lambda = 24 beta_3 z = 3 z / (8 pi^2)
        lam = HarmonicBeltramiDisc.from_betas([0.0, 1 / (64 * np.pi**2)])
        expected = -(0.75**2) / 2 * 3 / (16 * np.pi**2)
        assert eval_lambda(lam, 0.5) == pytest.approx(expected, rel=1e-14)

    def test_betas_round_trip(self):
        betas = (0.5 + 0.25j, -1j, 0.125)
        lam = HarmonicBeltramiDisc.from_betas(betas)
        assert lam.betas == pytest.approx(betas, rel=1e-15)

    def test_potential_starts_at_cube(self):
        lam = HarmonicBeltramiDisc.from_betas([2.0])
        pot = lam.potential()
        assert pot.start == 3 and pot.coefficient(3) == pytest.approx(2.0)

    def test_zero(self):
        assert HarmonicBeltramiDisc().is_zero()
        assert HarmonicBeltramiDisc.from_betas([0, 0]).is_zero()
        assert not HarmonicBeltramiDisc.from_betas([0, 1]).is_zero()

    def test_outside_disc_rejected(self):
        lam = HarmonicBeltramiDisc.from_betas([1.0])
        with pytest.raises(DomainError):
            eval_lambda(lam, 1.01)


class TestCovering:
    def test_preimage_inverts_covering(self):
        w = 0.3 * np.exp(1.1j)
        z = covering_preimage(w)
        assert z.imag > 0
        assert np.exp(2j * np.pi * z) == pytest.approx(w, rel=1e-14)
        assert covering_preimage(w, branch=2) == pytest.approx(z + 2)

    @pytest.mark.parametrize("w", [0j, 1 + 0j, 1.5j])
    def test_preimage_domain(self, w):
        with pytest.raises(DomainError):
            covering_preimage(w)

    def test_pushdown_is_branch_independent(self):
        mu = HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1, 0.5j]))
        w = 0.4 - 0.2j
        a = pushdown_covering(mu, w, branch=0)
        b = pushdown_covering(mu, w, branch=3)
        assert a == pytest.approx(b, rel=1e-12)

    def test_pushdown_modulus_equals_mu(self):
        mu = HarmonicBeltramiUHP(phi=CuspFormCoeffs.from_values([1]))
        w = 0.5j
        z = covering_preimage(w)
        assert abs(pushdown_covering(mu, w)) == pytest.approx(
            abs(eval_mu(mu, z)), rel=1e-14
        )

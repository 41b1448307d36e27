# Standard library
import math

# Local application
from linkforge.energy import (
    HOPF_MIN,
    borromean_rect_energy,
    circle_chain_energy,
    coplanar_circles_cross,
    elliptic_k,
    hopf_cross_asymmetric,
    hopf_cross_closed_form,
    hopf_cross_quadratic,
    mobius_total,
    point_charge_cross,
    square_chain_energy,
    square_hopf_cross_formula,
    square_hopf_optimal_separation,
)
from linkforge.exceptions import DivergenceError
from linkforge.families import family_chain_congruent
from linkforge.optimize import golden_section

# Third party
import numpy as np
import pytest
from scipy import integrate, special


class TestEllipticK:
    def test_zero(self):
        assert elliptic_k(0.0) == pytest.approx(math.pi / 2, rel=1e-15)

    @pytest.mark.parametrize("m", [-5.0, -1.0, -0.3, 0.1, 0.5, 0.9, 0.99])
    def test_against_scipy(self, m):
        assert elliptic_k(m) == pytest.approx(special.ellipk(m), rel=1e-12)

    @pytest.mark.parametrize("m", np.linspace(-5.0, 0.99, 13))
    def test_against_quadrature(self, m):
        exact, _ = integrate.quad(
            lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
            0.0,
            math.pi / 2,
            epsabs=1e-14,
            epsrel=1e-14,
        )
        assert elliptic_k(m) == pytest.approx(exact, rel=1e-10)

    def test_singular(self):
        with pytest.raises(DivergenceError):
            elliptic_k(1.0)


class TestHopfClosedForm:
    def test_minimum(self):
        assert hopf_cross_closed_form(math.sqrt(2.0)) == pytest.approx(
            HOPF_MIN, rel=1e-14
        )

    def test_golden_section_minimum(self):
        result = golden_section(hopf_cross_closed_form, 0.5, 1.9, tol=1e-9)
        assert result.params_opt[0] == pytest.approx(math.sqrt(2.0), abs=1e-6)
        assert result.energy_opt == pytest.approx(HOPF_MIN, rel=1e-9)

    def test_unit_separation(self):
        assert hopf_cross_closed_form(1.0) / HOPF_MIN == pytest.approx(1.0732, abs=2e-4)

    def test_divergence_towards_contact(self):
        near = [hopf_cross_closed_form(d) for d in (0.5, 0.1, 0.01)]
        far = [hopf_cross_closed_form(d) for d in (1.7, 1.9, 1.99)]
        assert near == sorted(near)
        assert far == sorted(far)

    def test_log_divergence(self):
        # every decade closer to contact adds 8 pi ln 10
        near = [hopf_cross_closed_form(d) for d in (1e-2, 1e-3, 1e-4)]
        np.testing.assert_allclose(
            np.diff(near), 8 * math.pi * math.log(10.0), rtol=1e-3
        )

    @pytest.mark.parametrize("offset", [-0.005, 0.005])
    def test_quadratic_expansion(self, offset):
        delta = math.sqrt(2.0) + offset
        excess = hopf_cross_closed_form(delta) - HOPF_MIN
        approx = hopf_cross_quadratic(delta) - HOPF_MIN
        assert excess == pytest.approx(approx, rel=0.02)

    @pytest.mark.parametrize("delta", [0.0, 2.0, 2.5])
    def test_out_of_range(self, delta):
        with pytest.raises(RuntimeError, match="Separation"):
            hopf_cross_closed_form(delta)


class TestHopfAsymmetric:
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_minimum(self, alpha):
        energy = hopf_cross_asymmetric(alpha, math.sqrt(1.0 + alpha**2))
        assert energy == pytest.approx(HOPF_MIN, rel=1e-6)

    @pytest.mark.parametrize("delta", [0.6, 1.0, 1.7])
    def test_matches_closed_form(self, delta):
        assert hopf_cross_asymmetric(1.0, delta) == pytest.approx(
            hopf_cross_closed_form(delta), rel=1e-6
        )

    def test_unlinked(self):
        with pytest.raises(RuntimeError, match="not linked"):
            hopf_cross_asymmetric(0.5, 2.0)

    def test_intersecting(self):
        with pytest.raises(DivergenceError):
            hopf_cross_asymmetric(1.0, 2.0)


class TestCircleChain:
    def test_coplanar_far_field(self):
        assert coplanar_circles_cross(200.0) == pytest.approx(
            point_charge_cross(1.0, 200.0), rel=1e-4
        )

    def test_coplanar_overlap(self):
        with pytest.raises(DivergenceError):
            coplanar_circles_cross(2.0)

    def test_matches_polygons(self):
        link = family_chain_congruent(3, 1.58, n=720)
        assert mobius_total(link).total == pytest.approx(
            circle_chain_energy(1.58), rel=2e-3
        )

    def test_optimum(self):
        result = golden_section(circle_chain_energy, 1.2, 1.9, tol=1e-9)
        assert result.params_opt[0] == pytest.approx(1.58, abs=0.01)
        excess = result.energy_opt / (12.0 + 2.0 * HOPF_MIN) - 1.0
        assert 0.126 <= excess <= 0.128

    @pytest.mark.parametrize("spacing", [1.0, 2.0])
    def test_range(self, spacing):
        with pytest.raises(RuntimeError, match="Spacing should be in"):
            circle_chain_energy(spacing)


class TestPolygonFormulas:
    def test_square_optimum(self):
        delta = square_hopf_optimal_separation()
        assert delta == pytest.approx(1.2033, abs=1e-3)
        x = delta**2
        residual = 2 * x**5 - 10 * x**4 + 73 * x**3 - 48 * x**2 - 40 * x - 32
        assert abs(residual) < 1e-6
        assert 8.0 + square_hopf_cross_formula(delta) == pytest.approx(93.5, abs=0.1)

    def test_square_optimum_is_minimum(self):
        delta = square_hopf_optimal_separation()
        best = square_hopf_cross_formula(delta)
        for step in (-1e-3, 1e-3):
            assert square_hopf_cross_formula(delta + step) > best

    def test_square_chain_optimum(self):
        result = golden_section(square_chain_energy, 1.1, 1.9, tol=1e-9)
        spacing = result.params_opt[0]
        assert spacing == pytest.approx(1.505, abs=2e-3)
        # outer-square repulsion moves the spacing past the two-square optimum
        assert spacing > square_hopf_optimal_separation() + 0.25

    @pytest.mark.parametrize("spacing", [1.0, 2.0])
    def test_square_chain_range(self, spacing):
        with pytest.raises(RuntimeError, match="Spacing should be in"):
            square_chain_energy(spacing)

    def test_borromean_rectangle_optimum(self):
        result = golden_section(borromean_rect_energy, 1.2, 3.0, tol=1e-8)
        assert result.params_opt[0] == pytest.approx(1.756, abs=1e-3)
        assert result.energy_opt == pytest.approx(542.6, abs=0.5)

    def test_borromean_rectangle_aspect(self):
        with pytest.raises(RuntimeError, match="exceed 1"):
            borromean_rect_energy(1.0)


def test_point_charge():
    assert point_charge_cross(1.0, 10.0) == pytest.approx(0.08 * math.pi**2)
    with pytest.raises(RuntimeError):
        point_charge_cross(2.0, 1.0)

# Standard library
import math

# Local application
from linkforge.energy import (
    HOPF_MIN,
    mobius_convergence,
    mobius_cross,
    mobius_self,
    mobius_total,
    point_charge_cross,
)
from linkforge.energy.utils import as_tensor
from linkforge.exceptions import DivergenceError
from linkforge.families import family_hopf_circles
from linkforge.geometry import make_circle, rotation_matrix, transform_link

# Third party
import numpy as np
import pytest
import torch


class TestMobiusSelf:
    @pytest.mark.parametrize("n,expected", [(360, 3.9607), (720, 3.9804)])
    def test_circle(self, n, expected):
        assert mobius_self(make_circle(1.0, n=n)) == pytest.approx(expected, abs=0.01)

    def test_convergence_is_monotone(self):
        values = [e for _, e in mobius_convergence(lambda n: make_circle(1.0, n=n))]
        assert values == sorted(values)
        assert all(e < 4.0 for e in values)

    def test_scale_invariant(self):
        small = mobius_self(make_circle(1.0, n=120))
        large = mobius_self(make_circle(7.5, (3.0, -2.0, 1.0), n=120))
        assert large == pytest.approx(small, rel=1e-9)

    def test_triangle(self):
        with pytest.raises(RuntimeError, match="at least 4 vertices"):
            mobius_self(make_circle(1.0, n=3))


class TestMobiusCross:
    def test_hopf_minimum(self):
        link = family_hopf_circles(1.0, math.sqrt(2.0), n=180)
        assert mobius_cross(link[0], link[1]) / HOPF_MIN == pytest.approx(
            0.9999, abs=5e-4
        )

    def test_far_field(self):
        a = make_circle(1.0, n=180)
        b = make_circle(1.0, (0.0, 0.0, 100.0), n=180)
        assert mobius_cross(a, b) == pytest.approx(
            point_charge_cross(1.0, 100.0), rel=1e-3
        )

    def test_touching(self):
        circle = make_circle(1.0, n=60)
        with pytest.raises(DivergenceError):
            mobius_cross(circle, circle)


def test_total_is_invariant():
    link = family_hopf_circles(0.8, 1.2, n=120)
    report = mobius_total(link)
    moved = transform_link(
        link, rotation_matrix((1.0, 2.0, -0.5), 0.9), (4.0, -1.0, 2.0), 2.7
    )
    assert mobius_total(moved).total == pytest.approx(report.total, rel=1e-9)
    assert report.kind == "mobius"
    assert list(report.cross_energies) == [(0, 1)]
    assert report.n_vertices == [120, 120]


def test_as_tensor_copies():
    array = np.arange(6, dtype=np.float32).reshape(2, 3)
    tensor = as_tensor(array[:, ::2])
    array[:] = -1.0
    assert tensor.dtype == torch.float64
    assert tensor.tolist() == [[0.0, 2.0], [3.0, 5.0]]

# Local application
from linkforge.energy import (
    borromean_rect_energy,
    md_cross,
    md_energy,
    md_self,
    square_chain_energy,
    square_hopf_cross_formula,
)
from linkforge.exceptions import DivergenceError
from linkforge.families import (
    family_borromean,
    family_chain_congruent,
    family_hopf_polygons,
)
from linkforge.geometry import PolyCurve, make_rectangle

# Third party
import pytest


class TestMDSelf:
    def test_square(self):
        assert md_self(make_rectangle(2.0, 2.0)) == pytest.approx(4.0, abs=1e-12)

    def test_rectangle(self):
        # opposite sides only: 2 (a^2 / b^2 + b^2 / a^2)
        assert md_self(make_rectangle(2.0, 1.0)) == pytest.approx(8.5, abs=1e-12)

    def test_triangle(self):
        triangle = PolyCurve([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
        with pytest.raises(RuntimeError) as exc_info:
            md_self(triangle)
        assert str(exc_info.value) == (
            "MD energy needs polygons with at least four edges. Got 3."
        )


class TestMDCross:
    @pytest.mark.parametrize("delta", [0.8, 1.2, 1.6])
    def test_square_hopf(self, delta):
        link = family_hopf_polygons(4, delta)
        assert md_energy(link).cross_total == pytest.approx(
            square_hopf_cross_formula(delta), rel=1e-9
        )

    @pytest.mark.parametrize("spacing", [1.1, 1.505, 1.9])
    def test_square_chain(self, spacing):
        link = family_chain_congruent(3, spacing, "square", n=None)
        assert md_energy(link).total == pytest.approx(
            square_chain_energy(spacing), rel=1e-9
        )

    def test_touching(self):
        square = make_rectangle(2.0, 2.0)
        with pytest.raises(DivergenceError):
            md_cross(square, square)


@pytest.mark.parametrize("alpha", [1.5, 1.756, 2.2])
def test_borromean_rectangles(alpha):
    link = family_borromean("rectangle", aspect=alpha)
    report = md_energy(link)
    assert report.kind == "md"
    assert report.total == pytest.approx(borromean_rect_energy(alpha), rel=1e-9)
    assert report.self_total == pytest.approx(
        6 * (alpha**2 + 1 / alpha**2), rel=1e-12
    )


# Standard library
import math

# Local application
from linkforge.geometry import (
    X_AXIS,
    Z_AXIS,
    make_circle,
    make_ellipse,
    make_rectangle,
    make_rounded_rectangle,
    make_squircle,
    make_stadium,
    make_stretched_ngon,
    make_symmetric_decagon,
    make_torus_knot,
    make_torus_link,
    plane_frame,
)

# Third party
import numpy as np
import pytest


class TestPlaneFrame:
    def test_default(self):
        u, v, n = plane_frame()
        np.testing.assert_allclose(u, [1, 0, 0])
        np.testing.assert_allclose(v, [0, 1, 0])
        np.testing.assert_allclose(n, [0, 0, 1])

    def test_xz_plane(self):
        u, v, _ = plane_frame((0.0, -1.0, 0.0), X_AXIS)
        np.testing.assert_allclose(u, [1, 0, 0])
        np.testing.assert_allclose(v, [0, 0, 1])

    def test_normal_along_x(self):
        u, v, n = plane_frame((1.0, 0.0, 0.0))
        np.testing.assert_allclose(u, [0, 1, 0])
        np.testing.assert_allclose(np.cross(u, v), n)

    def test_major_axis_off_plane(self):
        with pytest.raises(RuntimeError, match="Major axis"):
            plane_frame(Z_AXIS, (0.0, 0.0, 1.0))

    def test_non_unit_normal(self):
        with pytest.raises(RuntimeError, match="unit vector"):
            plane_frame((0.0, 0.0, 2.0))


class TestSmoothShapes:
    def test_circle(self):
        c = make_circle(2.0, (1.0, 0.0, 0.0), n=36)
        radii = np.linalg.norm(c.vertices - [1.0, 0.0, 0.0], axis=1)
        np.testing.assert_allclose(radii, 2.0)
        np.testing.assert_allclose(c.vertices[0], [3.0, 0.0, 0.0], atol=1e-15)

    def test_circle_radius(self):
        with pytest.raises(RuntimeError) as exc_info:
            make_circle(0.0)
        assert str(exc_info.value) == "radius should be positive. Currently set to 0.0."

    def test_ellipse_extent(self):
        e = make_ellipse(2.0, 1.0, n=40)
        np.testing.assert_allclose(np.ptp(e.vertices, axis=0), [4.0, 2.0, 0.0])

    def test_round_stadium_is_circle(self):
        np.testing.assert_allclose(
            make_stadium(1.0, n=36).vertices,
            make_circle(1.0, n=36).vertices,
            atol=1e-12,
        )

    def test_stadium(self):
        s = make_stadium(2.0, height=2.0, n=400)
        extent = np.ptp(s.vertices, axis=0)
        np.testing.assert_allclose(extent[:2], [4.0, 2.0], atol=1e-3)
        assert s.length == pytest.approx(4.0 + 2 * math.pi, rel=1e-4)
        np.testing.assert_allclose(s.edge_lengths, s.edge_lengths[0], rtol=1e-3)

    def test_stadium_aspect(self):
        with pytest.raises(RuntimeError, match="at least 1"):
            make_stadium(0.9)

    def test_rounded_rectangle_corner(self):
        with pytest.raises(RuntimeError, match="Corner radius"):
            make_rounded_rectangle(2.0, 1.0, 0.6)

    def test_squircle_exponent_two_is_ellipse(self):
        np.testing.assert_allclose(
            make_squircle(1.5, 1.0, 2.0, n=24).vertices,
            make_ellipse(1.5, 1.0, n=24).vertices,
            atol=1e-12,
        )


class TestPolygons:
    def test_rectangle_corners(self):
        r = make_rectangle(4.0, 2.0)
        np.testing.assert_allclose(
            r.vertices[:, :2], [[2, -1], [2, 1], [-2, 1], [-2, -1]]
        )

    def test_rectangle_subdivision_keeps_trace(self):
        r = make_rectangle(4.0, 2.0, n=24)
        assert r.n_vertices == 24
        assert r.length == pytest.approx(12.0)
        for corner in ([2, -1, 0], [2, 1, 0], [-2, 1, 0], [-2, -1, 0]):
            assert np.min(np.linalg.norm(r.vertices - corner, axis=1)) < 1e-12

    def test_square_ngon(self):
        sq = make_stretched_ngon(4, scale=math.sqrt(2.0))
        np.testing.assert_allclose(
            np.abs(sq.vertices[:, :2]), np.ones((4, 2)), atol=1e-12
        )

    def test_stretched_ngon(self):
        ngon = make_stretched_ngon(10, aspect=1.74)
        extent = np.ptp(ngon.vertices, axis=0)
        assert extent[0] / extent[1] == pytest.approx(1.74 * math.cos(math.pi / 10))

    def test_decagon(self):
        d = make_symmetric_decagon((0.44, 0.75), (0.52, 0.27))
        assert d.n_vertices == 10
        np.testing.assert_allclose(d.vertices[0], [1.0, 0.0, 0.0], atol=1e-15)
        # 11 o'clock follows 12, so the orientation is counterclockwise
        np.testing.assert_allclose(d.vertices[1], [0.75, 0.44, 0.0])

    def test_decagon_self_intersecting(self):
        with pytest.raises(RuntimeError, match="self-intersecting"):
            make_symmetric_decagon((0.6, 0.2), (0.3, 0.8))


class TestTorus:
    def test_unknotted_limit(self):
        c = make_torus_knot(1, 0, 1.0, 0.5, n=50)
        np.testing.assert_allclose(np.linalg.norm(c.vertices, axis=1), 1.5)

    def test_radii(self):
        with pytest.raises(RuntimeError, match="minor radius"):
            make_torus_knot(2, 3, 1.0, 1.0)

    def test_torus_link(self):
        link = make_torus_link(3, 3, 1.0, 0.5, n=90)
        assert link.n_components == 3
        assert link.labels == ("strand-0", "strand-1", "strand-2")
        link.validate()

    def test_trefoil_single_component(self):
        link = make_torus_link(2, 3, 1.0, 0.5)
        assert link.n_components == 1
        assert link.labels is None

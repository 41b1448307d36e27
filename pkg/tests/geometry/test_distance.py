# Standard library
import math

# Local application
from linkforge.geometry import (
    PolyCurve,
    Segment,
    arc_distance,
    make_circle,
    min_distance_between,
    segment_distances,
    segment_min_distance,
)

# Third party
import numpy as np
import pytest


def point_segment_distance(x, q0, q1):
    v = q1 - q0
    along = np.einsum("...i,...i->...", x - q0, v)
    t = np.clip(along / np.einsum("...i,...i->...", v, v), 0.0, 1.0)
    return np.linalg.norm(x - q0 - t[..., None] * v, axis=-1)


def search_distance(p0, p1, q0, q1, iterations=120):
    """Ternary search over the first segment's parameter. The distance from
    a point moving along a line to a segment is convex."""
    lo = np.zeros(np.shape(p0)[:-1])
    hi = np.ones(np.shape(p0)[:-1])

    def g(s):
        return point_segment_distance(p0 + s[..., None] * (p1 - p0), q0, q1)

    for _ in range(iterations):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        left = g(m1) <= g(m2)
        hi = np.where(left, m2, hi)
        lo = np.where(left, lo, m1)
    return g(0.5 * (lo + hi))


class TestSegmentDistance:
    @pytest.mark.parametrize(
        "s1,s2,expected",
        [
            # skew and perpendicular, interiors closest
            (((0, 0, 0), (1, 0, 0)), ((0.5, 1, -1), (0.5, 1, 1)), 1.0),
            # parallel, overlapping
            (((0, 0, 0), (2, 0, 0)), ((1, 1, 0), (3, 1, 0)), 1.0),
            # collinear with a gap
            (((0, 0, 0), (1, 0, 0)), ((3, 0, 0), (4, 0, 0)), 2.0),
            # endpoint against interior
            (((0, 0, 0), (0, 2, 0)), ((1, 1, 0), (3, 1, 0)), 1.0),
            # crossing
            (((-1, 0, 0), (1, 0, 0)), ((0, -1, 0), (0, 1, 0)), 0.0),
            # endpoint against endpoint
            (((0, 0, 0), (1, 0, 0)), ((2, 1, 0), (3, 5, 0)), math.sqrt(2.0)),
        ],
    )
    def test_cases(self, s1, s2, expected):
        d = segment_min_distance(Segment(*s1), Segment(*s2))
        assert d == pytest.approx(expected, abs=1e-12)
        assert segment_min_distance(Segment(*s2), Segment(*s1)) == pytest.approx(d)

    def test_against_search(self):
        rng = np.random.default_rng(1)
        pts = rng.normal(size=(1000, 4, 3))
        fast = segment_distances(pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3])
        slow = search_distance(pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3])
        np.testing.assert_allclose(fast, slow, atol=1e-6)

    def test_against_grid(self):
        rng = np.random.default_rng(3)
        t = np.linspace(0.0, 1.0, 1000)
        for p0, p1, q0, q1 in rng.normal(size=(20, 4, 3)):
            a = p0 + t[:, None] * (p1 - p0)
            b = q0 + t[:, None] * (q1 - q0)
            grid = np.sqrt(((a[:, None, :] - b[None, :, :]) ** 2).sum(-1)).min()
            fast = segment_distances(p0, p1, q0, q1)
            step = (np.linalg.norm(p1 - p0) + np.linalg.norm(q1 - q0)) / 999
            assert fast <= grid + 1e-12
            assert grid - fast <= step

    def test_nearly_parallel_against_search(self):
        rng = np.random.default_rng(2)
        p0, q0, u = rng.normal(size=(3, 100, 3))
        p1 = p0 + u
        stretch = rng.uniform(0.5, 2.0, size=(100, 1))
        q1 = q0 + stretch * u + 1e-9 * rng.normal(size=(100, 3))
        np.testing.assert_allclose(
            segment_distances(p0, p1, q0, q1),
            search_distance(p0, p1, q0, q1),
            atol=1e-6,
        )

    def test_broadcast(self):
        p0 = np.zeros((5, 1, 3))
        p1 = np.tile([1.0, 0.0, 0.0], (5, 1, 1))
        q0 = np.array([[[0.0, 1.0, z] for z in range(4)]], dtype=float)
        q1 = q0 + [1.0, 0.0, 0.0]
        assert segment_distances(p0, p1, q0, q1).shape == (5, 4)


def test_min_distance_between_circles():
    a = make_circle(1.0, n=120)
    b = make_circle(1.0, (0.0, 0.0, 0.5), n=120)
    assert min_distance_between(a, b) == pytest.approx(0.5)


class TestArcDistance:
    square = PolyCurve([(1, -1, 0), (1, 1, 0), (-1, 1, 0), (-1, -1, 0)])

    def test_shorter_way(self):
        assert arc_distance(self.square, 0, 1) == pytest.approx(2.0)
        assert arc_distance(self.square, 0, 3) == pytest.approx(2.0)
        assert arc_distance(self.square, 1, 3) == pytest.approx(4.0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            arc_distance(self.square, 0, 4)

    def test_same_vertex(self):
        with pytest.raises(ValueError, match="two distinct vertices"):
            arc_distance(self.square, 2, 2)

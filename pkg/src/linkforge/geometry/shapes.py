# Standard library
import math
from typing import Callable, List, Optional, Sequence, Tuple

# Local application
from .curves import Link, Point3, PolyCurve

# Third party
import numpy as np
import numpy.typing as npt

ORIGIN: Point3 = (0.0, 0.0, 0.0)
X_AXIS: Point3 = (1.0, 0.0, 0.0)
Y_AXIS: Point3 = (0.0, 1.0, 0.0)
Z_AXIS: Point3 = (0.0, 0.0, 1.0)


def plane_frame(
    normal: npt.ArrayLike = Z_AXIS, major_axis: Optional[npt.ArrayLike] = None
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns an orthonormal frame ``(u, v, n)`` with ``u x v = n``.

    Planar shapes are drawn with their first coordinate along ``u`` (the
    major axis) and their second along ``v``. Without a major axis, ``u`` is
    the projection of the x-axis onto the plane, or of the y-axis when the
    normal is close to x.

    :param normal: Unit normal of the plane.
    :param major_axis: Direction in the plane carrying the shape's first
        coordinate.
    """
    n = np.asarray(normal, dtype=np.float64)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-9:
        raise RuntimeError(f"Plane normal should be a unit vector. Got {normal}.")
    if major_axis is None:
        ref = np.array(X_AXIS) if abs(n[0]) < 0.9 else np.array(Y_AXIS)
        u = ref - (ref @ n) * n
    else:
        u = np.asarray(major_axis, dtype=np.float64)
        norm = np.linalg.norm(u)
        if u.shape != (3,) or norm == 0.0 or abs(u @ n) > 1e-9 * norm:
            raise RuntimeError(
                f"Major axis should be a nonzero vector in the plane. Got {major_axis}."
            )
    u = u / np.linalg.norm(u)
    v = np.cross(n, u)
    return u, v, n


def place_profile(
    xy: np.ndarray,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
) -> PolyCurve:
    u, v, _ = plane_frame(normal, major_axis)
    c = np.asarray(center, dtype=np.float64)
    pts = c + xy[:, :1] * u + xy[:, 1:2] * v
    return PolyCurve(pts)


def _check_count(n: int, minimum: int = 3) -> None:
    if n < minimum:
        raise RuntimeError(f"Need at least {minimum} vertices. Currently set to {n}.")


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise RuntimeError(f"{name} should be positive. Currently set to {value}.")


def make_circle(
    radius: float,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    n: int = 360,
    phase: float = 0.0,
    major_axis: Optional[npt.ArrayLike] = None,
) -> PolyCurve:
    """Regular ``n``-gon inscribed in a circle. Vertex ``k`` sits at angle
    ``phase + 2 pi k / n`` measured from the major axis."""
    _check_positive(radius=radius)
    _check_count(n)
    t = phase + 2 * np.pi * np.arange(n) / n
    xy = radius * np.stack([np.cos(t), np.sin(t)], axis=1)
    return place_profile(xy, center, normal, major_axis)


def make_ellipse(
    a_semi: float,
    b_semi: float,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: int = 360,
    phase: float = 0.0,
) -> PolyCurve:
    """Ellipse sampled uniformly in its angle parameter, semi-axis ``a_semi``
    along the major axis."""
    _check_positive(a_semi=a_semi, b_semi=b_semi)
    _check_count(n)
    t = phase + 2 * np.pi * np.arange(n) / n
    xy = np.stack([a_semi * np.cos(t), b_semi * np.sin(t)], axis=1)
    return place_profile(xy, center, normal, major_axis)


def _sample_pieces(
    pieces: Sequence[Tuple[float, Callable[[np.ndarray], np.ndarray]]], n: int
) -> np.ndarray:
    """Samples ``n`` points uniformly by arc length along a closed path made
    of pieces ``(length, f)``, where ``f`` maps local arc length to points."""
    pieces = [p for p in pieces if p[0] > 0.0]
    lengths = np.array([p[0] for p in pieces])
    starts = np.concatenate(([0.0], np.cumsum(lengths)[:-1]))
    total = float(lengths.sum())
    s = total * np.arange(n) / n
    which = np.clip(np.searchsorted(starts, s, side="right") - 1, 0, len(pieces) - 1)
    out = np.empty((n, 2))
    for k, (_, f) in enumerate(pieces):
        mask = which == k
        if np.any(mask):
            out[mask] = f(s[mask] - starts[k])
    return out


def _line(start: Tuple[float, float], direction: Tuple[float, float]):
    start_arr, dir_arr = np.array(start), np.array(direction)
    return lambda s: start_arr + s[:, None] * dir_arr


def _arc(center: Tuple[float, float], radius: float, angle0: float):
    c = np.array(center)
    return lambda s: c + radius * np.stack(
        [np.cos(angle0 + s / radius), np.sin(angle0 + s / radius)], axis=1
    )


def _rounded_rectangle_profile(
    width: float, height: float, corner: float, n: int
) -> np.ndarray:
    """Vertices of a rectangle with quarter-circle corners, starting at the
    rightmost midpoint and running counterclockwise."""
    if not 0 < corner <= 0.5 * min(width, height) + 1e-15:
        raise RuntimeError(
            f"Corner radius should be in (0, {0.5 * min(width, height)}]. "
            f"Currently set to {corner}."
        )
    corner = min(corner, 0.5 * min(width, height))
    hw, hh = 0.5 * width, 0.5 * height
    sx, sy = width - 2 * corner, height - 2 * corner
    pieces = [
        (0.5 * sy, _line((hw, 0.0), (0.0, 1.0))),
        (0.5 * np.pi * corner, _arc((hw - corner, hh - corner), corner, 0.0)),
        (sx, _line((hw - corner, hh), (-1.0, 0.0))),
        (0.5 * np.pi * corner, _arc((-hw + corner, hh - corner), corner, 0.5 * np.pi)),
        (sy, _line((-hw, hh - corner), (0.0, -1.0))),
        (0.5 * np.pi * corner, _arc((-hw + corner, -hh + corner), corner, np.pi)),
        (sx, _line((-hw + corner, -hh), (1.0, 0.0))),
        (0.5 * np.pi * corner, _arc((hw - corner, -hh + corner), corner, 1.5 * np.pi)),
        (0.5 * sy, _line((hw, -hh + corner), (0.0, 1.0))),
    ]
    return _sample_pieces(pieces, n)


def make_stadium(
    aspect: float,
    height: float = 2.0,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: int = 360,
) -> PolyCurve:
    """Rectangle of width ``aspect * height`` capped by half-circles of
    diameter ``height``, sampled uniformly by arc length. With ``aspect = 1``
    it coincides with :func:`make_circle` of radius ``height / 2``."""
    _check_positive(height=height)
    _check_count(n)
    if aspect < 1.0:
        raise RuntimeError(
            f"Stadium aspect ratio should be at least 1. Currently set to {aspect}."
        )
    xy = _rounded_rectangle_profile(aspect * height, height, 0.5 * height, n)
    return place_profile(xy, center, normal, major_axis)


def make_rounded_rectangle(
    width: float,
    height: float,
    corner: float,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: int = 360,
) -> PolyCurve:
    _check_positive(width=width, height=height)
    _check_count(n)
    xy = _rounded_rectangle_profile(width, height, corner, n)
    return place_profile(xy, center, normal, major_axis)


def _split_count(lengths: Sequence[float], n: int) -> List[int]:
    """Splits ``n`` edges among sides proportionally to their lengths, at
    least one each, by largest remainder."""
    lengths = np.asarray(lengths, dtype=np.float64)
    share = n * lengths / lengths.sum()
    counts = np.maximum(np.floor(share).astype(int), 1)
    while counts.sum() < n:
        counts[int(np.argmax(share - counts))] += 1
    while counts.sum() > n:
        candidates = np.where(counts > 1)[0]
        counts[candidates[int(np.argmin((share - counts)[candidates]))]] -= 1
    return counts.tolist()


def _polygon_profile(corners: np.ndarray, n: Optional[int]) -> np.ndarray:
    if n is None or n == len(corners):
        return corners
    _check_count(n, len(corners))
    nxt = np.roll(corners, -1, axis=0)
    counts = _split_count(np.linalg.norm(nxt - corners, axis=1), n)
    pts = [
        a + (b - a) * (np.arange(k) / k)[:, None]
        for a, b, k in zip(corners, nxt, counts)
    ]
    return np.concatenate(pts, axis=0)


def make_rectangle(
    width: float,
    height: float,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: Optional[int] = None,
) -> PolyCurve:
    """Rectangle with ``width`` along the major axis. With ``n`` set, the
    sides are subdivided into ``n`` edges in total; the corners stay
    vertices, so the trace does not change."""
    _check_positive(width=width, height=height)
    hw, hh = 0.5 * width, 0.5 * height
    corners = np.array([[hw, -hh], [hw, hh], [-hw, hh], [-hw, -hh]])
    return place_profile(_polygon_profile(corners, n), center, normal, major_axis)


def make_stretched_ngon(
    n_sides: int,
    aspect: float = 1.0,
    rotation: Optional[float] = None,
    scale: float = 1.0,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: Optional[int] = None,
) -> PolyCurve:
    """Regular ``n_sides``-gon of circumradius ``scale``, rotated by
    ``rotation`` (default ``pi / n_sides``) and stretched by ``aspect`` along
    the major axis."""
    _check_count(n_sides)
    _check_positive(aspect=aspect, scale=scale)
    if rotation is None:
        rotation = np.pi / n_sides
    t = rotation + 2 * np.pi * np.arange(n_sides) / n_sides
    corners = scale * np.stack([aspect * np.cos(t), np.sin(t)], axis=1)
    return place_profile(_polygon_profile(corners, n), center, normal, major_axis)


def _profile_is_simple(xy: np.ndarray) -> bool:
    from .distance import segment_distances

    m = len(xy)
    pts = np.concatenate([xy, np.zeros((m, 1))], axis=1)
    nxt = np.roll(pts, -1, axis=0)
    scale = float(np.max(np.abs(xy)))
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if segment_distances(pts[i], nxt[i], pts[j], nxt[j]) <= 1e-12 * scale:
                return False
    return True


def make_symmetric_decagon(
    p1: Tuple[float, float],
    p2: Tuple[float, float],
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: Optional[int] = None,
) -> PolyCurve:
    """Decagon with vertices at the clock positions 12, 1, 2, 4, 5, 6, 7, 8,
    10 and 11 of a clock face centred at the origin.

    The 12 and 6 o'clock vertices are ``(0, +-1)``; ``p1`` and ``p2`` give the
    1 and 2 o'clock vertices and the rest follow by reflection in both axes.
    The 12 o'clock direction is laid along the major axis.
    """
    (x1, y1), (x2, y2) = p1, p2
    if min(x1, y1, x2, y2) <= 0:
        raise RuntimeError(
            f"Decagon points should lie in the open first quadrant. Got {p1}, {p2}."
        )
    clock = np.array(
        [
            [0.0, 1.0],
            [x1, y1],
            [x2, y2],
            [x2, -y2],
            [x1, -y1],
            [0.0, -1.0],
            [-x1, -y1],
            [-x2, -y2],
            [-x2, y2],
            [-x1, y1],
        ]
    )
    if not _profile_is_simple(clock):
        raise RuntimeError(f"Decagon with points {p1}, {p2} is self-intersecting.")
    # Counterclockwise, with 12 o'clock rotated onto the first coordinate
    xy = clock[::-1] @ np.array([[0.0, -1.0], [1.0, 0.0]])
    xy = np.roll(xy, 1, axis=0)
    return place_profile(_polygon_profile(xy, n), center, normal, major_axis)


def make_squircle(
    a_semi: float,
    b_semi: float,
    exponent: float = 4.0,
    center: npt.ArrayLike = ORIGIN,
    normal: npt.ArrayLike = Z_AXIS,
    major_axis: Optional[npt.ArrayLike] = None,
    n: int = 360,
) -> PolyCurve:
    """Superellipse ``|x / a|^p + |y / b|^p = 1``. Exponent 2 is the
    ellipse."""
    _check_positive(a_semi=a_semi, b_semi=b_semi)
    _check_count(n)
    if exponent < 1.0:
        raise RuntimeError(
            f"Squircle exponent should be at least 1. Currently set to {exponent}."
        )
    t = 2 * np.pi * np.arange(n) / n
    c, s = np.cos(t), np.sin(t)
    xy = np.stack(
        [
            a_semi * np.sign(c) * np.abs(c) ** (2.0 / exponent),
            b_semi * np.sign(s) * np.abs(s) ** (2.0 / exponent),
        ],
        axis=1,
    )
    return place_profile(xy, center, normal, major_axis)


def make_torus_knot(
    p: int,
    q: int,
    r_major: float,
    r_minor: float,
    n: int = 360,
    component: int = 0,
) -> PolyCurve:
    """Curve ``((R + r cos qt) cos pt, (R + r cos qt) sin pt, r sin qt)``.

    For ``gcd(p, q) = g > 1`` the curve closes after ``1 / g`` of a turn; use
    :func:`make_torus_link` for all ``g`` components. ``component`` shifts the
    tube angle by ``2 pi component / p``.
    """
    _check_count(n)
    _check_positive(r_major=r_major, r_minor=r_minor)
    if r_minor >= r_major:
        raise RuntimeError(
            f"Torus minor radius should be below the major radius. "
            f"Currently r={r_minor}, R={r_major}."
        )
    if p <= 0 or q < 0:
        raise RuntimeError(
            f"Torus winding numbers should satisfy p > 0, q >= 0. Got ({p}, {q})."
        )
    g = math.gcd(p, q)
    pp, qq = p // g, q // g
    t = 2 * np.pi * np.arange(n) / n
    tube = qq * t + (2 * np.pi * component / p if p else 0.0)
    ring = r_major + r_minor * np.cos(tube)
    pts = np.stack(
        [ring * np.cos(pp * t), ring * np.sin(pp * t), r_minor * np.sin(tube)], axis=1
    )
    return PolyCurve(pts)


def make_torus_link(
    p: int, q: int, r_major: float, r_minor: float, n: int = 360
) -> Link:
    """Torus link with ``gcd(p, q)`` components, each a ``(p/g, q/g)`` torus
    knot."""
    g = math.gcd(p, q)
    comps = tuple(make_torus_knot(p, q, r_major, r_minor, n, k) for k in range(g))
    labels = None if g == 1 else tuple(f"strand-{k}" for k in range(g))
    return Link(comps, labels)

# Standard library
from typing import Tuple

# Local application
from .curves import PolyCurve, Segment

# Third party
import numpy as np

# Segments whose direction vectors satisfy |u x v|^2 <= PARALLEL_TOL |u|^2 |v|^2
# are handled as parallel.
PARALLEL_TOL = 1e-12


def segment_distances(
    p0: np.ndarray, p1: np.ndarray, q0: np.ndarray, q1: np.ndarray
) -> np.ndarray:
    """Minimum distances between batches of segments ``[p0, p1]`` and
    ``[q0, q1]``.

    Inputs broadcast against each other along all but the last axis, which
    holds the three coordinates. The closest points are found by clamping the
    unconstrained line-line solution to the unit square of segment parameters,
    re-solving the free parameter on the clamped edge.
    """
    u = p1 - p0
    v = q1 - q0
    w = p0 - q0
    a = np.einsum("...i,...i->...", u, u)
    b = np.einsum("...i,...i->...", u, v)
    c = np.einsum("...i,...i->...", v, v)
    d = np.einsum("...i,...i->...", u, w)
    e = np.einsum("...i,...i->...", v, w)
    a, b, c, d, e = np.broadcast_arrays(a, b, c, d, e)
    denom = a * c - b * b

    parallel = denom <= PARALLEL_TOL * a * c
    s_num = np.where(parallel, 0.0, b * e - c * d)
    s_den = np.where(parallel, 1.0, denom)
    t_num = np.where(parallel, e, a * e - b * d)
    t_den = np.where(parallel, c, denom)

    # Clamp s to [0, 1], then recompute t on that edge
    low = s_num < 0.0
    s_num = np.where(low, 0.0, s_num)
    t_num = np.where(low, e, t_num)
    t_den = np.where(low, c, t_den)
    high = s_num > s_den
    s_num = np.where(high, s_den, s_num)
    t_num = np.where(high, e + b, t_num)
    t_den = np.where(high, c, t_den)

    # Clamp t to [0, 1], then recompute s on that edge
    t_low = t_num < 0.0
    t_high = t_num > t_den
    s_on_low = -d
    s_on_high = b - d
    s_num_low = np.where(
        s_on_low < 0.0, 0.0, np.where(s_on_low > a, s_den, s_on_low)
    )
    s_den_low = np.where((s_on_low >= 0.0) & (s_on_low <= a), a, s_den)
    s_num_high = np.where(
        s_on_high < 0.0, 0.0, np.where(s_on_high > a, s_den, s_on_high)
    )
    s_den_high = np.where((s_on_high >= 0.0) & (s_on_high <= a), a, s_den)
    s_num = np.where(t_low, s_num_low, np.where(t_high, s_num_high, s_num))
    s_den = np.where(t_low, s_den_low, np.where(t_high, s_den_high, s_den))
    t_num = np.where(t_low, 0.0, np.where(t_high, t_den, t_num))

    sc = s_num / s_den
    tc = t_num / t_den
    diff = w + sc[..., None] * u - tc[..., None] * v
    return np.sqrt(np.einsum("...i,...i->...", diff, diff))


def segment_min_distance(s1: Segment, s2: Segment) -> float:
    """Minimum Euclidean distance between two closed segments.

    .. highlight:: python
    .. code-block:: python

        s1 = Segment((0, 0, 0), (1, 0, 0))
        s2 = Segment((0, 1, 1), (0, 1, -1))
        segment_min_distance(s1, s2)  # 1.0
    """
    return float(segment_distances(s1.a, s1.b, s2.a, s2.b))


def min_distance_between(
    c1: PolyCurve, c2: PolyCurve, block: int = 512
) -> float:
    """Minimum distance between two polygons, as the minimum over every
    segment pair."""
    q0 = c2.vertices[None, :, :]
    q1 = np.roll(c2.vertices, -1, axis=0)[None, :, :]
    p_all = c1.vertices
    p_next = np.roll(p_all, -1, axis=0)
    best = np.inf
    for start in range(0, len(p_all), block):
        p0 = p_all[start : start + block, None, :]
        p1 = p_next[start : start + block, None, :]
        best = min(best, float(segment_distances(p0, p1, q0, q1).min()))
    return best


def arc_distance(curve: PolyCurve, i: int, j: int) -> float:
    """Shorter of the two polygonal arc lengths between vertices ``i`` and
    ``j``."""
    n = curve.n_vertices
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"Vertex indices ({i}, {j}) out of range for {n} vertices.")
    if i == j:
        raise ValueError(
            f"Arc distance needs two distinct vertices. Got i = j = {i}."
        )
    s = curve.arc_positions
    forward = abs(float(s[j] - s[i]))
    return min(forward, curve.length - forward)


def arc_distance_matrix(curve: PolyCurve) -> np.ndarray:
    s = curve.arc_positions
    forward = np.abs(s[None, :] - s[:, None])
    return np.minimum(forward, curve.length - forward)


def nonadjacent_pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Index pairs ``(i, j)``, ``i < j``, of edges of an ``n``-gon that share
    no vertex."""
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    return i[keep], j[keep]

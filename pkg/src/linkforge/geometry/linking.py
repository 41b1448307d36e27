# Standard library
from typing import List, Tuple

# Local application
from ..exceptions import ResolutionError
from .curves import Link, PolyCurve

# Third party
import numpy as np

# Largest accepted distance between a Gauss sum and the nearest integer
ROUNDING_TOLERANCE = 0.1


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    return np.divide(v, norm, out=np.zeros_like(v), where=norm > 0.0)


def _edge_pair_solid_angles(
    p1: np.ndarray, p2: np.ndarray, p3: np.ndarray, p4: np.ndarray
) -> np.ndarray:
    """Signed solid angle of the quadrilateral swept between edges
    ``p1 -> p2`` and ``p3 -> p4``. Summed over all edge pairs of two closed
    polygons and divided by ``4 pi`` it gives their linking number exactly."""
    r13, r14 = p3 - p1, p4 - p1
    r23, r24 = p3 - p2, p4 - p2
    n1 = _unit(np.cross(r13, r14))
    n2 = _unit(np.cross(r14, r24))
    n3 = _unit(np.cross(r24, r23))
    n4 = _unit(np.cross(r23, r13))

    def asin_dot(a, b):
        return np.arcsin(np.clip(np.einsum("...i,...i->...", a, b), -1.0, 1.0))

    omega = asin_dot(n1, n2) + asin_dot(n2, n3) + asin_dot(n3, n4) + asin_dot(n4, n1)
    orient = np.einsum("...i,...i->...", np.cross(p4 - p3, p2 - p1), r13)
    return omega * np.sign(orient)


def gauss_linking_sum(c1: PolyCurve, c2: PolyCurve, block: int = 256) -> float:
    """Unrounded linking number of two disjoint closed polygons."""
    a0, a1 = c1.vertices, np.roll(c1.vertices, -1, axis=0)
    b0 = c2.vertices[None, :, :]
    b1 = np.roll(c2.vertices, -1, axis=0)[None, :, :]
    total = 0.0
    for start in range(0, len(a0), block):
        p1 = a0[start : start + block, None, :]
        p2 = a1[start : start + block, None, :]
        total += float(_edge_pair_solid_angles(p1, p2, b0, b1).sum())
    return total / (4.0 * np.pi)


def _balls_disjoint(c1: PolyCurve, c2: PolyCurve) -> bool:
    o1, r1 = c1.bounding_ball()
    o2, r2 = c2.bounding_ball()
    return float(np.linalg.norm(o1 - o2)) > r1 + r2


def linking_number(c1: PolyCurve, c2: PolyCurve) -> int:
    """Linking number of two disjoint closed polygons.

    Raises :class:`~linkforge.exceptions.ResolutionError` when the Gauss sum
    is further than 0.1 from an integer, which happens for touching or
    nearly touching curves.
    """
    if _balls_disjoint(c1, c2):
        return 0
    raw = gauss_linking_sum(c1, c2)
    nearest = round(raw) if np.isfinite(raw) else None
    if nearest is None or abs(raw - nearest) > ROUNDING_TOLERANCE:
        raise ResolutionError(
            f"Gauss linking sum {raw:.4f} is not close to an integer. "
            f"The curves may touch or be underresolved."
        )
    return int(nearest)


def raw_linking_matrix(link: Link) -> np.ndarray:
    """Symmetric matrix of unrounded Gauss sums, zero on the diagonal and for
    components whose bounding balls are disjoint."""
    n = link.n_components
    out = np.zeros((n, n))
    for i, j in link.pairs():
        if _balls_disjoint(link[i], link[j]):
            continue
        out[i, j] = out[j, i] = gauss_linking_sum(link[i], link[j])
    return out


def linking_matrix(link: Link) -> np.ndarray:
    raw = raw_linking_matrix(link)
    rounded = np.rint(raw)
    bad = np.abs(raw - rounded) > ROUNDING_TOLERANCE
    if np.any(bad) or not np.all(np.isfinite(raw)):
        i, j = np.argwhere(bad | ~np.isfinite(raw))[0]
        raise ResolutionError(
            f"Gauss linking sum {raw[i, j]:.4f} between components "
            f"{link.label(i)} and {link.label(j)} is not close to an integer."
        )
    return rounded.astype(int)


def linked_pairs(link: Link) -> List[Tuple[int, int]]:
    lk = linking_matrix(link)
    return [(i, j) for i, j in link.pairs() if lk[i, j] != 0]


def valences(link: Link) -> np.ndarray:
    """Number of components each component is linked with."""
    return np.count_nonzero(linking_matrix(link), axis=1)

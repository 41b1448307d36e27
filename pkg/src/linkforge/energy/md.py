# Standard library
from typing import Optional

# Local application
from ..geometry import Link, PolyCurve
from ..geometry.distance import nonadjacent_pairs, segment_distances
from .report import EnergyReport
from .utils import bbox_diagonal, check_separation, register

# Third party
import numpy as np

BLOCK_ROWS = 256
PAIR_BLOCK = 16384


def _ends(curve: PolyCurve):
    return curve.vertices, np.roll(curve.vertices, -1, axis=0)


def md_self(curve: PolyCurve, diameter: Optional[float] = None) -> float:
    """``2 sum l_i l_j / MD_ij^2`` over unordered pairs of edges sharing no
    vertex. A square scores exactly 4."""
    if curve.n_vertices < 4:
        raise RuntimeError(
            f"MD energy needs polygons with at least four edges. "
            f"Got {curve.n_vertices}."
        )
    if diameter is None:
        diameter = bbox_diagonal(curve)
    p0, p1 = _ends(curve)
    lengths = curve.edge_lengths
    i, j = nonadjacent_pairs(curve.n_vertices)
    total, closest = 0.0, np.inf
    for start in range(0, len(i), PAIR_BLOCK):
        a, b = i[start : start + PAIR_BLOCK], j[start : start + PAIR_BLOCK]
        md = segment_distances(p0[a], p1[a], p0[b], p1[b])
        closest = min(closest, float(md.min()))
        with np.errstate(divide="ignore"):
            total += float(np.sum(lengths[a] * lengths[b] / md**2))
    check_separation(closest, diameter, "Polygon")
    return 2.0 * total


def md_cross(
    c1: PolyCurve, c2: PolyCurve, diameter: Optional[float] = None
) -> float:
    if diameter is None:
        diameter = bbox_diagonal(c1, c2)
    a0, a1 = _ends(c1)
    b0, b1 = _ends(c2)
    la, lb = c1.edge_lengths, c2.edge_lengths
    total, closest = 0.0, np.inf
    for start in range(0, len(a0), BLOCK_ROWS):
        sl = slice(start, start + BLOCK_ROWS)
        md = segment_distances(
            a0[sl, None, :], a1[sl, None, :], b0[None, :, :], b1[None, :, :]
        )
        closest = min(closest, float(md.min()))
        with np.errstate(divide="ignore"):
            total += float(np.sum(la[sl, None] * lb[None, :] / md**2))
    check_separation(closest, diameter, "Component pair")
    return 2.0 * total


@register("md")
def md_energy(link: Link) -> EnergyReport:
    """Minimum distance energy of a polygonal link.

    Every unordered pair of edges that share no vertex contributes
    ``l_i l_j / MD_ij^2``, where ``MD`` is the minimum distance between the two
    edges; the sum is doubled to count both orders.
    """
    diameter = link.diameter
    selfs = [md_self(c, diameter) for c in link]
    cross = {(i, j): md_cross(link[i], link[j], diameter) for i, j in link.pairs()}
    return EnergyReport("md", selfs, cross, link.n_vertices)

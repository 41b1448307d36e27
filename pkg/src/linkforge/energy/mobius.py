# Standard library
from typing import Callable, Iterable, List, Optional, Tuple

# Local application
from ..geometry import Link, PolyCurve
from .report import EnergyReport
from .utils import as_tensor, bbox_diagonal, check_separation, register

# Third party
import torch

BLOCK_ROWS = 512


def mobius_self(curve: PolyCurve, diameter: Optional[float] = None) -> float:
    """Discrete Möbius energy of one closed polygon.

    Sums ``(1 / |x_i - x_j|^2 - 1 / D(x_i, x_j)^2) w_i w_j`` over ordered
    vertex pairs ``i != j``, with ``D`` the shorter polygonal arc and ``w``
    half the length of the two edges at a vertex. A fine regular polygon
    scores slightly below 4 and approaches it as vertices are added.

    :param curve: Closed polygon.
    :param diameter: Length scale for the divergence check. Defaults to the
        curve's bounding-box diagonal.
    """
    if curve.n_vertices < 4:
        raise RuntimeError(
            "Möbius energy needs at least 4 vertices. "
            f"Currently set to {curve.n_vertices}."
        )
    if diameter is None:
        diameter = bbox_diagonal(curve)
    x = as_tensor(curve.vertices)
    w = as_tensor(curve.vertex_weights)
    s = as_tensor(curve.arc_positions)
    length = curve.length
    n = x.shape[0]
    total = torch.zeros((), dtype=torch.float64)
    closest = float("inf")
    for start in range(0, n, BLOCK_ROWS):
        stop = min(start + BLOCK_ROWS, n)
        rows = torch.arange(stop - start)
        cols = torch.arange(start, stop)
        d2 = (x[start:stop, None, :] - x[None, :, :]).square().sum(-1)
        arc = (s[start:stop, None] - s[None, :]).abs()
        arc = torch.minimum(arc, length - arc)
        d2[rows, cols] = float("inf")
        arc[rows, cols] = float("inf")
        closest = min(closest, float(d2.min().sqrt()))
        term = (d2.reciprocal() - arc.square().reciprocal()) * w[start:stop, None] * w
        total = total + term.sum()
    check_separation(closest, diameter, "Curve")
    return float(total)


def mobius_cross(
    c1: PolyCurve, c2: PolyCurve, diameter: Optional[float] = None
) -> float:
    """Discrete cross energy ``2 sum_ij w_i w_j / |x_i - y_j|^2`` between two
    closed polygons, counting both orders of each pair.

    Two Hopf-linked round circles score at least ``4 pi^2``.
    """
    if diameter is None:
        diameter = bbox_diagonal(c1, c2)
    x, y = as_tensor(c1.vertices), as_tensor(c2.vertices)
    wx, wy = as_tensor(c1.vertex_weights), as_tensor(c2.vertex_weights)
    total = torch.zeros((), dtype=torch.float64)
    closest = float("inf")
    for start in range(0, x.shape[0], BLOCK_ROWS):
        stop = min(start + BLOCK_ROWS, x.shape[0])
        d2 = (x[start:stop, None, :] - y[None, :, :]).square().sum(-1)
        closest = min(closest, float(d2.min().sqrt()))
        total = total + (wx[start:stop, None] * wy / d2).sum()
    check_separation(closest, diameter, "Component pair")
    return 2.0 * float(total)


@register("mobius")
def mobius_total(link: Link) -> EnergyReport:
    diameter = link.diameter
    selfs = [mobius_self(c, diameter) for c in link]
    cross = {(i, j): mobius_cross(link[i], link[j], diameter) for i, j in link.pairs()}
    return EnergyReport("mobius", selfs, cross, link.n_vertices)


def mobius_convergence(
    curve_builder: Callable[[int], PolyCurve], ns: Iterable[int] = (90, 180, 360, 720)
) -> List[Tuple[int, float]]:
    """Self energy of ``curve_builder(n)`` for each vertex count ``n``."""
    return [(n, mobius_self(curve_builder(n))) for n in ns]

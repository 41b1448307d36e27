# Standard library
import math
from typing import Optional, Tuple

# Local application
from ..exceptions import DivergenceError, TopologyError
from ..geometry import Link, ORIGIN, X_AXIS, Z_AXIS, make_circle, make_stretched_ngon
from ..energy import square_hopf_optimal_separation
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np

# Normal of the XZ plane, oriented so that (x, z) is a right-handed frame
XZ_NORMAL = (0.0, -1.0, 0.0)
HOPF_MATRIX = np.array([[0, 1], [1, 0]])


def family_hopf_circles(
    alpha: float, delta: float, n: int = 360, validate: bool = True
) -> Link:
    """Unit circle in the XY plane and a circle of radius ``alpha`` in the XZ
    plane centred at ``(delta, 0, 0)``.

    The pair is linked iff ``|delta - alpha| < 1 < delta + alpha``.
    """
    if not alpha > 0:
        raise RuntimeError(f"alpha should be positive. Currently set to {alpha}.")
    inner, outer = abs(delta - alpha), delta + alpha
    if min(abs(inner - 1.0), abs(outer - 1.0)) <= 1e-12:
        raise DivergenceError(f"Circles intersect at alpha={alpha}, delta={delta}.")
    if not inner < 1.0 < outer:
        raise TopologyError(f"Circles with alpha={alpha}, delta={delta} are unlinked.")
    c1 = make_circle(1.0, ORIGIN, Z_AXIS, n)
    c2 = make_circle(alpha, (delta, 0.0, 0.0), XZ_NORMAL, n, major_axis=X_AXIS)
    link = Link((c1, c2), ("xy-circle", "xz-circle"))
    if validate:
        check_topology(link, HOPF_MATRIX, "hopf-circles")
    return link


def family_hopf_polygons(
    n_sides: int,
    delta: float,
    phases: Tuple[Optional[float], Optional[float]] = (None, None),
    n: Optional[int] = None,
    validate: bool = True,
) -> Link:
    """Two regular ``n_sides``-gons of unit apothem, one in the XY plane at the
    origin and one in the XZ plane centred at ``(delta, 0, 0)``.

    Each phase rotates its polygon in-plane; the default ``pi / n_sides``
    puts an edge facing +x, so two squares are axis-aligned with side 2.
    """
    scale = 1.0 / math.cos(math.pi / n_sides)
    phase1, phase2 = (math.pi / n_sides if p is None else p for p in phases)
    p1 = make_stretched_ngon(n_sides, 1.0, phase1, scale, ORIGIN, Z_AXIS, n=n)
    p2 = make_stretched_ngon(
        n_sides, 1.0, phase2, scale, (delta, 0.0, 0.0), XZ_NORMAL, X_AXIS, n=n
    )
    link = Link((p1, p2), ("xy-polygon", "xz-polygon"))
    if validate:
        link.validate()
        check_topology(link, HOPF_MATRIX, "hopf-polygons")
    return link


@register("hopf-circles")
def hopf_circles_spec() -> FamilySpec:
    def build(p, n, validate):
        return family_hopf_circles(p[1], p[0], n, validate)

    return FamilySpec(
        name="hopf-circles",
        param_names=("delta", "alpha"),
        bounds=((0.0, None), (0.0, None)),
        defaults=(math.sqrt(2.0), 1.0),
        builder=build,
        default_vertices=360,
        description="Hopf link of a unit circle and a circle of radius alpha.",
    )


@register("hopf-polygons")
def hopf_polygons_spec(n_sides: int = 4) -> FamilySpec:
    if n_sides < 4:
        raise RuntimeError(
            f"MD energy needs at least four sides. Currently set to {n_sides}."
        )

    def build(p, n, validate):
        return family_hopf_polygons(n_sides, p[0], (p[1], p[2]), n, validate)

    delta0 = square_hopf_optimal_separation() if n_sides == 4 else 1.2
    return FamilySpec(
        name="hopf-polygons",
        param_names=("delta", "phase1", "phase2"),
        bounds=((0.0, None), (None, None), (None, None)),
        defaults=(delta0, math.pi / n_sides, math.pi / n_sides),
        builder=build,
        default_vertices=None,
        angle_params=("phase1", "phase2"),
        options={"n_sides": n_sides},
        description="Hopf link of two regular polygons of unit apothem.",
    )

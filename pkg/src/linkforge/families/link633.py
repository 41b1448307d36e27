# Standard library
import math

# Local application
from ..geometry import Link, ORIGIN, X_AXIS, make_circle
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np

LINK633_MATRIX = np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)


def _tilted_normal(angle: float) -> np.ndarray:
    """Normal of the plane through the x axis rotated by ``angle`` about x
    from the XY plane."""
    return np.array([0.0, -math.sin(angle), math.cos(angle)])


def family_link633(
    d: float, incline: float, r_small: float, n: int = 360, validate: bool = True
) -> Link:
    """Three pairwise Hopf-linked circles forming the torus link T(3, 3).

    Unit circles A and B are centred at ``(-d/2, 0, 0)`` and ``(d/2, 0, 0)``
    in planes through the x axis, rotated about x by ``-incline/2`` and
    ``+incline/2``. A circle of radius ``r_small`` sits at the origin in the
    XZ plane, the bisecting plane whose normal makes ``incline/2`` with the
    planes of A and B.

    At ``(sqrt(3), pi/3, 1/2)`` the three circles are conformally equivalent
    to three Hopf fibres over an equilateral triangle of the base sphere, and
    the Möbius energy is ``12 + 8 sqrt(3) pi^2``.
    """
    if not d > 0 or not r_small > 0:
        raise RuntimeError(
            f"Separation and small radius should be positive. "
            f"Currently set to d={d}, r_small={r_small}."
        )
    half = 0.5 * incline
    a = make_circle(
        1.0, (-0.5 * d, 0.0, 0.0), _tilted_normal(-half), n, major_axis=X_AXIS
    )
    b = make_circle(
        1.0, (0.5 * d, 0.0, 0.0), _tilted_normal(half), n, major_axis=X_AXIS
    )
    c = make_circle(
        r_small, ORIGIN, _tilted_normal(0.5 * math.pi), n, major_axis=X_AXIS
    )
    link = Link((a, b, c), ("outer-a", "outer-b", "small"))
    if validate:
        link.validate()
        check_topology(link, LINK633_MATRIX, "link633")
    return link


@register("link633")
def link633_spec() -> FamilySpec:
    def build(p, n, validate):
        return family_link633(p[0], p[1], p[2], n, validate)

    return FamilySpec(
        name="link633",
        param_names=("d", "incline", "r_small"),
        bounds=((0.0, None), (0.0, math.pi), (0.0, None)),
        defaults=(math.sqrt(3.0), math.pi / 3, 0.5),
        builder=build,
        default_vertices=360,
        angle_params=("incline",),
        description="Three pairwise linked circles (T(3,3)).",
    )

# Standard library
import math
from typing import Optional

# Local application
from ..exceptions import DivergenceError, TopologyError
from ..geometry import Link, ORIGIN, Z_AXIS, make_circle
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np


def central_vertex_count(n: int, r: float) -> int:
    """Vertex count for the central circle keeping its spacing below
    ``r / 4``."""
    return max(n, math.ceil(8 * math.pi / r))


def tambourine_matrix(n_small: int) -> np.ndarray:
    m = np.zeros((n_small + 1, n_small + 1), dtype=int)
    m[0, 1:] = m[1:, 0] = 1
    return m


def family_tambourine(
    n_small: int,
    r: float,
    offset: Optional[float] = None,
    n: int = 360,
    validate: bool = True,
) -> Link:
    """A unit circle in the XY plane with ``n_small`` circles of radius ``r``
    Hopf-linked around it at equal angles.

    Small circle ``k`` is centred at ``offset`` along the radial direction
    at angle ``2 pi k / n_small``, in the plane spanned by that direction and
    z. The default offset ``sqrt(1 + r^2)`` minimises each linkage's cross
    energy in isolation.
    """
    if n_small < 1:
        raise RuntimeError(
            f"Need at least one small circle. Currently set to {n_small}."
        )
    if not 0 < r < 1:
        raise RuntimeError(f"Small radius should be in (0, 1). Currently set to {r}.")
    if offset is None:
        offset = math.sqrt(1.0 + r * r)
    inner, outer = abs(offset - r), offset + r
    if min(abs(inner - 1.0), abs(outer - 1.0)) <= 1e-12:
        raise DivergenceError(
            f"Small circles touch the central circle at offset {offset}."
        )
    if not inner < 1.0 < outer:
        raise TopologyError(f"Small circles at offset {offset} are not linked.")
    if n_small > 1 and 2 * offset * math.sin(math.pi / n_small) <= 2 * r:
        raise RuntimeError(
            f"{n_small} circles of radius {r} overlap at offset {offset}."
        )
    comps = [make_circle(1.0, ORIGIN, Z_AXIS, central_vertex_count(n, r))]
    for k in range(n_small):
        phi = 2 * np.pi * k / n_small
        radial = np.array([np.cos(phi), np.sin(phi), 0.0])
        tangent = np.array([-np.sin(phi), np.cos(phi), 0.0])
        comps.append(make_circle(r, offset * radial, tangent, n, major_axis=radial))
    labels = ("center",) + tuple(f"small-{k}" for k in range(n_small))
    link = Link(tuple(comps), labels)
    if validate:
        check_topology(link, tambourine_matrix(n_small), "tambourine")
    return link


@register("tambourine")
def tambourine_spec(components: int = 8) -> FamilySpec:
    def build(p, n, validate):
        return family_tambourine(components, p[1], p[0], n, validate)

    r0 = 0.01
    return FamilySpec(
        name="tambourine",
        param_names=("offset", "r"),
        bounds=((0.0, None), (0.0, 1.0)),
        defaults=(math.sqrt(1.0 + r0 * r0), r0),
        builder=build,
        default_vertices=360,
        options={"components": components},
        description="Central unit circle with small circles linked around it.",
    )

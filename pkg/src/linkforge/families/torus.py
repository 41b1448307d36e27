# Standard library
import math

# Local application
from ..geometry import Link, make_torus_link
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np


def torus_link_matrix(p: int, q: int) -> np.ndarray:
    """Components of a ``(p, q)`` torus link pairwise link ``pq / g^2``
    times."""
    g = math.gcd(p, q)
    m = np.full((g, g), (p // g) * (q // g), dtype=int)
    np.fill_diagonal(m, 0)
    return m


def family_torus_knot(
    p: int, q: int, r_major: float, r_minor: float, n: int = 360, validate: bool = True
) -> Link:
    """Torus knot, or torus link when ``gcd(p, q) > 1``, on the torus with
    radii ``r_major > r_minor``."""
    link = make_torus_link(p, q, r_major, r_minor, n)
    if validate and link.n_components > 1:
        link.validate()
        check_topology(link, torus_link_matrix(p, q), f"torus-knot({p},{q})")
    return link


@register("torus-knot")
def torus_knot_spec(p: int = 2, q: int = 3) -> FamilySpec:
    def build(params, n, validate):
        return family_torus_knot(p, q, params[0], params[1], n, validate)

    return FamilySpec(
        name="torus-knot",
        param_names=("R", "r"),
        bounds=((0.0, None), (0.0, None)),
        defaults=(1.0, 0.5),
        builder=build,
        default_vertices=360,
        options={"p": p, "q": q},
        description="Torus knot or link; only r/R changes the energy.",
    )

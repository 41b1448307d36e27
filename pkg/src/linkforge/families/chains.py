# Standard library
import math
from typing import List, Optional, Tuple

# Local application
from ..geometry import Link, PolyCurve, X_AXIS, Z_AXIS, make_circle, make_rectangle
from .args import CENTER_AREA, ChainLayout
from .hopf import XZ_NORMAL
from .utils import FamilySpec, chain_matrix, check_topology, register

# Third party
import numpy as np


def _plane(k: int) -> Tuple[float, float, float]:
    return Z_AXIS if k % 2 == 0 else XZ_NORMAL


def family_chain_congruent(
    m: int,
    spacing: float,
    shape: str = "circle",
    n: Optional[int] = 360,
    validate: bool = True,
) -> Link:
    """``m`` unit circles, or squares of unit apothem, centred at
    ``(k * spacing, 0, 0)`` and alternating between the XY and XZ planes."""
    if m < 2:
        raise RuntimeError(
            f"A chain needs at least two components. Currently set to {m}."
        )
    if not 0 < spacing < 2:
        raise RuntimeError(
            f"Spacing should be in (0, 2) for neighbours to link. "
            f"Currently set to {spacing}."
        )
    comps: List[PolyCurve] = []
    for k in range(m):
        center = (k * spacing, 0.0, 0.0)
        if shape == "circle":
            circle = make_circle(1.0, center, _plane(k), n or 360, major_axis=X_AXIS)
            comps.append(circle)
        elif shape == "square":
            comps.append(make_rectangle(2.0, 2.0, center, _plane(k), X_AXIS, n))
        else:
            raise NotImplementedError(
                f"{shape} is not an implemented chain shape. Choose circle or square."
            )
    link = Link(tuple(comps), tuple(f"link-{k}" for k in range(m)))
    if validate:
        link.validate()
        check_topology(link, chain_matrix(m), "chain-congruent")
    return link


def layer_positions(layout: ChainLayout) -> np.ndarray:
    """Centre ``X_k`` of each layer's right-hand rectangle, ``X_0 = 0``."""
    return np.concatenate(([0.0], np.cumsum(layout.displacements)))


def family_chain_layered(
    layout: ChainLayout, n: Optional[int] = None, validate: bool = True
) -> Link:
    """``2N + 1`` rectangles along x, mirror-symmetric about the origin.

    Layer ``k`` rectangles are centred at ``x = +-X_k``, lie in the XZ plane
    for odd ``k`` and the XY plane for even ``k``, and have width
    ``sqrt(area * aspect)`` along x. Components are ordered left to right.
    """
    xs = layer_positions(layout)
    areas = [CENTER_AREA] + layout.areas
    aspects = [layout.center_aspect] + layout.aspects
    sizes = [(math.sqrt(a * s), math.sqrt(a / s)) for a, s in zip(areas, aspects)]

    def rect(k: int, x: float) -> PolyCurve:
        w, h = sizes[k]
        return make_rectangle(w, h, (x, 0.0, 0.0), _plane(k), X_AXIS, n)

    N = layout.n_layers
    comps = [rect(k, -xs[k]) for k in range(N, 0, -1)]
    comps.append(rect(0, 0.0))
    comps.extend(rect(k, xs[k]) for k in range(1, N + 1))
    labels = [f"layer-{k}-left" for k in range(N, 0, -1)] + ["center"]
    labels += [f"layer-{k}-right" for k in range(1, N + 1)]
    link = Link(tuple(comps), tuple(labels))
    if validate:
        link.validate()
        check_topology(link, chain_matrix(2 * N + 1), "chain-layered")
    return link


@register("chain-congruent")
def chain_congruent_spec(components: int = 3, shape: str = "circle") -> FamilySpec:
    def build(p, n, validate):
        return family_chain_congruent(components, p[0], shape, n, validate)

    return FamilySpec(
        name="chain-congruent",
        param_names=("spacing",),
        bounds=((1.0, 2.0),),
        defaults=(1.58 if shape == "circle" else 1.57,),
        builder=build,
        default_vertices=360 if shape == "circle" else None,
        options={"components": components, "shape": shape},
        description="Open chain of congruent circles or squares.",
    )


@register("chain-layered")
def chain_layered_spec(layers: int = 1) -> FamilySpec:
    def build(p, n, validate):
        return family_chain_layered(ChainLayout.from_vector(p, layers), n, validate)

    names = ChainLayout.param_names(layers)
    return FamilySpec(
        name="chain-layered",
        param_names=tuple(names),
        bounds=((0.0, None),) * len(names),
        defaults=tuple(ChainLayout.default(layers).to_vector()),
        builder=build,
        default_vertices=None,
        options={"layers": layers},
        description="Mirror-symmetric chain of 2N+1 rectangles.",
    )

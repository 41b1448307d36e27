# Standard library
import math
from typing import Any, Callable, Dict, Optional

# Local application
from ..geometry import (
    Link,
    ORIGIN,
    PolyCurve,
    make_ellipse,
    make_rectangle,
    make_rounded_rectangle,
    make_squircle,
    make_stadium,
    make_stretched_ngon,
    make_symmetric_decagon,
)
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np

AXES = np.eye(3)
BORROMEAN_MATRIX = np.zeros((3, 3), dtype=int)

ShapeFn = Callable[[np.ndarray, np.ndarray, Optional[int]], PolyCurve]


def _aspect(value: float) -> float:
    if not value > 1.0:
        raise RuntimeError(
            f"Borromean rings cannot be formed from three circles; aspect should "
            f"exceed 1. Currently set to {value}."
        )
    return value


def _shape_fn(shape: str, params: Dict[str, Any]) -> ShapeFn:
    """Returns ``f(normal, major_axis, n)`` drawing one centred component."""
    if shape == "ellipse":
        a = _aspect(params["aspect"])
        return lambda nrm, ax, n: make_ellipse(a, 1.0, ORIGIN, nrm, ax, n or 360)
    if shape == "stadium":
        a = _aspect(params["aspect"])
        return lambda nrm, ax, n: make_stadium(a, 2.0, ORIGIN, nrm, ax, n or 360)
    if shape == "rectangle":
        a = _aspect(params["aspect"])
        return lambda nrm, ax, n: make_rectangle(a, 1.0, ORIGIN, nrm, ax, n)
    if shape == "ngon":
        a = _aspect(params["aspect"])
        sides, rot = params["n_sides"], params.get("rotation")
        return lambda nrm, ax, n: make_stretched_ngon(
            sides, a, rot, 1.0, ORIGIN, nrm, ax, n
        )
    if shape == "decagon":
        p1, p2 = params["p1"], params["p2"]
        return lambda nrm, ax, n: make_symmetric_decagon(p1, p2, ORIGIN, nrm, ax, n)
    if shape == "squircle":
        a = _aspect(params["aspect"])
        e = params.get("exponent", 4.0)
        return lambda nrm, ax, n: make_squircle(a, 1.0, e, ORIGIN, nrm, ax, n or 360)
    if shape == "rounded-rectangle":
        a = _aspect(params["aspect"])
        corner = params["corner"]
        return lambda nrm, ax, n: make_rounded_rectangle(
            2.0 * a, 2.0, corner, ORIGIN, nrm, ax, n or 360
        )
    raise NotImplementedError(
        f"{shape} is not an implemented Borromean shape. Choose from ellipse, "
        f"stadium, rectangle, ngon, decagon, squircle, rounded-rectangle."
    )


def family_borromean(
    shape: str, n: Optional[int] = None, validate: bool = True, **shape_params
) -> Link:
    """Three congruent planar curves with a common centre, component ``i`` in
    the plane normal to axis ``e_i`` with its major axis along
    ``e_{i+1}``.

    .. highlight:: python
    .. code-block:: python

        family_borromean("ellipse", aspect=1.71)
        family_borromean("ngon", n_sides=10, aspect=1.74)
        family_borromean("decagon", p1=(0.44, 0.75), p2=(0.52, 0.27))
    """
    draw = _shape_fn(shape, shape_params)
    comps = tuple(draw(AXES[i], AXES[(i + 1) % 3], n) for i in range(3))
    link = Link(comps, ("x-normal", "y-normal", "z-normal"))
    if validate:
        link.validate()
        check_topology(link, BORROMEAN_MATRIX, f"borromean-{shape}")
    return link


def _spec(name, param_names, bounds, defaults, to_shape, default_vertices, **extra):
    shape = name[len("borromean-") :]

    def build(p, n, validate):
        return family_borromean(shape, n, validate, **to_shape(p))

    return FamilySpec(
        name=name,
        param_names=param_names,
        bounds=bounds,
        defaults=defaults,
        builder=build,
        default_vertices=default_vertices,
        **extra,
    )


@register("borromean-ellipse")
def borromean_ellipse_spec() -> FamilySpec:
    return _spec(
        "borromean-ellipse",
        ("aspect",),
        ((1.0, None),),
        (1.71,),
        lambda p: {"aspect": p[0]},
        360,
        description="Three orthogonal ellipses with semi-axes aspect and 1.",
    )


@register("borromean-stadium")
def borromean_stadium_spec() -> FamilySpec:
    return _spec(
        "borromean-stadium",
        ("aspect",),
        ((1.0, None),),
        (1.78,),
        lambda p: {"aspect": p[0]},
        360,
        description="Three orthogonal stadium curves of height 2.",
    )


@register("borromean-rectangle")
def borromean_rectangle_spec() -> FamilySpec:
    return _spec(
        "borromean-rectangle",
        ("aspect",),
        ((1.0, None),),
        (1.756,),
        lambda p: {"aspect": p[0]},
        None,
        description="Three orthogonal 1 x aspect rectangles.",
    )


@register("borromean-ngon")
def borromean_ngon_spec(n_sides: int = 10) -> FamilySpec:
    return _spec(
        "borromean-ngon",
        ("aspect", "rotation"),
        ((1.0, None), (None, None)),
        (1.74, math.pi / n_sides),
        lambda p: {"aspect": p[0], "rotation": p[1], "n_sides": n_sides},
        None,
        angle_params=("rotation",),
        options={"n_sides": n_sides},
        description="Three orthogonal regular polygons stretched by aspect.",
    )


@register("borromean-decagon")
def borromean_decagon_spec() -> FamilySpec:
    return _spec(
        "borromean-decagon",
        ("p1x", "p1y", "p2x", "p2y"),
        ((0.0, None),) * 4,
        (0.44, 0.75, 0.52, 0.27),
        lambda p: {"p1": (p[0], p[1]), "p2": (p[2], p[3])},
        None,
        description="Three orthogonal decagons with two-fold mirror symmetry.",
    )


@register("borromean-squircle")
def borromean_squircle_spec() -> FamilySpec:
    return _spec(
        "borromean-squircle",
        ("aspect", "exponent"),
        ((1.0, None), (1.0, None)),
        (1.75, 2.5),
        lambda p: {"aspect": p[0], "exponent": p[1]},
        360,
        description="Three orthogonal superellipses.",
    )


@register("borromean-rounded-rectangle")
def borromean_rounded_rectangle_spec() -> FamilySpec:
    return _spec(
        "borromean-rounded-rectangle",
        ("aspect", "corner"),
        ((1.0, None), (0.0, 1.0)),
        (1.75, 0.8),
        lambda p: {"aspect": p[0], "corner": p[1]},
        360,
        description="Three orthogonal rectangles of height 2 with round corners.",
    )

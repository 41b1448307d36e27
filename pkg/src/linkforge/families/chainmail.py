# Standard library
import math
from typing import List, Optional, Tuple

# Local application
from ..geometry import (
    Link,
    PolyCurve,
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    make_circle,
    make_rectangle,
    rotation_matrix,
)
from .args import ChainmailParams
from .hopf import XZ_NORMAL
from .utils import FamilySpec, check_topology, register

# Third party
import numpy as np

DIAGONAL = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)


def _ring(
    shape: str,
    radius: float,
    center,
    normal,
    major_axis,
    n: Optional[int],
) -> PolyCurve:
    if shape == "circle":
        return make_circle(radius, center, normal, n or 180, major_axis=major_axis)
    return make_rectangle(2 * radius, 2 * radius, center, normal, major_axis, n)


def _lattice_neighbours(size: int) -> np.ndarray:
    m = np.zeros((size * size, size * size), dtype=int)
    for i in range(size):
        for j in range(size):
            k = i * size + j
            if i + 1 < size:
                m[k, k + size] = m[k + size, k] = 1
            if j + 1 < size:
                m[k, k + 1] = m[k + 1, k] = 1
    return m


def european_mail(params: ChainmailParams, n: Optional[int]) -> Tuple[Link, np.ndarray]:
    """Rings at ``(i * d4, j * d4, 0)``, each tilted about the lattice
    diagonal by ``(-1)^(i+j) * theta4`` so every ring links its four lattice
    neighbours. With ``tilt="rows"`` rings are instead tilted about y by
    ``(-1)^j * theta4``, which leaves rings in a row parallel and unlinked."""
    comps, labels = [], []
    for i in range(params.size):
        for j in range(params.size):
            if params.tilt == "checkerboard":
                axis, angle = DIAGONAL, (-1) ** (i + j) * params.theta4
            else:
                axis, angle = np.array(Y_AXIS), (-1) ** j * params.theta4
            normal = rotation_matrix(axis, angle) @ np.array(Z_AXIS)
            center = (i * params.d4, j * params.d4, 0.0)
            comps.append(_ring(params.shape, 1.0, center, normal, axis, n))
            labels.append(f"ring-{i}-{j}")
    return Link(tuple(comps), tuple(labels)), _lattice_neighbours(params.size)


def japanese_mail(params: ChainmailParams, n: Optional[int]) -> Tuple[Link, np.ndarray]:
    """Planar unit rings at ``(i * dj, j * dj, 0)`` joined by linker rings of
    radius ``lj`` centred on the lattice edges: XZ linkers between x
    neighbours, YZ linkers between y neighbours."""
    size, dj = params.size, params.dj
    comps: List[PolyCurve] = []
    labels: List[str] = []
    for i in range(size):
        for j in range(size):
            center = (i * dj, j * dj, 0.0)
            comps.append(_ring(params.shape, 1.0, center, Z_AXIS, X_AXIS, n))
            labels.append(f"ring-{i}-{j}")
    joined: List[Tuple[int, int]] = []
    for i in range(size - 1):
        for j in range(size):
            center = ((i + 0.5) * dj, j * dj, 0.0)
            comps.append(_ring(params.shape, params.lj, center, XZ_NORMAL, X_AXIS, n))
            labels.append(f"linker-x-{i}-{j}")
            joined.append((i * size + j, (i + 1) * size + j))
    for i in range(size):
        for j in range(size - 1):
            center = (i * dj, (j + 0.5) * dj, 0.0)
            comps.append(_ring(params.shape, params.lj, center, X_AXIS, Y_AXIS, n))
            labels.append(f"linker-y-{i}-{j}")
            joined.append((i * size + j, i * size + j + 1))
    total = len(comps)
    m = np.zeros((total, total), dtype=int)
    for k, (a, b) in enumerate(joined):
        linker = size * size + k
        m[linker, a] = m[a, linker] = 1
        m[linker, b] = m[b, linker] = 1
    return Link(tuple(comps), tuple(labels)), m


def family_chainmail(
    params: ChainmailParams, n: Optional[int] = 180, validate: bool = True
) -> Link:
    """Square ``size x size`` chainmail net, European 4-in-1 or Japanese.

    Validation checks every ring against the expected neighbour structure:
    lattice neighbours for European mail, ring-linker pairs for Japanese.
    """
    if params.style == "european":
        link, expected = european_mail(params, n)
    else:
        link, expected = japanese_mail(params, n)
    if validate:
        link.validate()
        check_topology(link, expected, f"chainmail-{params.style}")
    return link


def expected_linkages(params: ChainmailParams) -> int:
    """Number of linked ring pairs in an intact net."""
    size = params.size
    if params.style == "european":
        return 2 * size * (size - 1)
    return 4 * size * (size - 1)


@register("chainmail-european")
def chainmail_european_spec(
    size: int = 3, shape: str = "circle", tilt: str = "checkerboard"
) -> FamilySpec:
    base = ChainmailParams("european", size, shape=shape, tilt=tilt)

    def build(p, n, validate):
        params = base.create_copy({"d4": p[0], "theta4": p[1]})
        return family_chainmail(params, n, validate)

    return FamilySpec(
        name="chainmail-european",
        param_names=("d4", "theta4"),
        bounds=((math.sqrt(2.0), 2.0), (0.0, 0.5 * math.pi)),
        defaults=(base.d4, base.theta4),
        builder=build,
        default_vertices=180 if shape == "circle" else None,
        angle_params=("theta4",),
        options={"size": size, "shape": shape, "tilt": tilt},
        description="European 4-in-1 chainmail on a square lattice.",
    )


@register("chainmail-japanese")
def chainmail_japanese_spec(size: int = 3, shape: str = "circle") -> FamilySpec:
    base = ChainmailParams("japanese", size, shape=shape)

    def build(p, n, validate):
        params = base.create_copy({"dj": p[0], "lj": p[1]})
        return family_chainmail(params, n, validate)

    return FamilySpec(
        name="chainmail-japanese",
        param_names=("dj", "lj"),
        bounds=((2.0, None), (0.0, None)),
        defaults=(base.dj, base.lj),
        builder=build,
        default_vertices=180 if shape == "circle" else None,
        options={"size": size, "shape": shape},
        description="Japanese chainmail of planar rings and linker rings.",
    )

# Standard library
from typing import Optional

# Local application
from .curves import Link, PolyCurve

# Third party
import numpy as np
import numpy.typing as npt


def rotation_matrix(axis: npt.ArrayLike, angle: float) -> np.ndarray:
    """Rotation by ``angle`` radians about ``axis`` (right-hand rule)."""
    k = np.asarray(axis, dtype=np.float64)
    norm = np.linalg.norm(k)
    if norm == 0.0:
        raise RuntimeError("Rotation axis should be nonzero.")
    k = k / norm
    cross = np.array([[0.0, -k[2], k[1]], [k[2], 0.0, -k[0]], [-k[1], k[0], 0.0]])
    return np.eye(3) + np.sin(angle) * cross + (1.0 - np.cos(angle)) * cross @ cross


def _check_rotation(rotation: np.ndarray) -> None:
    if rotation.shape != (3, 3):
        raise RuntimeError(f"Rotation should be 3x3. Got shape {rotation.shape}.")
    if not np.allclose(rotation @ rotation.T, np.eye(3), atol=1e-9) or not np.isclose(
        np.linalg.det(rotation), 1.0, atol=1e-9
    ):
        raise RuntimeError("Rotation matrix should be orthogonal with determinant 1.")


def transform(
    curve: PolyCurve,
    rotation: Optional[npt.ArrayLike] = None,
    translation: Optional[npt.ArrayLike] = None,
    scale: float = 1.0,
) -> PolyCurve:
    """Applies ``x -> scale * R x + t``."""
    if not scale > 0:
        raise RuntimeError(f"Scale should be positive. Currently set to {scale}.")
    pts = curve.vertices
    if rotation is not None:
        rot = np.asarray(rotation, dtype=np.float64)
        _check_rotation(rot)
        pts = pts @ rot.T
    pts = scale * pts
    if translation is not None:
        pts = pts + np.asarray(translation, dtype=np.float64)
    return PolyCurve(pts)


def transform_link(
    link: Link,
    rotation: Optional[npt.ArrayLike] = None,
    translation: Optional[npt.ArrayLike] = None,
    scale: float = 1.0,
) -> Link:
    comps = tuple(transform(c, rotation, translation, scale) for c in link)
    return Link(comps, link.labels)


def subdivide(curve: PolyCurve, factor: int = 2) -> PolyCurve:
    """Splits every edge into ``factor`` equal edges. The trace is
    unchanged."""
    if factor < 1:
        raise RuntimeError(
            f"Subdivision factor should be positive. Currently set to {factor}."
        )
    pts = curve.vertices
    frac = np.arange(factor) / factor
    fine = pts[:, None, :] + frac[None, :, None] * curve.edges[:, None, :]
    return PolyCurve(fine.reshape(-1, 3))


def subdivide_link(link: Link, factor: int = 2) -> Link:
    return Link(tuple(subdivide(c, factor) for c in link), link.labels)

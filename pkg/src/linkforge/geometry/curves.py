# Standard library
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

# Local application
from ..exceptions import DivergenceError

# Third party
import numpy as np
import numpy.typing as npt

Point3 = Tuple[float, float, float]


class PolyCurve:
    """A closed polygon in R^3.

    The edge from the last vertex back to the first is implicit. Vertices are
    stored as a read-only ``(n, 3)`` float64 array.

    :param vertices: Sequence of points, at least three of them.
    :type vertices: array_like
    """

    def __init__(self, vertices: npt.ArrayLike) -> None:
        arr = np.array(vertices, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise RuntimeError(
                f"Vertices should have shape (n, 3). Currently shaped {arr.shape}."
            )
        if arr.shape[0] < 3:
            raise RuntimeError(
                f"A closed curve needs at least three vertices. "
                f"Currently given {arr.shape[0]}."
            )
        if not np.all(np.isfinite(arr)):
            raise RuntimeError("Vertices should be finite.")
        edges = np.roll(arr, -1, axis=0) - arr
        lengths = np.sqrt(np.einsum("ij,ij->i", edges, edges))
        scale = float(np.max(np.abs(arr))) or 1.0
        if np.any(lengths <= 1e-15 * scale):
            bad = int(np.argmin(lengths))
            raise RuntimeError(
                f"Consecutive vertices {bad} and {(bad + 1) % len(arr)} coincide."
            )
        arr.setflags(write=False)
        self._vertices = arr

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return self._vertices.shape[0]

    def __len__(self) -> int:
        return self.n_vertices

    def __repr__(self) -> str:
        return f"PolyCurve(n_vertices={self.n_vertices}, length={self.length:.6g})"

    @cached_property
    def edges(self) -> np.ndarray:
        return np.roll(self._vertices, -1, axis=0) - self._vertices

    @cached_property
    def edge_lengths(self) -> np.ndarray:
        lengths = np.linalg.norm(self.edges, axis=1)
        lengths.setflags(write=False)
        return lengths

    @cached_property
    def length(self) -> float:
        return float(self.edge_lengths.sum())

    @cached_property
    def arc_positions(self) -> np.ndarray:
        """Arc length from vertex 0 to each vertex, going forward."""
        s = np.concatenate(([0.0], np.cumsum(self.edge_lengths[:-1])))
        s.setflags(write=False)
        return s

    @cached_property
    def vertex_weights(self) -> np.ndarray:
        """Half the sum of the two edges meeting at each vertex."""
        w = 0.5 * (self.edge_lengths + np.roll(self.edge_lengths, 1))
        w.setflags(write=False)
        return w

    def segments(self) -> Iterator[Segment]:
        ends = np.roll(self._vertices, -1, axis=0)
        for a, b in zip(self._vertices, ends):
            yield Segment(a, b)

    def bounding_ball(self) -> Tuple[np.ndarray, float]:
        lo, hi = self._vertices.min(axis=0), self._vertices.max(axis=0)
        center = 0.5 * (lo + hi)
        radius = float(np.max(np.linalg.norm(self._vertices - center, axis=1)))
        return center, radius


@dataclass(frozen=True)
class Segment:
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", np.asarray(self.a, dtype=np.float64))
        object.__setattr__(self, "b", np.asarray(self.b, dtype=np.float64))
        if self.length == 0.0:
            raise RuntimeError("Segment endpoints should be distinct.")

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.b - self.a))


@dataclass(frozen=True)
class Link:
    """An ordered collection of disjoint closed polygons.

    A knot is a link with a single component. Labels are optional names,
    one per component, carried through file I/O and validation reports.
    """

    components: Tuple[PolyCurve, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) == 0:
            raise RuntimeError("A link needs at least one component.")
        for c in self.components:
            if not isinstance(c, PolyCurve):
                raise RuntimeError(
                    f"Link components should be PolyCurve. Got {type(c).__name__}."
                )
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.components):
                raise RuntimeError(
                    f"Got {len(self.labels)} labels for "
                    f"{len(self.components)} components."
                )

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[PolyCurve]:
        return iter(self.components)

    def __repr__(self) -> str:
        return f"Link(n_components={self.n_components}, n_vertices={self.n_vertices})"

    def __getitem__(self, i: int) -> PolyCurve:
        return self.components[i]

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_vertices(self) -> List[int]:
        return [c.n_vertices for c in self.components]

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    def all_vertices(self) -> np.ndarray:
        return np.concatenate([c.vertices for c in self.components], axis=0)

    @property
    def diameter(self) -> float:
        """Diagonal of the axis-aligned bounding box of every vertex."""
        pts = self.all_vertices()
        return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))

    def pairs(self) -> Iterable[Tuple[int, int]]:
        n = len(self.components)
        return ((i, j) for i in range(n) for j in range(i + 1, n))

    def transform(
        self,
        rotation: Optional[npt.ArrayLike] = None,
        translation: Optional[npt.ArrayLike] = None,
        scale: float = 1.0,
    ) -> Link:
        from .transforms import transform_link

        return transform_link(self, rotation, translation, scale)

    def validate(self, tolerance: float = 1e-9) -> None:
        """Checks that no two components touch.

        Raises :class:`~linkforge.exceptions.DivergenceError` when the minimum
        segment distance between two components falls below ``tolerance``
        times the link diameter.
        """
        from .distance import min_distance_between

        threshold = tolerance * self.diameter
        for i, j in self.pairs():
            d = min_distance_between(self.components[i], self.components[j])
            if d <= threshold:
                raise DivergenceError(
                    f"Components {self.label(i)} and {self.label(j)} touch "
                    f"(distance {d:.3g})."
                )


def as_link(
    curves: Sequence[PolyCurve], labels: Optional[Sequence[str]] = None
) -> Link:
    return Link(tuple(curves), None if labels is None else tuple(labels))

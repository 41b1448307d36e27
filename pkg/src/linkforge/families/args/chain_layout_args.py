# Standard library
from __future__ import annotations
import copy
import math
from typing import Any, Dict, List, Sequence

# Third party
import numpy as np

# Area of the side-2 squares of the congruent chains
CENTER_AREA = 4.0


class ChainLayout:
    """Shape of a mirror-symmetric chain of ``2 * n_layers + 1`` rectangles.

    The centre rectangle has area :data:`CENTER_AREA` and aspect
    ``center_aspect``; at aspect 1 it is the square of the congruent chains.
    Layer ``k`` (1-based) is a pair of rectangles of area ``areas[k-1]`` and aspect
    ``aspects[k-1]``, displaced by ``displacements[k-1]`` outward from layer
    ``k - 1``. Together these are the ``3 * n_layers + 1`` free parameters.
    """

    def __init__(
        self,
        n_layers: int,
        center_aspect: float = 1.0,
        areas: Sequence[float] = (),
        displacements: Sequence[float] = (),
        aspects: Sequence[float] = (),
    ) -> None:
        self.n_layers: int = n_layers
        self.center_aspect: float = center_aspect
        self.areas: List[float] = [float(a) for a in areas]
        self.displacements: List[float] = [float(d) for d in displacements]
        self.aspects: List[float] = [float(a) for a in aspects]
        ChainLayout.check_validity(self)

    @classmethod
    def default(cls, n_layers: int, center_aspect: float = 1.2) -> ChainLayout:
        """Starting layout where every layer has 0.4 times the area of the
        previous one and is centred on its neighbour's outer edge."""
        areas = [CENTER_AREA * 0.4**k for k in range(1, n_layers + 1)]
        aspects = [1.2] * n_layers
        widths = [math.sqrt(CENTER_AREA * center_aspect)] + [
            math.sqrt(a * s) for a, s in zip(areas, aspects)
        ]
        displacements = [0.5 * widths[k] for k in range(n_layers)]
        return cls(n_layers, center_aspect, areas, displacements, aspects)

    def extended(self, ratio: float = 0.4) -> ChainLayout:
        """Copy with one more layer outside the current ones. The new pair has
        ``ratio`` times the area of the outermost pair, the same aspect, and is
        centred on the outer edge of that pair."""
        area = self.areas[-1] if self.areas else CENTER_AREA
        aspect = self.aspects[-1] if self.aspects else self.center_aspect
        return ChainLayout(
            self.n_layers + 1,
            self.center_aspect,
            self.areas + [ratio * area],
            self.displacements + [0.5 * math.sqrt(area * aspect)],
            self.aspects + [aspect],
        )

    @classmethod
    def from_vector(cls, vector: Sequence[float], n_layers: int) -> ChainLayout:
        """Inverse of :meth:`to_vector`."""
        v = list(vector)
        if len(v) != 3 * n_layers + 1:
            raise RuntimeError(
                f"A layout with {n_layers} layers has {3 * n_layers + 1} "
                f"parameters. Got {len(v)}."
            )
        return cls(n_layers, v[0], v[1::3], v[2::3], v[3::3])

    def to_vector(self) -> np.ndarray:
        """``[center_aspect, area_1, displacement_1, aspect_1, area_2, ...]``."""
        out = [self.center_aspect]
        for a, d, s in zip(self.areas, self.displacements, self.aspects):
            out.extend([a, d, s])
        return np.array(out)

    @staticmethod
    def param_names(n_layers: int) -> List[str]:
        names = ["center_aspect"]
        for k in range(1, n_layers + 1):
            names.extend([f"area_{k}", f"displacement_{k}", f"aspect_{k}"])
        return names

    def create_copy(self, args: Dict[str, Any] = {}) -> ChainLayout:
        new_instance: ChainLayout = copy.deepcopy(self)
        for arg in args:
            if hasattr(new_instance, arg):
                setattr(new_instance, arg, args[arg])
        ChainLayout.check_validity(new_instance)
        return new_instance

    def check_validity(self) -> None:
        if self.n_layers < 0:
            raise RuntimeError(
                f"Number of layers should be non-negative. "
                f"Currently set to {self.n_layers}."
            )
        for name in ("areas", "displacements", "aspects"):
            values = getattr(self, name)
            if len(values) != self.n_layers:
                raise RuntimeError(
                    f"Layout with {self.n_layers} layers needs {self.n_layers} "
                    f"{name}. Currently given {len(values)}."
                )
            if any(not v > 0 for v in values):
                raise RuntimeError(
                    f"All {name} should be positive. Currently set to {values}."
                )
        if not self.center_aspect > 0:
            raise RuntimeError(
                f"Center aspect should be positive. "
                f"Currently set to {self.center_aspect}."
            )

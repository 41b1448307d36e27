# Standard library
from dataclasses import dataclass
from typing import List, Optional, Union

# Third party
import numpy as np

# Local application
from ..families import CENTER_AREA, ChainLayout
from ..geometry import Link
from ..optimize import MinimizeResult


def chain_width(link: Link) -> float:
    """Extent of the link along the chain axis x."""
    xs = link.all_vertices()[:, 0]
    return float(xs.max() - xs.min())


@dataclass
class LayerScaling:
    """Per-layer sizes of a layered chain, the centre rectangle first."""

    areas: List[float]
    displacements: List[float]
    aspects: List[float]

    @property
    def area_ratios(self) -> List[float]:
        """``area[k] / area[k-1]``, shrinking toward the ends of the chain."""
        return [b / a for a, b in zip(self.areas, self.areas[1:])]

    @property
    def displacement_ratios(self) -> List[float]:
        d = self.displacements
        return [b / a for a, b in zip(d, d[1:])]

    @property
    def linear_ratios(self) -> List[float]:
        """Ratios of the rectangle side lengths, the square root of the area
        ratios."""
        return [float(np.sqrt(r)) for r in self.area_ratios]


def layer_scaling(
    layout: Union[ChainLayout, MinimizeResult], n_layers: Optional[int] = None
) -> LayerScaling:
    """Series of areas, displacements and aspects of a layered chain.

    Accepts the minimized :class:`MinimizeResult` of the ``chain-layered``
    family directly; ``n_layers`` is then inferred from the parameter count.
    """
    if isinstance(layout, MinimizeResult):
        vector = np.asarray(layout.params_opt)
        if n_layers is None:
            n_layers = (len(vector) - 1) // 3
        layout = ChainLayout.from_vector(vector, n_layers)
    return LayerScaling(
        areas=[CENTER_AREA] + list(layout.areas),
        displacements=list(layout.displacements),
        aspects=[layout.center_aspect] + list(layout.aspects),
    )

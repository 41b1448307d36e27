# Standard library
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

# Local application
from ..exceptions import TopologyError
from ..geometry import Link, linking_matrix

# Third party
import numpy as np

Bound = Tuple[Optional[float], Optional[float]]

FAMILY_REGISTRY: Dict[str, Callable[..., "FamilySpec"]] = {}


def register(name):
    def decorator(factory):
        FAMILY_REGISTRY[name] = factory
        factory.name = name
        return factory

    return decorator


@dataclass
class FamilySpec:
    """A parameterized link family.

    ``builder(params, n_vertices, validate)`` turns a full parameter vector
    into a :class:`~linkforge.geometry.Link`. Bounds are open intervals;
    ``None`` leaves a side unbounded. Parameters listed in ``angle_params``
    are radians internally and degrees on the command line.
    """

    name: str
    param_names: Tuple[str, ...]
    bounds: Tuple[Bound, ...]
    defaults: Tuple[float, ...]
    builder: Callable[[np.ndarray, Optional[int], bool], Link]
    default_vertices: Optional[int] = None
    angle_params: Tuple[str, ...] = ()
    options: Dict[str, Any] = field(default_factory=dict)
    description: str = ""

    def __post_init__(self) -> None:
        if not len(self.param_names) == len(self.bounds) == len(self.defaults):
            raise RuntimeError(
                f"Family {self.name} has {len(self.param_names)} parameter names, "
                f"{len(self.bounds)} bounds and {len(self.defaults)} defaults."
            )

    @property
    def n_params(self) -> int:
        return len(self.param_names)

    def index(self, param: str) -> int:
        try:
            return self.param_names.index(param)
        except ValueError:
            raise RuntimeError(
                f"{param} is not a parameter of {self.name}. "
                f"Choose from {', '.join(self.param_names)}."
            ) from None

    def check_params(self, params: Sequence[float]) -> np.ndarray:
        p = np.asarray(params, dtype=np.float64)
        if p.shape != (self.n_params,):
            raise RuntimeError(
                f"{self.name} takes {self.n_params} parameters "
                f"({', '.join(self.param_names)}). Got {len(p)}."
            )
        for name, value, (lo, hi) in zip(self.param_names, p, self.bounds):
            if not np.isfinite(value):
                raise RuntimeError(
                    f"{name} should be finite. Currently set to {value}."
                )
            if (lo is not None and value <= lo) or (hi is not None and value >= hi):
                raise RuntimeError(
                    f"{name} should lie in ({lo}, {hi}). Currently set to {value}."
                )
        return p

    def build(
        self,
        params: Sequence[float],
        n_vertices: Optional[int] = None,
        validate: bool = True,
    ) -> Link:
        p = self.check_params(params)
        if n_vertices is None:
            n_vertices = self.default_vertices
        return self.builder(p, n_vertices, validate)

    def schema(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "options": dict(self.options),
            "default_vertices": self.default_vertices,
            "params": [
                {
                    "name": name,
                    "bounds": list(bound),
                    "default": default,
                    "unit": "deg" if name in self.angle_params else None,
                }
                for name, bound, default in zip(
                    self.param_names, self.bounds, self.defaults
                )
            ],
        }


def check_topology(link: Link, expected: np.ndarray, family: str) -> None:
    """Compares absolute linking numbers with ``expected``; orientation is not
    part of a family's promise."""
    actual = np.abs(linking_matrix(link))
    mismatch = np.argwhere(actual != np.abs(expected))
    if len(mismatch):
        i, j = mismatch[0]
        raise TopologyError(
            f"{family}: components {link.label(i)} and {link.label(j)} have "
            f"|linking number| {actual[i, j]}, expected {abs(expected[i, j])}."
        )


def chain_matrix(n: int) -> np.ndarray:
    """Linking matrix of an open chain, each component linked to the next."""
    m = np.zeros((n, n), dtype=int)
    idx = np.arange(n - 1)
    m[idx, idx + 1] = m[idx + 1, idx] = 1
    return m

# Standard library
from typing import Callable, Dict

# Local application
from ..exceptions import DivergenceError
from ..geometry import Link
from .report import EnergyReport

# Third party
import numpy as np
import torch

ENERGY_REGISTRY: Dict[str, Callable[[Link], EnergyReport]] = {}

# Pairwise distances below DIVERGENCE_TOL times the link diameter diverge
DIVERGENCE_TOL = 1e-12


def register(name):
    def decorator(energy_fn):
        ENERGY_REGISTRY[name] = energy_fn
        energy_fn.name = name
        return energy_fn

    return decorator


def as_tensor(array: np.ndarray) -> torch.DoubleTensor:
    return torch.tensor(array, dtype=torch.float64)


def check_separation(min_distance: float, diameter: float, what: str) -> None:
    if not min_distance > DIVERGENCE_TOL * diameter:
        raise DivergenceError(
            f"{what} has points at distance {min_distance:.3g}; the energy diverges."
        )


def bbox_diagonal(*curves) -> float:
    pts = np.concatenate([c.vertices for c in curves], axis=0)
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))

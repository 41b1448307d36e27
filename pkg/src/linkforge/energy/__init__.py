# Standard library
from typing import Dict

# Local application
from ..geometry import Link
from .closed_form import (
    BORROMEAN_CROSS_REFERENCE,
    HOPF_MIN,
    borromean_ratio_to_20pi2,
    borromean_rect_energy,
    circle_chain_energy,
    coplanar_circles_cross,
    elliptic_k,
    hopf_cross_asymmetric,
    hopf_cross_closed_form,
    hopf_cross_quadratic,
    point_charge_cross,
    square_chain_energy,
    square_hopf_cross_formula,
    square_hopf_optimal_separation,
)
from .md import md_cross, md_energy, md_self
from .mobius import mobius_convergence, mobius_cross, mobius_self, mobius_total
from .report import EnergyReport
from .utils import ENERGY_REGISTRY, register


def energy_both(link: Link) -> Dict[str, EnergyReport]:
    return {"mobius": mobius_total(link), "md": md_energy(link)}

# Standard library
import math
from typing import Mapping, Optional

# Local application
from .constants import (
    ESTABLISHED_PREFACTOR,
    MOBIUS_LINK_MIN,
    MOBIUS_SELF_MIN,
    ROPELENGTH_DENOMINATOR,
    ROPELENGTH_DENOMINATOR_LARGE,
    TAMBOURINE_PER_CROSSING,
)

PREFACTOR_CONVENTIONS = ("4pi2", "2pi2")


def _denominator(large_crossing: bool) -> float:
    return ROPELENGTH_DENOMINATOR_LARGE if large_crossing else ROPELENGTH_DENOMINATOR


def ropelength_lower_bound(energy: float, large_crossing: bool = False) -> float:
    """Lower bound on the ropelength of a link with Möbius energy ``energy``,
    ``(energy / 4.57)^(3/4)``.

    :param energy: Total Möbius energy. Must be at least the circle minimum 4.
    :type energy: float
    :param large_crossing: Use the many-crossing denominator 3.63 instead.
    :type large_crossing: bool
    """
    if energy < MOBIUS_SELF_MIN:
        raise RuntimeError(
            f"Möbius energy cannot be below the circle minimum {MOBIUS_SELF_MIN}. "
            f"Currently set to {energy}."
        )
    return (energy / _denominator(large_crossing)) ** 0.75


def tambourine_bound(n_small: int) -> float:
    """Lower bound ``4(N+1) + 4 pi^2 N`` on the Möbius energy of a tambourine
    with ``N`` small circles: each circle costs at least 4 and each of the
    ``N`` linkages at least ``4 pi^2``."""
    if n_small < 1:
        raise RuntimeError(
            f"A tambourine needs at least one small circle. "
            f"Currently set to {n_small}."
        )
    return 4.0 * (n_small + 1) + MOBIUS_LINK_MIN * n_small


def tambourine_crossings(n_small: int) -> int:
    """Each small circle crosses the central one twice."""
    return 2 * n_small


def tambourine_energy_per_crossing(n_small: int) -> float:
    """Decreases toward ``2 pi^2 + 2`` as the circle count grows."""
    return tambourine_bound(n_small) / tambourine_crossings(n_small)


def improved_ropelength_prefactor(
    convention: str = "4pi2", large_crossing: bool = False
) -> float:
    """Prefactor ``a`` of the conjectured bound ``L > a C^(3/4)``.

    With ``convention="4pi2"`` every crossing costs ``2 pi^2 + 2`` (half a
    tambourine linkage plus the self energy share). ``"2pi2"`` halves the
    linkage share, giving ``pi^2 + 2`` per crossing.
    """
    if convention == "4pi2":
        per_crossing = TAMBOURINE_PER_CROSSING
    elif convention == "2pi2":
        per_crossing = math.pi**2 + 2
    else:
        raise NotImplementedError(
            f"{convention} is not an implemented energy convention. "
            f"Choose from {', '.join(PREFACTOR_CONVENTIONS)}."
        )
    return (per_crossing / _denominator(large_crossing)) ** 0.75


def improved_ropelength_bound(
    crossings: int, convention: str = "4pi2", large_crossing: bool = False
) -> float:
    if crossings < 2:
        raise RuntimeError(
            f"The crossing number of a nontrivial link is at least 2. "
            f"Currently set to {crossings}."
        )
    prefactor = improved_ropelength_prefactor(convention, large_crossing)
    return prefactor * crossings**0.75


def established_bound(crossings: int) -> float:
    return ESTABLISHED_PREFACTOR * crossings**0.75


def diao_crossover(
    competing: Mapping[int, float],
    convention: str = "4pi2",
    large_crossing: bool = False,
) -> Optional[int]:
    """Smallest crossing number at which a competing bound catches up.

    ``competing`` maps crossing numbers to the competing bound's values; the
    formula behind them is not evaluated here. Returns ``None`` when the
    improved bound stays ahead over the whole table.
    """
    prefactor = improved_ropelength_prefactor(convention, large_crossing)
    for crossings in sorted(competing):
        if competing[crossings] >= prefactor * crossings**0.75:
            return crossings
    return None

# Standard library
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

# Local application
from ..energy import ENERGY_REGISTRY, EnergyReport
from ..geometry import Link, linked_pairs
from .constants import MD_LINK_MIN, MD_SELF_MIN, MOBIUS_LINK_MIN, MOBIUS_SELF_MIN

LINK_MINIMA = {"mobius": MOBIUS_LINK_MIN, "md": MD_LINK_MIN}
SELF_MINIMA = {"mobius": MOBIUS_SELF_MIN, "md": MD_SELF_MIN}


@dataclass
class EfficiencyReport:
    """How far a link sits above the energy it would have if every linkage
    and every component were independently at its own minimum.

    ``ratio`` compares cross energies only. ``total_ratio`` also counts the
    self energies against the per-component minimum.
    """

    energy_kind: str
    total_cross: float
    n_linkages: int
    per_link_min: float
    ratio: float
    total: float
    total_minimum: float
    total_ratio: float

    @property
    def excess(self) -> float:
        """Fraction of the total energy above the absolute minimum."""
        return self.total_ratio - 1.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def efficiency(
    link: Link,
    linkage_pairs: Optional[Sequence[Tuple[int, int]]] = None,
    energy_kind: str = "mobius",
    report: Optional[EnergyReport] = None,
) -> EfficiencyReport:
    """Cross energy of ``link`` relative to ``n_linkages`` isolated minimal
    linkages (``4 pi^2`` each for Möbius, ``85.5`` for MD).

    :param linkage_pairs: Pairs of components that are linked. Derived from
        the linking matrix when omitted.
    :param report: Precomputed energy report of ``link``, to avoid
        re-evaluating the energy.
    """
    if energy_kind not in LINK_MINIMA:
        raise NotImplementedError(
            f"{energy_kind} is not an implemented energy. "
            f"Choose from {', '.join(LINK_MINIMA)}."
        )
    if linkage_pairs is None:
        linkage_pairs = linked_pairs(link)
    if len(linkage_pairs) == 0:
        raise RuntimeError(
            "Efficiency is undefined for a link without linkages. "
            "Pass the linked component pairs explicitly."
        )
    if report is None:
        report = ENERGY_REGISTRY[energy_kind](link)

    per_link_min = LINK_MINIMA[energy_kind]
    n_linkages = len(linkage_pairs)
    total_minimum = (
        SELF_MINIMA[energy_kind] * link.n_components + per_link_min * n_linkages
    )
    return EfficiencyReport(
        energy_kind=energy_kind,
        total_cross=report.cross_total,
        n_linkages=n_linkages,
        per_link_min=per_link_min,
        ratio=report.cross_total / (n_linkages * per_link_min),
        total=report.total,
        total_minimum=total_minimum,
        total_ratio=report.total / total_minimum,
    )


def energy_per_component(report: EnergyReport) -> List[float]:
    """Self energy of each component plus half of every cross energy it takes
    part in."""
    shares = list(report.self_energies)
    for (i, j), value in report.cross_energies.items():
        shares[i] += 0.5 * value
        shares[j] += 0.5 * value
    return shares

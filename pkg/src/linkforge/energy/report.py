# Standard library
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple


@dataclass
class EnergyReport:
    """Per-component and per-pair energies of a link.

    ``total`` is always the sum of the self and cross energies.
    """

    kind: str
    self_energies: List[float]
    cross_energies: Dict[Tuple[int, int], float]
    n_vertices: List[int]
    total: float = field(init=False)

    def __post_init__(self) -> None:
        self.total = float(sum(self.self_energies) + sum(self.cross_energies.values()))

    @property
    def self_total(self) -> float:
        return float(sum(self.self_energies))

    @property
    def cross_total(self) -> float:
        return float(sum(self.cross_energies.values()))

    @property
    def n_components(self) -> int:
        return len(self.self_energies)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "self": list(self.self_energies),
            "cross": {f"{i}-{j}": v for (i, j), v in self.cross_energies.items()},
            "total": self.total,
            "n_vertices": list(self.n_vertices),
        }

    def to_row(self, prefix: str = "") -> Dict[str, float]:
        """Flat mapping for CSV output."""
        row = {f"{prefix}energy": self.total}
        for i, e in enumerate(self.self_energies):
            row[f"{prefix}self_{i}"] = e
        for (i, j), e in self.cross_energies.items():
            row[f"{prefix}cross_{i}_{j}"] = e
        return row

# Standard library
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

# Third party
import numpy as np


@dataclass
class MinimizeResult:
    params_opt: np.ndarray
    energy_opt: float
    n_evals: int
    converged: bool
    energy_doubled: Optional[float] = None
    history: Optional[List[Tuple[np.ndarray, float]]] = None
    param_names: Optional[Tuple[str, ...]] = None
    message: str = ""
    linking: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def doubling_change(self) -> Optional[float]:
        """Relative change of the energy when the vertex count is doubled."""
        if self.energy_doubled is None:
            return None
        return abs(self.energy_doubled - self.energy_opt) / abs(self.energy_opt)

    def params_dict(self) -> Dict[str, float]:
        names = self.param_names or tuple(f"x{i}" for i in range(len(self.params_opt)))
        return {name: float(v) for name, v in zip(names, self.params_opt)}

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "params": self.params_dict(),
            "energy": self.energy_opt,
            "energy_doubled": self.energy_doubled,
            "doubling_change": self.doubling_change,
            "n_evals": self.n_evals,
            "converged": self.converged,
            "message": self.message,
        }
        if self.linking is not None:
            out["linking"] = np.asarray(self.linking).tolist()
        if self.history is not None:
            out["history"] = [
                {"params": np.asarray(p).tolist(), "energy": e} for p, e in self.history
            ]
        return out

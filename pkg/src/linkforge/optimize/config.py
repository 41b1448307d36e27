# Standard library
from __future__ import annotations
import copy
from typing import Any, Dict, Optional, Tuple

METHODS = ("nelder_mead", "golden_section")


class OptimizerConfig:
    """Settings shared by the optimizers.

    :param method: ``"nelder_mead"`` or ``"golden_section"`` (one free
        parameter only).
    :param xtol: Stop when the simplex diameter, or the golden-section
        bracket, is below this.
    :param ftol: Stop when the spread of simplex values is below
        ``ftol * |best value|``.
    :param max_evals: Hard cap on objective evaluations.
    :param restart: Restart Nelder-Mead once from its best point and keep the
        better result.
    :param initial_step: Relative perturbation building the initial simplex.
    :param zero_step: Absolute perturbation for coordinates equal to zero.
    :param bracket: Search interval for golden-section search. Defaults to
        the family bounds.
    :param record_history: Keep every ``(params, value)`` evaluated.
    """

    def __init__(
        self,
        method: str = "nelder_mead",
        xtol: float = 1e-6,
        ftol: float = 1e-9,
        max_evals: int = 2000,
        restart: bool = True,
        initial_step: float = 0.05,
        zero_step: float = 0.00025,
        bracket: Optional[Tuple[float, float]] = None,
        record_history: bool = False,
    ) -> None:
        self.method: str = method
        self.xtol: float = xtol
        self.ftol: float = ftol
        self.max_evals: int = max_evals
        self.restart: bool = restart
        self.initial_step: float = initial_step
        self.zero_step: float = zero_step
        self.bracket: Optional[Tuple[float, float]] = bracket
        self.record_history: bool = record_history
        OptimizerConfig.check_validity(self)

    def create_copy(self, args: Dict[str, Any] = {}) -> OptimizerConfig:
        new_instance: OptimizerConfig = copy.deepcopy(self)
        for arg in args:
            if hasattr(new_instance, arg):
                setattr(new_instance, arg, args[arg])
        OptimizerConfig.check_validity(new_instance)
        return new_instance

    def check_validity(self) -> None:
        if self.method not in METHODS:
            raise RuntimeError(
                f"Optimizer method should be one of {METHODS}. "
                f"Currently set to {self.method}."
            )
        if not self.xtol > 0 or not self.ftol >= 0:
            raise RuntimeError(
                f"Tolerances should be positive. "
                f"Currently set to xtol={self.xtol}, ftol={self.ftol}."
            )
        if self.max_evals < 1:
            raise RuntimeError(
                f"Evaluation budget should be a positive integer. "
                f"Currently set to {self.max_evals}."
            )
        if not self.initial_step > 0 or not self.zero_step > 0:
            raise RuntimeError(
                f"Initial simplex steps should be positive. Currently set to "
                f"initial_step={self.initial_step}, zero_step={self.zero_step}."
            )
        if self.bracket is not None and not self.bracket[0] < self.bracket[1]:
            raise RuntimeError(
                f"Bracket should satisfy lo < hi. Currently set to {self.bracket}."
            )

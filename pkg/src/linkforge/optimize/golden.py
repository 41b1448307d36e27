# Standard library
import math
from typing import Callable, List, Optional, Tuple

# Local application
from .result import MinimizeResult

# Third party
import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def max_golden_evals(lo: float, hi: float, tol: float) -> int:
    """Upper bound on the evaluations :func:`golden_section` makes."""
    if hi - lo <= tol:
        return 2
    return math.ceil(math.log(tol / (hi - lo)) / math.log(INV_PHI)) + 2


def golden_section(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-6,
    max_evals: Optional[int] = None,
    record_history: bool = False,
) -> MinimizeResult:
    """Minimizes a unimodal scalar function on ``(lo, hi)``.

    Each iteration shrinks the bracket by the golden ratio at the cost of one
    evaluation. The endpoints are never evaluated. Non-finite values count as
    ``+inf``.
    """
    if not lo < hi:
        raise RuntimeError(f"Bracket should satisfy lo < hi. Got ({lo}, {hi}).")
    history: List[Tuple[np.ndarray, float]] = []

    def evaluate(x: float) -> float:
        value = float(f(x))
        if not math.isfinite(value):
            value = math.inf
        if record_history:
            history.append((np.array([x]), value))
        return value

    a, b = lo, hi
    c, d = b - INV_PHI * (b - a), a + INV_PHI * (b - a)
    fc, fd = evaluate(c), evaluate(d)
    n_evals = 2
    while b - a > tol and (max_evals is None or n_evals < max_evals):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = evaluate(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = evaluate(d)
        n_evals += 1
    x_best, f_best = (c, fc) if fc <= fd else (d, fd)
    if math.isinf(f_best):
        raise RuntimeError(
            f"Objective is not finite anywhere it was evaluated in ({lo}, {hi})."
        )
    converged = b - a <= tol
    return MinimizeResult(
        params_opt=np.array([x_best]),
        energy_opt=f_best,
        n_evals=n_evals,
        converged=converged,
        history=history if record_history else None,
        message="bracket below tolerance" if converged else "evaluation budget spent",
    )

# Standard library
import math
from typing import Callable, List, Optional, Sequence, Tuple

# Local application
from .bounds import Bound, BoundsTransform
from .config import OptimizerConfig
from .result import MinimizeResult

# Third party
import numpy as np

REFLECT, EXPAND, CONTRACT, SHRINK = 1.0, 2.0, 0.5, 0.5


class _Objective:
    """Counts evaluations, maps non-finite values to ``+inf`` and keeps the
    history in natural coordinates."""

    def __init__(self, f, transform: BoundsTransform, record: bool) -> None:
        self.f = f
        self.transform = transform
        self.n_evals = 0
        self.history: Optional[List[Tuple[np.ndarray, float]]] = [] if record else None

    def natural(self, x: np.ndarray) -> float:
        self.n_evals += 1
        value = float(self.f(x))
        if not math.isfinite(value):
            value = math.inf
        if self.history is not None:
            self.history.append((np.array(x, copy=True), value))
        return value

    def __call__(self, y: np.ndarray) -> float:
        return self.natural(self.transform.decode(y))


def _initial_simplex(
    x0: np.ndarray, transform: BoundsTransform, config: OptimizerConfig
) -> List[np.ndarray]:
    """``x0`` plus one vertex per coordinate, perturbed by ``initial_step``
    relative (``zero_step`` absolute at zero) in natural coordinates."""
    points = [x0]
    for i in range(len(x0)):
        x = x0.copy()
        step = config.initial_step * x0[i] if x0[i] != 0.0 else config.zero_step
        x[i] = x0[i] + step
        if not transform.contains(x):
            x[i] = x0[i] - step
        points.append(x)
    return points


def _run(
    objective: _Objective,
    x0: np.ndarray,
    f0: float,
    config: OptimizerConfig,
    budget: int,
) -> Tuple[np.ndarray, float, bool, str]:
    transform = objective.transform
    start = objective.n_evals
    simplex = [transform.encode(p) for p in _initial_simplex(x0, transform, config)]
    values = [f0] + [objective(y) for y in simplex[1:]]
    simplex, values = np.array(simplex), np.array(values)
    n = len(x0)
    while True:
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        diameter = float(np.max(np.linalg.norm(simplex[1:] - simplex[0], axis=1)))
        spread = values[-1] - values[0]
        if diameter < config.xtol:
            return simplex[0], values[0], True, "simplex diameter below xtol"
        if spread <= config.ftol * abs(values[0]):
            return simplex[0], values[0], True, "value spread below ftol"
        if objective.n_evals - start >= budget:
            return simplex[0], values[0], False, "evaluation budget spent"

        centroid = simplex[:n].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + REFLECT * (centroid - worst)
        fr = objective(xr)
        if fr < values[0]:
            xe = centroid + EXPAND * (centroid - worst)
            fe = objective(xe)
            simplex[-1], values[-1] = (xe, fe) if fe < fr else (xr, fr)
            continue
        if fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
            continue
        if fr < values[-1]:
            xc = centroid + CONTRACT * (xr - centroid)
            fc = objective(xc)
            if fc <= fr:
                simplex[-1], values[-1] = xc, fc
                continue
        else:
            xc = centroid + CONTRACT * (worst - centroid)
            fc = objective(xc)
            if fc < values[-1]:
                simplex[-1], values[-1] = xc, fc
                continue
        best = simplex[0]
        simplex[1:] = best + SHRINK * (simplex[1:] - best)
        values[1:] = [objective(y) for y in simplex[1:]]


def nelder_mead(
    f: Callable[[np.ndarray], float],
    x0: Sequence[float],
    config: Optional[OptimizerConfig] = None,
    bounds: Optional[Sequence[Bound]] = None,
) -> MinimizeResult:
    """Downhill simplex minimization.

    Uses reflection, expansion, contraction and shrink coefficients 1, 2, 0.5
    and 0.5. Bounded coordinates are searched in log or logit coordinates so
    the simplex never leaves the open box. Points where ``f`` is not finite
    count as ``+inf``. With ``config.restart`` the search is run once more
    from the best point with a fresh simplex and the better result is kept.

    .. highlight:: python
    .. code-block:: python

        result = nelder_mead(lambda x: (x[0] - 1) ** 2 + (x[1] - 2) ** 2, [0, 0])
        result.params_opt  # array([1., 2.])
    """
    config = config or OptimizerConfig()
    x0 = np.atleast_1d(np.asarray(x0, dtype=np.float64))
    if x0.ndim != 1 or len(x0) == 0:
        raise RuntimeError(f"Starting point should be a non-empty vector. Got {x0}.")
    if bounds is None:
        bounds = [(None, None)] * len(x0)
    transform = BoundsTransform(bounds)
    if len(transform) != len(x0):
        raise RuntimeError(f"Got {len(transform)} bounds for {len(x0)} parameters.")
    if not transform.contains(x0):
        raise RuntimeError(f"Starting point {x0.tolist()} lies outside the bounds.")
    objective = _Objective(f, transform, config.record_history)
    f0 = objective.natural(x0)
    if math.isinf(f0):
        raise RuntimeError(
            f"Objective is not finite at the starting point {x0.tolist()}."
        )

    y_best, f_best, converged, message = _run(
        objective, x0, f0, config, config.max_evals - 1
    )
    x_restart = transform.decode(y_best)
    if (
        config.restart
        and objective.n_evals < config.max_evals
        and transform.contains(x_restart)
    ):
        y2, f2, converged2, message2 = _run(
            objective, x_restart, f_best, config, config.max_evals - objective.n_evals
        )
        if f2 <= f_best:
            y_best, f_best = y2, f2
        converged, message = converged2, message2
    return MinimizeResult(
        params_opt=transform.decode(y_best),
        energy_opt=f_best,
        n_evals=objective.n_evals,
        converged=converged,
        history=objective.history,
        message=message,
    )

# Standard library
import math
from typing import Dict, Optional, Sequence, Union
import warnings

# Local application
from ..exceptions import TopologyError
from ..families import FamilySpec
from ..geometry import Link, linking_matrix, subdivide_link
from ..utils.loaders import load_energy, load_family
from .config import OptimizerConfig
from .golden import golden_section
from .nelder_mead import nelder_mead
from .result import MinimizeResult

# Third party
import numpy as np

# Relative energy change on vertex doubling above which a warning is issued
DOUBLING_WARN = 0.01


def topology_fingerprint(link: Link) -> np.ndarray:
    """Absolute pairwise linking numbers."""
    return np.abs(linking_matrix(link))


def full_params(
    family: FamilySpec,
    x: Sequence[float],
    fixed: Optional[Dict[str, float]] = None,
) -> np.ndarray:
    """Completes the leading free parameters ``x`` with fixed values, then
    family defaults."""
    full = np.array(family.defaults, dtype=np.float64)
    for name, value in (fixed or {}).items():
        full[family.index(name)] = value
    full[: len(x)] = x
    return full


def minimize_family(
    family: Union[str, FamilySpec],
    energy_kind: str,
    x0: Sequence[float],
    config: Optional[OptimizerConfig] = None,
    n_vertices: Optional[int] = None,
    fixed: Optional[Dict[str, float]] = None,
) -> MinimizeResult:
    """Minimizes a family's energy over its leading parameters.

    ``x0`` covers the first ``len(x0)`` parameters of the family; the rest
    come from ``fixed`` or the family defaults. Builder rejections count as
    ``+inf``. After the search the link at the optimum must have the same
    absolute linking numbers as at ``x0``, otherwise
    :class:`~linkforge.exceptions.TopologyError` is raised. The optimum is then
    re-evaluated with twice the vertices: Möbius links are rebuilt from the
    family, MD polygons get every edge split in two. Only a Möbius change
    above 1% warns; a split polygon is a different MD polygon.

    :param family: A :class:`FamilySpec` or a registered family name.
    :param energy_kind: ``"mobius"`` or ``"md"``.
    :param x0: Starting values of the free parameters.
    :param config: Optimizer settings.
    :param n_vertices: Vertices per component, defaulting to the family's.
    :param fixed: Values for parameters after the free ones.
    """
    spec = load_family(family) if isinstance(family, str) else family
    energy_fn = load_energy(energy_kind)
    config = config or OptimizerConfig()
    x0 = np.atleast_1d(np.asarray(x0, dtype=np.float64))
    if not 1 <= len(x0) <= spec.n_params:
        raise RuntimeError(
            f"{spec.name} has {spec.n_params} parameters; x0 should give 1 to "
            f"{spec.n_params} of them. Got {len(x0)}."
        )
    for name in fixed or {}:
        if spec.index(name) < len(x0):
            raise RuntimeError(f"{name} is both free and fixed.")
    n_vertices = n_vertices or spec.default_vertices

    start = full_params(spec, x0, fixed)
    try:
        fingerprint = topology_fingerprint(spec.build(start, n_vertices, validate=True))
    except RuntimeError as err:
        raise RuntimeError(
            f"Starting point does not build a valid link: {err}"
        ) from err

    def objective(x: np.ndarray) -> float:
        try:
            link = spec.build(full_params(spec, x, fixed), n_vertices, validate=False)
            return energy_fn(link).total
        except RuntimeError:
            return math.inf

    bounds = spec.bounds[: len(x0)]
    if config.method == "golden_section":
        if len(x0) != 1:
            raise RuntimeError(
                f"Golden-section search takes one free parameter. Got {len(x0)}."
            )
        lo, hi = config.bracket or bounds[0]
        if lo is None or hi is None:
            raise RuntimeError(
                f"Golden-section search needs a finite bracket for "
                f"{spec.param_names[0]}."
            )
        result = golden_section(
            lambda t: objective(np.array([t])),
            lo,
            hi,
            config.xtol,
            config.max_evals,
            config.record_history,
        )
    else:
        result = nelder_mead(objective, x0, config, bounds)

    params_opt = full_params(spec, result.params_opt, fixed)
    link_opt = spec.build(params_opt, n_vertices, validate=False)
    final = topology_fingerprint(link_opt)
    if not np.array_equal(final, fingerprint):
        raise TopologyError(
            f"{spec.name}: linking numbers at the optimum {final.tolist()} differ "
            f"from the start {fingerprint.tolist()}; the search crossed a "
            f"divergence wall."
        )

    if energy_kind == "mobius":
        doubled = 2 * (n_vertices or link_opt.n_vertices[0])
        link_doubled = spec.build(params_opt, doubled, validate=False)
    else:
        link_doubled = subdivide_link(link_opt)
    energy_doubled = energy_fn(link_doubled).total
    change = abs(energy_doubled - result.energy_opt) / abs(result.energy_opt)
    if energy_kind == "mobius" and change > DOUBLING_WARN:
        warnings.warn(
            f"{spec.name}: energy changes by {100 * change:.2f}% when the vertex "
            f"count is doubled."
        )
    if not result.converged:
        warnings.warn(f"{spec.name}: optimizer stopped early ({result.message}).")

    result.params_opt = params_opt
    result.energy_doubled = energy_doubled
    result.param_names = spec.param_names
    result.linking = final
    return result

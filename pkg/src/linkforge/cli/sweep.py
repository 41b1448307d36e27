# Standard library
from __future__ import annotations
import copy
import csv
import math
import os
from typing import Any, Dict, List, Optional, TextIO, Union

# Local application
from ..families import FamilySpec
from ..optimize import full_params
from ..utils.loaders import load_energy, load_family

# Third party
import numpy as np
from tqdm import tqdm


class SweepSpec:
    """One-parameter scan of a family's energy.

    :param family: Registered family name.
    :param energy: ``"mobius"`` or ``"md"``.
    :param param: Name of the swept parameter. Angles are radians here.
    :param lo: First grid value.
    :param hi: Last grid value.
    :param steps: Number of evenly spaced grid values, at least 2.
    :param fixed: Values for other parameters; the rest take family defaults.
    :param options: Family options such as ``n_sides`` or ``size``.
    :param n_vertices: Vertices per component, defaulting to the family's.
    """

    def __init__(
        self,
        family: str,
        energy: str,
        param: str,
        lo: float,
        hi: float,
        steps: int,
        fixed: Optional[Dict[str, float]] = None,
        options: Optional[Dict[str, Any]] = None,
        n_vertices: Optional[int] = None,
    ) -> None:
        self.family: str = family
        self.energy: str = energy
        self.param: str = param
        self.lo: float = float(lo)
        self.hi: float = float(hi)
        self.steps: int = steps
        self.fixed: Dict[str, float] = dict(fixed or {})
        self.options: Dict[str, Any] = dict(options or {})
        self.n_vertices: Optional[int] = n_vertices
        SweepSpec.check_validity(self)

    def load_family(self) -> FamilySpec:
        return load_family(self.family, **self.options)

    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)

    def create_copy(self, args: Dict[str, Any] = {}) -> SweepSpec:
        new_instance: SweepSpec = copy.deepcopy(self)
        for arg in args:
            if hasattr(new_instance, arg):
                setattr(new_instance, arg, args[arg])
        SweepSpec.check_validity(new_instance)
        return new_instance

    def check_validity(self) -> None:
        load_energy(self.energy)
        spec = self.load_family()
        if self.steps < 2:
            raise RuntimeError(
                f"A sweep needs at least 2 steps. Currently set to {self.steps}."
            )
        if not self.lo < self.hi:
            raise RuntimeError(
                f"Sweep range should satisfy lo < hi. "
                f"Currently set to ({self.lo}, {self.hi})."
            )
        lo_bound, hi_bound = spec.bounds[spec.index(self.param)]
        if (lo_bound is not None and self.lo <= lo_bound) or (
            hi_bound is not None and self.hi >= hi_bound
        ):
            raise RuntimeError(
                f"Sweep range ({self.lo}, {self.hi}) leaves the bounds "
                f"({lo_bound}, {hi_bound}) of {self.param}."
            )
        if self.param in self.fixed:
            raise RuntimeError(f"{self.param} is both swept and fixed.")
        for name in self.fixed:
            spec.index(name)


def sweep_rows(spec: SweepSpec, progress: bool = True) -> List[Dict[str, float]]:
    """Evaluates the energy at every grid point, in grid order.

    Points where the link cannot be built, diverges, or changes topology get
    ``energy = inf`` and no component columns.
    """
    family = spec.load_family()
    energy_fn = load_energy(spec.energy)
    index = family.index(spec.param)
    base = full_params(family, [], spec.fixed)
    scale = math.degrees(1.0) if spec.param in family.angle_params else 1.0

    rows = []
    for value in tqdm(spec.grid(), desc=spec.param, disable=not progress):
        params = base.copy()
        params[index] = value
        row: Dict[str, float] = {"param": float(value) * scale}
        try:
            link = family.build(params, spec.n_vertices, validate=True)
            row.update(energy_fn(link).to_row())
        except RuntimeError:
            row["energy"] = math.inf
        rows.append(row)
    return rows


def write_rows(rows: List[Dict[str, float]], out: TextIO) -> None:
    """CSV with a ``param,energy`` header followed by the component columns
    of the first complete row."""
    fieldnames = ["param", "energy"]
    for row in rows:
        extra = [key for key in row if key not in fieldnames]
        if extra:
            fieldnames += extra
            break
    writer = csv.DictWriter(out, fieldnames, restval="inf", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: repr(float(v)) for k, v in row.items()})


def run_sweep(
    spec: SweepSpec,
    out: Union[str, os.PathLike, TextIO],
    progress: bool = True,
) -> List[Dict[str, float]]:
    """Runs ``spec`` and writes the CSV to a path or open text stream.
    Angle parameters are reported in degrees."""
    rows = sweep_rows(spec, progress)
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", newline="") as f:
            write_rows(rows, f)
    else:
        write_rows(rows, out)
    return rows

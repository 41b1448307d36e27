from .exceptions import DivergenceError, ResolutionError, TopologyError
from .geometry import Link, PolyCurve, load_link, save_link
from .energy import EnergyReport, md_energy, mobius_total
from .families import FamilySpec
from .optimize import MinimizeResult, OptimizerConfig, minimize_family
from .utils.loaders import load_energy, load_experiment, load_family

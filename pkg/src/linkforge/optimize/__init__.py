from .bounds import BoundsTransform
from .config import OptimizerConfig
from .golden import golden_section, max_golden_evals
from .minimize import full_params, minimize_family, topology_fingerprint
from .nelder_mead import nelder_mead
from .result import MinimizeResult

from .bounds import (
    diao_crossover,
    established_bound,
    improved_ropelength_bound,
    improved_ropelength_prefactor,
    ropelength_lower_bound,
    tambourine_bound,
    tambourine_crossings,
    tambourine_energy_per_crossing,
)
from .chains import LayerScaling, chain_width, layer_scaling
from .constants import (
    ESTABLISHED_PREFACTOR,
    MD_LINK_MIN,
    MOBIUS_LINK_MIN,
    ROPELENGTH_DENOMINATOR,
    ROPELENGTH_DENOMINATOR_LARGE,
    TAMBOURINE_PER_CROSSING,
)
from .efficiency import EfficiencyReport, efficiency, energy_per_component

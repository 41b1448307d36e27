from .loaders import load_energy, load_experiment, load_family
from .threads import configure_threads

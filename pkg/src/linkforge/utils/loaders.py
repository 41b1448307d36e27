# Standard library
from typing import Callable

# Local application
from ..energy import ENERGY_REGISTRY, EnergyReport
from ..families import FAMILY_REGISTRY, FamilySpec
from ..geometry import Link


def load_family(name: str, **options) -> FamilySpec:
    """Looks up a registered family and binds its options (integers such as
    ``n_sides`` or ``size``, and string choices such as ``shape``).

    .. highlight:: python
    .. code-block:: python

        spec = load_family("chainmail-japanese", size=4)
        link = spec.build(spec.defaults)
    """
    if name not in FAMILY_REGISTRY:
        raise NotImplementedError(
            f"{name} is not an implemented link family. Run `linkforge families` "
            f"to list the available ones: {', '.join(sorted(FAMILY_REGISTRY))}."
        )
    try:
        return FAMILY_REGISTRY[name](**options)
    except TypeError as err:
        raise TypeError(f"Bad options {options} for family {name}: {err}") from err


def load_energy(name: str) -> Callable[[Link], EnergyReport]:
    if name not in ENERGY_REGISTRY:
        raise NotImplementedError(
            f"{name} is not an implemented energy. Choose from "
            f"{', '.join(sorted(ENERGY_REGISTRY))}."
        )
    return ENERGY_REGISTRY[name]


def load_experiment(name: str):
    from ..cli.experiments import EXPERIMENT_REGISTRY

    if name not in EXPERIMENT_REGISTRY:
        raise NotImplementedError(
            f"{name} is not an implemented experiment. Run `linkforge reproduce "
            f"--list` to see the available ones."
        )
    return EXPERIMENT_REGISTRY[name]

# Standard library
import math

# Local application
from linkforge.families import FAMILY_REGISTRY
from linkforge.utils import load_family

# Third party
import pytest


@pytest.mark.parametrize("name", sorted(FAMILY_REGISTRY))
def test_defaults_build(name):
    spec = load_family(name)
    link = spec.build(spec.defaults, validate=True)
    assert link.n_components >= 1
    assert spec.schema()["name"] == name


def test_unknown_family():
    with pytest.raises(NotImplementedError, match="not an implemented link family"):
        load_family("foobar")


def test_bad_option():
    with pytest.raises(TypeError, match="Bad options"):
        load_family("hopf-circles", n_sides=5)


class TestFamilySpec:
    spec = load_family("hopf-circles")

    def test_wrong_count(self):
        with pytest.raises(RuntimeError) as exc_info:
            self.spec.check_params([1.0])
        assert str(exc_info.value) == (
            "hopf-circles takes 2 parameters (delta, alpha). Got 1."
        )

    def test_out_of_bounds(self):
        with pytest.raises(RuntimeError) as exc_info:
            self.spec.check_params([-1.0, 1.0])
        assert str(exc_info.value) == (
            "delta should lie in (0.0, None). Currently set to -1.0."
        )

    def test_not_finite(self):
        with pytest.raises(RuntimeError, match="finite"):
            self.spec.check_params([math.nan, 1.0])

    def test_index(self):
        assert self.spec.index("alpha") == 1
        with pytest.raises(RuntimeError, match="not a parameter"):
            self.spec.index("beta")

    def test_schema_units(self):
        schema = load_family("link633").schema()
        units = {p["name"]: p["unit"] for p in schema["params"]}
        assert units == {"d": None, "incline": "deg", "r_small": None}

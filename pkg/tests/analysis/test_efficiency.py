# Standard library
import math

# Local application
from linkforge.analysis import efficiency, energy_per_component
from linkforge.energy import EnergyReport, mobius_total
from linkforge.families import family_chain_congruent, family_hopf_circles
from linkforge.geometry import Link, make_circle

# Third party
import pytest


class TestEfficiency:
    def test_minimal_hopf(self):
        link = family_hopf_circles(1.0, math.sqrt(2.0), n=360)
        result = efficiency(link)
        assert result.n_linkages == 1
        assert result.ratio == pytest.approx(1.0, abs=1e-3)
        assert result.total_minimum == pytest.approx(8 + 4 * math.pi**2)
        assert abs(result.excess) < 5e-3
        assert result.to_dict()["energy_kind"] == "mobius"

    def test_precomputed_report(self):
        link = family_chain_congruent(3, 1.58, n=120)
        report = mobius_total(link)
        result = efficiency(link, report=report)
        assert result.n_linkages == 2
        assert result.total == report.total
        assert result.ratio > 1.0

    def test_explicit_pairs(self):
        link = family_chain_congruent(3, 1.58, n=120)
        assert efficiency(link, [(0, 1)]).n_linkages == 1

    def test_no_linkages(self):
        a = make_circle(1.0, n=60)
        b = make_circle(1.0, (5.0, 0.0, 0.0), n=60)
        with pytest.raises(RuntimeError) as exc_info:
            efficiency(Link((a, b)))
        assert str(exc_info.value) == (
            "Efficiency is undefined for a link without linkages. "
            "Pass the linked component pairs explicitly."
        )

    def test_unknown_energy(self):
        link = family_hopf_circles(1.0, math.sqrt(2.0), n=60)
        with pytest.raises(NotImplementedError):
            efficiency(link, energy_kind="tangent-point")


def test_energy_per_component():
    report = EnergyReport("md", [4.0, 5.0, 6.0], {(0, 1): 80.0, (1, 2): 90.0}, [4] * 3)
    assert energy_per_component(report) == [44.0, 90.0, 51.0]
    assert sum(energy_per_component(report)) == pytest.approx(report.total)

# Local application
from linkforge.energy import EnergyReport

# Third party
import pytest


class TestEnergyReport:
    report = EnergyReport("md", [4.0, 5.0], {(0, 1): 80.0}, [4, 6])

    def test_totals(self):
        assert self.report.total == 89.0
        assert self.report.self_total == 9.0
        assert self.report.cross_total == 80.0
        assert self.report.n_components == 2

    def test_to_dict(self):
        assert self.report.to_dict() == {
            "kind": "md",
            "self": [4.0, 5.0],
            "cross": {"0-1": 80.0},
            "total": 89.0,
            "n_vertices": [4, 6],
        }

    def test_to_row(self):
        assert self.report.to_row("md_") == {
            "md_energy": 89.0,
            "md_self_0": 4.0,
            "md_self_1": 5.0,
            "md_cross_0_1": 80.0,
        }

    def test_total_not_settable(self):
        with pytest.raises(TypeError):
            EnergyReport("md", [1.0], {}, [4], total=2.0)

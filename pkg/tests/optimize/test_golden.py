# Standard library
import math

# Local application
from linkforge.optimize import golden_section, max_golden_evals

# Third party
import pytest


def parabola(x):
    return (x - 0.3) ** 2 + 1.0


def test_minimum():
    result = golden_section(parabola, -1.0, 2.0, tol=1e-8)
    assert result.params_opt[0] == pytest.approx(0.3, abs=1e-7)
    assert result.energy_opt == pytest.approx(1.0)
    assert result.converged


def test_evaluation_bound():
    result = golden_section(parabola, -1.0, 2.0, tol=1e-6)
    assert result.n_evals <= max_golden_evals(-1.0, 2.0, 1e-6)


def test_budget():
    result = golden_section(parabola, -1.0, 2.0, tol=1e-12, max_evals=10)
    assert result.n_evals == 10
    assert not result.converged
    assert result.message == "evaluation budget spent"


def test_infinite_regions():
    def walled(x):
        return math.inf if x < 0.5 else (x - 1.0) ** 2

    result = golden_section(walled, 0.0, 2.0, tol=1e-8)
    assert result.params_opt[0] == pytest.approx(1.0, abs=1e-7)


def test_history():
    result = golden_section(parabola, 0.0, 1.0, tol=1e-3, record_history=True)
    assert len(result.history) == result.n_evals


def test_bad_bracket():
    with pytest.raises(RuntimeError) as exc_info:
        golden_section(parabola, 1.0, 1.0)
    assert str(exc_info.value) == "Bracket should satisfy lo < hi. Got (1.0, 1.0)."

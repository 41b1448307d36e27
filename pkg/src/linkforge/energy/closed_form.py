"""Exact and quadrature-based energies of simple symmetric links."""

# Standard library
import math
import warnings

# Local application
from ..exceptions import DivergenceError
from .report import EnergyReport

# Third party
import numpy as np

HOPF_MIN = 4 * np.pi**2
BORROMEAN_CROSS_REFERENCE = 20 * np.pi**2

GL_NODES = 16
MAX_PANELS = 256


def _agm(a: float, b: float) -> float:
    for _ in range(64):
        if abs(a - b) <= 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def _elliptic_k_from_complement(kp: float) -> float:
    """``K`` given ``kp = sqrt(1 - m)``, the complementary modulus."""
    return math.pi / (2.0 * _agm(1.0, kp))


def elliptic_k(m: float) -> float:
    """Complete elliptic integral of the first kind,
    ``K(m) = int_0^{pi/2} dt / sqrt(1 - m sin^2 t)``, by the
    arithmetic-geometric mean. Negative ``m`` is allowed.

    :param m: Parameter, strictly below 1.
    :type m: float
    """
    if not m < 1.0:
        raise DivergenceError(f"K(m) diverges for m >= 1. Got m={m}.")
    return _elliptic_k_from_complement(math.sqrt(1.0 - m))


def hopf_cross_closed_form(delta: float) -> float:
    """Cross energy of two unit circles in perpendicular planes, each passing
    through the other's centre line, with centres ``delta`` apart.

    Minimal, and equal to ``4 pi^2``, at ``delta = sqrt(2)``.
    """
    if not 0.0 < delta < 2.0:
        raise RuntimeError(
            f"Separation should be in (0, 2) for linked unit circles. "
            f"Currently set to {delta}."
        )
    x = delta * delta
    # sqrt(1 - m) with m = -8 (x - 2) / (x - 4)^2 simplifies to x / (4 - x)
    kp = x / (4.0 - x)
    return 16.0 * math.pi / (4.0 - x) * _elliptic_k_from_complement(kp)


def hopf_cross_quadratic(delta: float) -> float:
    """Quadratic expansion of :func:`hopf_cross_closed_form` about
    ``sqrt(2)``."""
    return HOPF_MIN + 2 * np.pi**2 * (delta - math.sqrt(2.0)) ** 2


def coplanar_circles_cross(separation: float) -> float:
    """Cross energy ``8 pi^2 / (R sqrt(R^2 - 4))`` of two unit circles in one
    plane with centres ``R`` apart."""
    if not separation > 2.0:
        raise DivergenceError(
            f"Coplanar unit circles overlap at separation {separation}."
        )
    R = separation
    return 8.0 * np.pi**2 / (R * math.sqrt(R * R - 4.0))


def circle_chain_energy(delta: float) -> float:
    """Total Möbius energy of three unit circles in a chain: one in the XY
    plane at the origin and two in the XZ plane centred at
    ``(+-delta, 0, 0)``."""
    if not 1.0 < delta < 2.0:
        raise RuntimeError(
            f"Spacing should be in (1, 2) for a linked chain of circles. "
            f"Currently set to {delta}."
        )
    return (
        12.0
        + 2.0 * hopf_cross_closed_form(delta)
        + coplanar_circles_cross(2.0 * delta)
    )


def _asymmetric_integrand(alpha, delta, theta, phi):
    denom = (
        (alpha * np.cos(theta) + delta - np.cos(phi)) ** 2
        + np.sin(phi) ** 2
        + alpha**2 * np.sin(theta) ** 2
    )
    return 2.0 * alpha / denom


def _panel_rule(panels: int):
    x, w = np.polynomial.legendre.leggauss(GL_NODES)
    width = 2 * np.pi / panels
    starts = width * np.arange(panels)
    nodes = (starts[:, None] + 0.5 * width * (x + 1.0)[None, :]).ravel()
    weights = np.tile(0.5 * width * w, panels)
    return nodes, weights


def _tensor_quadrature(alpha: float, delta: float, panels: int) -> float:
    nodes, weights = _panel_rule(panels)
    total = 0.0
    for start in range(0, len(nodes), 1024):
        theta = nodes[start : start + 1024, None]
        vals = _asymmetric_integrand(alpha, delta, theta, nodes[None, :])
        total += float(weights[start : start + 1024] @ vals @ weights)
    return total


def hopf_cross_asymmetric(alpha: float, delta: float, rtol: float = 1e-8) -> float:
    """Cross energy of a unit circle in the XY plane and a circle of radius
    ``alpha`` in the XZ plane centred at ``(delta, 0, 0)``.

    The double integral over both angles is evaluated with tensor-product
    Gauss-Legendre panels, doubling the panel count until the relative change
    drops below ``rtol``. The minimum over ``delta`` is ``4 pi^2``, reached
    at ``delta = sqrt(1 + alpha^2)``.
    """
    if not alpha > 0:
        raise RuntimeError(
            f"Radius ratio should be positive. Currently set to {alpha}."
        )
    inner, outer = abs(delta - alpha), delta + alpha
    if min(abs(inner - 1.0), abs(outer - 1.0)) <= 1e-12 * max(1.0, outer):
        raise DivergenceError(f"Circles intersect at alpha={alpha}, delta={delta}.")
    if not inner < 1.0 < outer:
        raise RuntimeError(
            f"Circles with alpha={alpha}, delta={delta} are not linked."
        )
    panels = 4
    previous = _tensor_quadrature(alpha, delta, panels)
    while panels < MAX_PANELS:
        panels *= 2
        current = _tensor_quadrature(alpha, delta, panels)
        if abs(current - previous) <= rtol * abs(current):
            return current
        previous = current
    warnings.warn(
        f"Quadrature for alpha={alpha}, delta={delta} did not reach rtol={rtol} "
        f"with {MAX_PANELS} panels."
    )
    return previous


def square_hopf_cross_formula(delta: float) -> float:
    """MD cross energy of two side-2 squares in the XY and XZ planes, centres
    ``delta`` apart along x."""
    if not 0.0 < delta < 2.0:
        raise RuntimeError(
            f"Separation should be in (0, 2) for linked squares. "
            f"Currently set to {delta}."
        )
    d = delta
    return 8.0 * (
        1.0 / (2.0 + d) ** 2
        + 1.0 / (2.0 - d) ** 2
        + 2.0 / d**2
        + 4.0
        + 2.0
        + 4.0 / (1.0 + d**2)
    )


def square_hopf_optimal_separation() -> float:
    """Separation minimising :func:`square_hopf_cross_formula`.

    Stationarity reduces to ``2x^5 - 10x^4 + 73x^3 - 48x^2 - 40x - 32 = 0``
    in ``x = delta^2``, which has a single root in ``(0, 4)``.
    """
    roots = np.roots([2.0, -10.0, 73.0, -48.0, -40.0, -32.0])
    real = roots[np.abs(roots.imag) < 1e-9].real
    x = float(real[(real > 0.0) & (real < 4.0)][0])
    return math.sqrt(x)


def square_chain_energy(delta: float) -> float:
    """Total MD energy of three side-2 squares in a chain: one in the XY plane
    at the origin and two in the XZ plane centred at ``(+-delta, 0, 0)``.

    Each outer square is Hopf linked to the middle one. The outer pair faces
    each other across the gap ``g = 2 delta - 2``: seven segment pairs at
    distance ``g``, six at ``g + 2``, one at ``g + 4`` and two at
    ``sqrt(g^2 + 4)``.
    """
    if not 1.0 < delta < 2.0:
        raise RuntimeError(
            f"Spacing should be in (1, 2) for a linked chain of squares. "
            f"Currently set to {delta}."
        )
    g = 2.0 * delta - 2.0
    outer = 8.0 * (
        7.0 / g**2 + 6.0 / (g + 2.0) ** 2 + 1.0 / (g + 4.0) ** 2 + 2.0 / (g**2 + 4.0)
    )
    return 12.0 + 2.0 * square_hopf_cross_formula(delta) + outer


def borromean_rect_energy(alpha: float) -> float:
    """Total MD energy of three mutually orthogonal ``1 x alpha`` rectangles
    forming Borromean rings, self energies included."""
    if not alpha > 1.0:
        raise RuntimeError(
            f"Rectangle aspect ratio should exceed 1. Currently set to {alpha}."
        )
    a = alpha
    return 6.0 * (
        17.0 * a**2
        + 16.0 * a / (a**2 + 1.0)
        + 16.0 / (2.0 * a**2 - 2.0 * a + 1.0)
        + 8.0 * a / (a - 1.0) ** 2
        + 8.0 * a / (a + 1.0) ** 2
        + 1.0 / a**2
    )


def borromean_ratio_to_20pi2(report: EnergyReport) -> float:
    """Cross energy of a three-component report relative to ``20 pi^2``."""
    if report.n_components != 3:
        raise RuntimeError(
            f"Borromean rings have three components. Got {report.n_components}."
        )
    return report.cross_total / BORROMEAN_CROSS_REFERENCE


def point_charge_cross(r: float, separation: float) -> float:
    """Far-field cross energy ``8 pi^2 r^2 / R^2`` of two circles of radius
    ``r`` whose centres are ``R`` apart."""
    if not 0 < r < separation:
        raise RuntimeError(
            f"Far-field estimate needs 0 < r < R. Got r={r}, R={separation}."
        )
    return 8.0 * np.pi**2 * r**2 / separation**2

"""Constant-curvature shape of the inflated actuator.

The contracting wavy rim and the flat inextensible layer sit an
effective section height H apart; a length difference dL between them
under constant curvature bends the backbone through phi = dL / H.  The
backbone itself is a circular arc of fixed length, starting at the
origin tangent to +x and curving toward +y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .pattern import PatternSpec

_SMALL_PHI = 1e-6


@dataclass(frozen=True)
class BackbonePose:
    """Arc geometry at one bend angle; arc_radius_mm is inf when straight."""

    bend_rad: float
    arc_radius_mm: float
    tip_position_mm: tuple[float, float]
    tip_tangent: tuple[float, float]
    polyline_mm: np.ndarray

    @property
    def straight(self) -> bool:
        return self.bend_rad == 0.0


def bend_angle(contraction_total_mm: float, section_height_mm: float) -> float:
    """Bend angle [rad] from total rim contraction [mm] and height H [mm]."""
    if not (math.isfinite(section_height_mm) and section_height_mm > 0):
        raise ValidationError("section_height_mm", "must be finite and positive")
    if not math.isfinite(contraction_total_mm) or contraction_total_mm < 0:
        raise ValidationError("contraction_total_mm", "must be non-negative")
    return contraction_total_mm / section_height_mm


def _arc_xy(length: float, phi: float, s: np.ndarray):
    """Points at arclength s along an arc of total length `length`, angle phi."""
    if phi < _SMALL_PHI:
        # series in the turned angle psi = s*phi/L avoids 0/0 at straight
        psi = s * phi / length
        x = s * (1.0 - psi * psi / 6.0)
        y = s * psi * 0.5 * (1.0 - psi * psi / 12.0)
        return x, y
    r = length / phi
    psi = s * phi / length
    return r * np.sin(psi), r * (1.0 - np.cos(psi))


def lateral_deflection(total_length_mm: float, bend_rad: float,
                       arclength_mm) -> np.ndarray | float:
    """Sideways displacement of the backbone point at a given arclength."""
    s = np.asarray(arclength_mm, dtype=float)
    _, y = _arc_xy(total_length_mm, float(bend_rad), s)
    return float(y) if np.isscalar(arclength_mm) else y


def backbone(spec: PatternSpec, bend_rad: float, n_points: int = 100) -> BackbonePose:
    """Backbone polyline, tip position and tip tangent for one bend angle."""
    if n_points < 2:
        raise ValidationError("n_points", "must be at least 2")
    phi = float(bend_rad)
    if not math.isfinite(phi) or phi < 0:
        raise ValidationError("bend_rad", "must be finite and non-negative")
    L = spec.total_length_mm
    s = np.linspace(0.0, L, n_points)
    x, y = _arc_xy(L, phi, s)
    tip = (float(x[-1]), float(y[-1]))
    tangent = (math.cos(phi), math.sin(phi))
    radius = math.inf if phi == 0.0 else L / phi
    return BackbonePose(phi, radius, tip, tangent, np.column_stack([x, y]))

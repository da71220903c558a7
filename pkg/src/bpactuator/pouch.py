"""Mechanics of a single sinusoidal wave treated as an inflating pouch.

One wave of the sleeve is idealized as an inextensible film of flat
length ``b`` bulging into a circular arc of half-angle theta; the flat
face stays straight.  Chord shortening of the arc is what contracts the
wavy side of the actuator.  All quantities have closed forms in theta,
which is the single state variable per wave:

* radius            R        = b / (2*theta)
* chord             b'       = b * sin(theta)/theta
* contraction       eps      = 1 - sin(theta)/theta
* bulge height      h        = b * (1 - cos(theta)) / (2*theta)
* cross-section     A        = b^2 * (theta - sin*cos) / (4*theta^2)

theta is capped at pi/2 (a half circle; the stitched rim cannot
accommodate more bulge) and further by the sleeve amplitude: the largest
theta whose bulge height fits under the wave bump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend as K
from .errors import DomainError, ValidationError

HALF_PI = math.pi / 2
_TOL = 1e-12


@dataclass(frozen=True)
class PouchSegment:
    """Geometry of one wave: flat length [mm], depth across the actuator
    [mm], and the bulge-height cap set by the sleeve amplitude [mm]."""

    flat_length_mm: float
    depth_mm: float
    amplitude_cap_mm: float

    def __post_init__(self):
        for name in ("flat_length_mm", "depth_mm", "amplitude_cap_mm"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise ValidationError(name, f"must be finite and positive, got {value}")


def _check_theta(theta: float, lo: float = 0.0, hi: float = HALF_PI) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or theta < lo - _TOL or theta > hi + _TOL:
        raise DomainError(f"theta must lie in [{lo:g}, {hi:g}], got {theta!r}")
    return min(max(theta, 0.0), HALF_PI)


def contraction_ratio(theta: float) -> float:
    """Fractional chord shortening eps(theta) of one wave; eps(0) = 0."""
    return K.contraction(_check_theta(theta))


def contraction_ratio_slope(theta: float) -> float:
    """d eps / d theta, the series-guarded analytic derivative."""
    return K.contraction_slope(_check_theta(theta))


def bulge_height(segment: PouchSegment, theta: float) -> float:
    """Height of the bulged arc above the flat face [mm]; h(0) = 0."""
    return segment.flat_length_mm * K.bulge_frac(_check_theta(theta))


def theta_max(segment: PouchSegment) -> float:
    """Largest admissible theta: bulge height <= amplitude cap, <= pi/2."""
    return K.theta_cap(segment.flat_length_mm, segment.amplitude_cap_mm)


def segment_area(segment: PouchSegment, theta: float) -> float:
    """Cross-section area of the bulge [mm^2]; gas volume is A * depth."""
    theta = _check_theta(theta, hi=theta_max(segment))
    b = segment.flat_length_mm
    return b * b * K.area_frac(theta)


def segment_area_derivative(segment: PouchSegment, theta: float) -> float:
    """Analytic dA/d theta [mm^2/rad].

    Positive on the open interval (0, pi/2); it vanishes exactly at
    pi/2, where the half circle maximizes the enclosed area for the
    fixed film length.
    """
    theta = float(theta)
    if theta <= 0.0:
        raise DomainError(f"theta must be positive, got {theta!r}")
    theta = _check_theta(theta, hi=theta_max(segment))
    b = segment.flat_length_mm
    return b * b * K.area_frac_slope(theta)

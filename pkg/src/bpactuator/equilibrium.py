"""Quasi-static inflation equilibrium of the whole actuator.

Every wave shares one bulge angle theta.  Pressure above the onset does
work filling the wave cross-sections while the balloon resists like a
linear torsional spring per wave, k(b) = base + per_wavelength/b.  The
equilibrium theta balances the two:

    (P - onset)+ * 1e-3 * w * b^2 * A'(theta) = k(b) * theta

with the left side in kPa*mm^3 converted to N*mm.  The residual is
strictly decreasing in theta, so bisection on [0, theta_max] is exact;
a non-negative residual at theta_max means the design is saturated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend as K
from .errors import ValidationError
from .pattern import PatternSpec, wave_count
from .units import KPA_MM3_TO_NMM

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class BalloonModel:
    """Phenomenological balloon resistance.

    onset_pressure_kpa: pressure below which the balloon only fills the
    main body and no wave buckles.  The spring constant per wave is
    base_stiffness + wavelength_stiffness / wavelength [N*mm/rad]; the
    1/b term lets shorter waves resist harder, which is what delays
    their saturation.  Defaults are placeholders meant to be replaced by
    calibration.
    """

    onset_pressure_kpa: float = 20.0
    base_stiffness: float = 50.0
    wavelength_stiffness: float = 3000.0

    def __post_init__(self):
        for name in ("onset_pressure_kpa", "base_stiffness", "wavelength_stiffness"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)) or value < 0:
                raise ValidationError(name, f"must be finite and non-negative, got {value!r}")
        if self.base_stiffness + self.wavelength_stiffness <= 0:
            raise ValidationError("base_stiffness",
                                  "base and wavelength stiffness cannot both be zero")

    def spring_constant(self, wavelength_mm: float) -> float:
        """k(b) [N*mm/rad]."""
        return self.base_stiffness + self.wavelength_stiffness / wavelength_mm


@dataclass(frozen=True)
class ActuatorState:
    """Equilibrium solution at one pressure."""

    pressure_kpa: float
    theta_rad: float
    fill_fraction: float
    contraction_mm: float
    bend_rad: float
    pneumatic_energy_mj: float
    elastic_energy_mj: float


def _drive(spec: PatternSpec, balloon: BalloonModel, pressure_kpa: float) -> float:
    """Pneumatic moment scale (P-onset)+ * 1e-3 * width [N/mm]."""
    excess = max(pressure_kpa - balloon.onset_pressure_kpa, 0.0)
    return excess * KPA_MM3_TO_NMM * spec.width_mm


def theta_cap(spec: PatternSpec) -> float:
    """Per-wave angle cap for this design (amplitude-limited, <= pi/2)."""
    return K.theta_cap(spec.wavelength_mm, spec.amplitude_mm)


def solve_theta(spec: PatternSpec, balloon: BalloonModel, pressure_kpa: float) -> float:
    """Equilibrium bulge angle [rad] at one pressure, clamped to [0, theta_max]."""
    if not math.isfinite(pressure_kpa) or pressure_kpa < 0:
        raise ValidationError("pressure_kpa", f"must be finite and non-negative, got {pressure_kpa!r}")
    return K.equilibrium_theta(_drive(spec, balloon, pressure_kpa),
                               balloon.spring_constant(spec.wavelength_mm),
                               spec.wavelength_mm, theta_cap(spec))


def saturation_pressure(spec: PatternSpec, balloon: BalloonModel) -> float:
    """Pressure [kPa] at which theta reaches its cap.

    Closed form from the equilibrium balance at theta_max.  When the
    amplitude never binds (theta_max = pi/2) the pneumatic moment
    vanishes at the cap and saturation is unreachable: returns inf.
    """
    cap = theta_cap(spec)
    slope = spec.wavelength_mm ** 2 * K.area_frac_slope(cap)
    if cap >= HALF_PI - 1e-12 or slope <= 0.0:
        return math.inf
    spring = balloon.spring_constant(spec.wavelength_mm)
    return (balloon.onset_pressure_kpa
            + spring * cap / (KPA_MM3_TO_NMM * spec.width_mm * slope))


def actuator_state(spec: PatternSpec, balloon: BalloonModel,
                   section_height_mm: float, pressure_kpa: float) -> ActuatorState:
    """Full equilibrium bookkeeping at one pressure."""
    if not (math.isfinite(section_height_mm) and section_height_mm > 0):
        raise ValidationError("section_height_mm", "must be finite and positive")
    theta = solve_theta(spec, balloon, pressure_kpa)
    cap = theta_cap(spec)
    n = wave_count(spec)
    b = spec.wavelength_mm
    contraction = n * b * K.contraction(theta)
    bend = contraction / section_height_mm
    pneumatic = (pressure_kpa * spec.width_mm * n
                 * b * b * K.area_frac(theta) * KPA_MM3_TO_NMM)
    elastic = 0.5 * balloon.spring_constant(b) * n * theta * theta
    return ActuatorState(pressure_kpa, theta, theta / cap, contraction,
                         bend, pneumatic, elastic)


def pressure_sweep(spec: PatternSpec, balloon: BalloonModel,
                   section_height_mm: float, pressures_kpa) -> list[ActuatorState]:
    """One state per pressure, order preserved."""
    pressures = [float(p) for p in pressures_kpa]
    for p in pressures:
        if not math.isfinite(p) or p < 0:
            raise ValidationError("pressures_kpa", f"must be finite and non-negative, got {p!r}")
    return [actuator_state(spec, balloon, section_height_mm, p) for p in pressures]

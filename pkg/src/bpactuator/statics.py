"""Load-bearing behavior: potential landscape, tip push force, stiffness.

A loadcell pushed a small distance against the tip is modeled as a pure
base-rotation constraint: the bend angle is forced back from its free
equilibrium by push / arm, with the moment arm equal to the actuator
length.  The reaction is the virtual-work force -dPi/dphi / arm at the
constrained angle, evaluated by central differences of the total
potential (step 1e-5 rad; second derivative with step 1e-4 rad).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend as K
from .equilibrium import BalloonModel, _drive, theta_cap
from .errors import DomainError, ValidationError
from .pattern import MaterialModel, PatternSpec, skin_mass, wave_count
from .units import NEWTON_PER_GRAM

FD_STEP = 1e-5        # first derivative of the potential [rad]
FD_STEP2 = 1e-4       # second derivative [rad]


@dataclass(frozen=True)
class TipLoadResult:
    pressure_kpa: float
    free_bend_rad: float
    push_mm: float
    force_n: float
    base_stiffness_nmm: float


def max_bend(spec: PatternSpec, section_height_mm: float) -> float:
    """Bend angle at full wave filling [rad]."""
    cap = theta_cap(spec)
    return (wave_count(spec) * spec.wavelength_mm
            * K.contraction(cap) / section_height_mm)


def total_potential(spec: PatternSpec, balloon: BalloonModel,
                    section_height_mm: float, pressure_kpa: float,
                    phi: float) -> float:
    """Total potential Pi(phi) [mJ]: elastic energy minus pneumatic work."""
    phi_hi = max_bend(spec, section_height_mm)
    if not math.isfinite(phi) or phi < -1e-12 or phi > phi_hi + 1e-9:
        raise DomainError(f"phi must lie in [0, {phi_hi:.6g}], got {phi!r}")
    return K.bend_potential(max(phi, 0.0),
                            _drive(spec, balloon, pressure_kpa),
                            balloon.spring_constant(spec.wavelength_mm),
                            spec.wavelength_mm, float(wave_count(spec)),
                            section_height_mm, theta_cap(spec))


def tip_push_force(spec: PatternSpec, balloon: BalloonModel,
                   section_height_mm: float, pressure_kpa: float,
                   push_mm: float) -> TipLoadResult:
    """Reaction force for a tip pushed back by push_mm at one pressure."""
    if not math.isfinite(push_mm) or push_mm < 0:
        raise ValidationError("push_mm", f"must be finite and non-negative, got {push_mm!r}")
    if not math.isfinite(pressure_kpa) or pressure_kpa < 0:
        raise ValidationError("pressure_kpa", "must be finite and non-negative")
    arm = spec.total_length_mm
    force, phi_free, phi_c = K.tip_force(
        _drive(spec, balloon, pressure_kpa),
        balloon.spring_constant(spec.wavelength_mm),
        spec.wavelength_mm, float(wave_count(spec)),
        section_height_mm, theta_cap(spec), arm, push_mm)
    stiffness = _base_stiffness(spec, balloon, section_height_mm,
                                pressure_kpa, phi_c)
    return TipLoadResult(pressure_kpa, phi_free, push_mm, force, stiffness)


def _base_stiffness(spec, balloon, section_height_mm, pressure_kpa, phi_c):
    """d2 Pi / d phi2 at the constrained angle, stencil kept in-domain."""
    phi_hi = max_bend(spec, section_height_mm)
    lo = min(max(phi_c - FD_STEP2, 0.0), max(phi_hi - 2 * FD_STEP2, 0.0))
    pts = (lo, lo + FD_STEP2, lo + 2 * FD_STEP2)
    f = [total_potential(spec, balloon, section_height_mm, pressure_kpa, p)
         for p in pts]
    return (f[0] - 2.0 * f[1] + f[2]) / (FD_STEP2 * FD_STEP2)


def force_to_weight(spec: PatternSpec, mat: MaterialModel, force_n: float) -> float:
    """Tip force divided by the actuator's own weight (0.0098 N/g)."""
    if not math.isfinite(force_n) or force_n < 0:
        raise ValidationError("force_n", "must be finite and non-negative")
    return force_n / (skin_mass(spec, mat) * NEWTON_PER_GRAM)

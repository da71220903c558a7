"""Three-finger gripper built from identical actuators.

Each finger is analyzed in the plane it shares with the grip axis:
base at palm_radius from the axis, base tangent parallel to the axis,
bending inward.  A centered cylindrical object is grasped when the
constant-curvature backbone reaches the cylinder surface, i.e. when the
lateral deflection reaches palm_radius - object_radius.  The squeeze
force is the same virtual-work reaction as a tip push, evaluated at the
bend angle where the closing finger first touches the object, with the
contact arclength as moment arm.  Lifting is friction-only:
mu * (total normal force) against the object's weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend as K
from .equilibrium import BalloonModel, solve_theta
from .errors import ValidationError
from .kinematics import lateral_deflection
from .pattern import MaterialModel, PatternSpec, skin_mass, wave_count
from .statics import total_potential
from .units import NEWTON_PER_GRAM

_FD = 1e-5


@dataclass(frozen=True)
class GraspScenario:
    finger_spec: PatternSpec
    palm_radius_mm: float
    object_radius_mm: float
    object_mass_g: float
    friction_mu: float = 0.8
    pressure_kpa: float = 50.0
    finger_count: int = 3

    def __post_init__(self):
        if self.finger_count < 2:
            raise ValidationError("finger_count", "needs at least 2 fingers")
        if not self.palm_radius_mm > 0:
            raise ValidationError("palm_radius_mm", "must be positive")
        if not self.object_radius_mm > 0:
            raise ValidationError("object_radius_mm", "must be positive")
        if self.object_radius_mm >= self.palm_radius_mm:
            raise ValidationError("object_radius_mm",
                                  "object must fit between the finger bases")
        if self.object_mass_g < 0:
            raise ValidationError("object_mass_g", "must be non-negative")
        if not (0.0 < self.friction_mu <= 2.0):
            raise ValidationError("friction_mu", "must lie in (0, 2]")
        if self.pressure_kpa < 0:
            raise ValidationError("pressure_kpa", "must be non-negative")


@dataclass(frozen=True)
class GraspResult:
    contact_arclength_mm: tuple[float, ...]
    normal_force_n: tuple[float, ...]
    max_payload_g: float
    liftable: bool
    mode: str  # "friction" or "none"


def _free_bend(scenario: GraspScenario, balloon: BalloonModel,
               section_height_mm: float) -> float:
    spec = scenario.finger_spec
    theta = solve_theta(spec, balloon, scenario.pressure_kpa)
    return (wave_count(spec) * spec.wavelength_mm
            * K.contraction(theta) / section_height_mm)


def _touch_angle(depth_mm: float, total_length_mm: float, phi_free: float):
    """Smallest bend angle at which the tip deflection reaches depth."""
    if lateral_deflection(total_length_mm, phi_free, total_length_mm) < depth_mm:
        return None
    lo, hi = 0.0, phi_free
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if lateral_deflection(total_length_mm, mid, total_length_mm) < depth_mm:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_contact(scenario: GraspScenario, balloon: BalloonModel,
                 section_height_mm: float) -> tuple[float, ...] | None:
    """Backbone arclength of first contact per finger, or None.

    The free (unconstrained) backbone at the scenario pressure is
    intersected with the cylinder surface; the smallest crossing
    arclength is reported for every finger (they are identical by
    symmetry).
    """
    spec = scenario.finger_spec
    depth = scenario.palm_radius_mm - scenario.object_radius_mm
    phi_free = _free_bend(scenario, balloon, section_height_mm)
    L = spec.total_length_mm
    if phi_free <= 0.0 or lateral_deflection(L, phi_free, L) < depth:
        return None
    # invert y(s) = R(1 - cos(s*phi/L)) = depth for the smallest s
    r = L / phi_free
    psi = math.acos(max(-1.0, min(1.0, 1.0 - depth / r)))
    s_star = psi * L / phi_free
    return (s_star,) * scenario.finger_count


def squeeze_force(scenario: GraspScenario, balloon: BalloonModel,
                  section_height_mm: float, contact_s_mm: float) -> float:
    """Per-finger normal force [N] with the finger stopped at the object."""
    if not (0.0 < contact_s_mm <= scenario.finger_spec.total_length_mm):
        raise ValidationError("contact_s_mm", "must lie on the backbone")
    spec = scenario.finger_spec
    depth = scenario.palm_radius_mm - scenario.object_radius_mm
    phi_free = _free_bend(scenario, balloon, section_height_mm)
    phi_c = _touch_angle(depth, spec.total_length_mm, phi_free)
    if phi_c is None:
        return 0.0
    lo = max(phi_c - 0.5 * _FD, 0.0)
    drop = (total_potential(spec, balloon, section_height_mm,
                            scenario.pressure_kpa, lo)
            - total_potential(spec, balloon, section_height_mm,
                              scenario.pressure_kpa, lo + _FD))
    return max(drop / _FD / contact_s_mm, 0.0)


def max_payload(scenario: GraspScenario, balloon: BalloonModel,
                section_height_mm: float) -> GraspResult:
    """Friction-lift verdict for the scenario."""
    contacts = find_contact(scenario, balloon, section_height_mm)
    if contacts is None:
        return GraspResult((), (), 0.0, scenario.object_mass_g <= 0.0, "none")
    force = squeeze_force(scenario, balloon, section_height_mm, contacts[0])
    forces = (force,) * scenario.finger_count
    payload = scenario.friction_mu * sum(forces) / NEWTON_PER_GRAM
    return GraspResult(contacts, forces, payload,
                       payload >= scenario.object_mass_g, "friction")


def payload_ratio(scenario: GraspScenario, balloon: BalloonModel,
                  section_height_mm: float, mat: MaterialModel) -> float:
    """Max payload over the summed mass of the fingers doing the lifting."""
    result = max_payload(scenario, balloon, section_height_mm)
    own_mass = scenario.finger_count * skin_mass(scenario.finger_spec, mat)
    return result.max_payload_g / own_mass

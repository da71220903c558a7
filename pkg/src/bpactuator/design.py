"""Design-space sweep over wavelength (and optionally amplitude).

The design grid is tiny, so every point is evaluated exhaustively; rows
are reported in canonical order regardless of the input grid order, and
ties at the maximum break toward the smaller wavelength (then smaller
amplitude), matching the preference for short-wavelength designs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .equilibrium import BalloonModel, actuator_state
from .errors import ValidationError
from .gripper import GraspScenario, payload_ratio
from .pattern import MaterialModel, PatternSpec
from .statics import tip_push_force
from .units import DEG_PER_RAD

PUSH_MM = 2.0


@dataclass(frozen=True)
class DesignQuery:
    objective: str | Callable
    pressure_kpa: float
    wavelength_grid_mm: tuple[float, ...]
    template: PatternSpec
    balloon: BalloonModel
    section_height_mm: float
    material: MaterialModel
    amplitude_grid_mm: tuple[float, ...] | None = None
    grasp_template: GraspScenario | None = None

    def __post_init__(self):
        if not self.wavelength_grid_mm:
            raise ValidationError("wavelength_grid_mm", "grid cannot be empty")
        if self.amplitude_grid_mm is not None and not self.amplitude_grid_mm:
            raise ValidationError("amplitude_grid_mm", "grid cannot be empty")
        for g in list(self.wavelength_grid_mm) + list(self.amplitude_grid_mm or []):
            if not g > 0:
                raise ValidationError("grid", f"grid values must be positive, got {g!r}")
        if isinstance(self.objective, str) and self.objective not in OBJECTIVES:
            raise ValidationError("objective",
                                  f"unknown objective {self.objective!r}; "
                                  f"choose from {sorted(OBJECTIVES)}")


@dataclass(frozen=True)
class SweepRow:
    wavelength_mm: float
    amplitude_mm: float
    value: float | None
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    best: SweepRow | None


def _objective_bend(query: DesignQuery, spec: PatternSpec) -> float:
    state = actuator_state(spec, query.balloon, query.section_height_mm,
                           query.pressure_kpa)
    return state.bend_rad * DEG_PER_RAD


def _objective_tip_force(query: DesignQuery, spec: PatternSpec) -> float:
    return tip_push_force(spec, query.balloon, query.section_height_mm,
                          query.pressure_kpa, PUSH_MM).force_n


def _objective_payload_ratio(query: DesignQuery, spec: PatternSpec) -> float:
    if query.grasp_template is None:
        raise ValidationError("grasp_template",
                              "payload objective needs a grasp scenario")
    scenario = replace(query.grasp_template, finger_spec=spec,
                       pressure_kpa=query.pressure_kpa)
    return payload_ratio(scenario, query.balloon, query.section_height_mm,
                         query.material)


OBJECTIVES = {
    "max_bend_angle": _objective_bend,
    "max_tip_force": _objective_tip_force,
    "max_payload_ratio": _objective_payload_ratio,
}


def sweep(query: DesignQuery) -> SweepResult:
    """Evaluate the objective on every grid point; failures become rows."""
    fn = query.objective if callable(query.objective) else OBJECTIVES[query.objective]
    amplitudes = query.amplitude_grid_mm or (query.template.amplitude_mm,)
    points = sorted({(float(b), float(a))
                     for b in query.wavelength_grid_mm for a in amplitudes})
    rows = []
    for b, a in points:
        try:
            spec = replace(query.template, wavelength_mm=b, amplitude_mm=a)
            rows.append(SweepRow(b, a, float(fn(query, spec))))
        except (ValidationError, ValueError) as exc:
            rows.append(SweepRow(b, a, None, error=str(exc)))
    best = None
    for row in rows:  # canonical order makes the tie-break implicit
        if row.value is not None and (best is None or row.value > best.value):
            best = row
    return SweepResult(tuple(rows), best)

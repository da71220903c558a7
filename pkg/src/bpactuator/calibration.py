"""Fitting the model's free parameters to measured or anchor targets.

Four parameters are fitted: the effective section height H, the two
spring coefficients of the balloon resistance, and the onset pressure.
The residual is a weighted RMS of normalized errors (bend angles scaled
by 35 degrees, tip forces by 0.07 N, which puts the two experiment
families on equal footing) and is minimized by a deterministic
Nelder-Mead simplex in box-normalized coordinates; bounds are enforced
by clamping plus a quadratic penalty on the overshoot.
"""

from __future__ import annotations

import csv
import importlib.resources
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import minimize

from . import _backend as K
from .equilibrium import BalloonModel
from .errors import DatasetFormatError, ValidationError
from .pattern import PatternSpec, wave_count
from .units import DEG_PER_RAD, KPA_MM3_TO_NMM

ANGLE_NORM_DEG = 35.0
FORCE_NORM_N = 0.07

# (lower, upper) fit bounds per parameter.  The wavelength-dependent
# spring term keeps a small positive floor: tip-force data alone cannot
# identify its sign, and the floor (under 0.5% of a typical spring
# constant) preserves the declared 1/b resistance that delays shorter
# waves' saturation.
BOUNDS = {
    "section_height_mm": (5.0, 60.0),
    "base_stiffness": (0.0, 1e4),
    "wavelength_stiffness": (10.0, 1e6),
    "onset_pressure_kpa": (0.0, 40.0),
}
MAX_EVALUATIONS = 2000
SIMPLEX_TOL = 1e-6
_PENALTY = 10.0

CSV_HEADER = ["kind", "wavelength_mm", "pressure_kpa", "push_mm", "value", "weight"]


@dataclass(frozen=True)
class AngleSample:
    wavelength_mm: float
    pressure_kpa: float
    angle_deg: float
    weight: float = 1.0


@dataclass(frozen=True)
class ForceSample:
    wavelength_mm: float
    pressure_kpa: float
    push_mm: float
    force_n: float
    weight: float = 1.0


@dataclass(frozen=True)
class CalibrationDataset:
    angle_samples: tuple[AngleSample, ...]
    force_samples: tuple[ForceSample, ...]

    def __post_init__(self):
        if not self.angle_samples and not self.force_samples:
            raise ValidationError("samples", "dataset needs at least one sample")
        for s in list(self.angle_samples) + list(self.force_samples):
            if s.pressure_kpa < 0:
                raise ValidationError("pressure_kpa", "must be non-negative")
            if not (s.weight > 0 and math.isfinite(s.weight)):
                raise ValidationError("weight", "must be positive")


@dataclass(frozen=True)
class FittedParameters:
    section_height_mm: float = 20.0
    base_stiffness: float = 50.0
    wavelength_stiffness: float = 3000.0
    onset_pressure_kpa: float = 20.0
    residual_rms: float = math.nan
    iterations: int = 0

    def as_vector(self) -> np.ndarray:
        return np.array([self.section_height_mm, self.base_stiffness,
                         self.wavelength_stiffness, self.onset_pressure_kpa])

    def balloon(self) -> BalloonModel:
        return BalloonModel(self.onset_pressure_kpa, self.base_stiffness,
                            self.wavelength_stiffness)


def _row_arrays(samples, template: PatternSpec):
    b = np.array([s.wavelength_mm for s in samples], dtype=float)
    n = np.array([float(wave_count(replace(template, wavelength_mm=w)))
                  for w in b])
    p = np.array([s.pressure_kpa for s in samples], dtype=float)
    w = np.array([s.weight for s in samples], dtype=float)
    return b, n, p, w


def residual(params: FittedParameters, dataset: CalibrationDataset,
             template: PatternSpec | None = None) -> float:
    """Weighted RMS of normalized prediction errors; deterministic."""
    template = template or PatternSpec()
    H = params.section_height_mm
    onset = params.onset_pressure_kpa
    width = template.width_mm
    amp = template.amplitude_mm

    sq_sum = 0.0
    w_sum = 0.0

    if dataset.angle_samples:
        b, n, p, w = _row_arrays(dataset.angle_samples, template)
        target = np.array([s.angle_deg for s in dataset.angle_samples])
        cap = K.theta_cap(b, np.full_like(b, amp))
        drive = np.maximum(p - onset, 0.0) * KPA_MM3_TO_NMM * width
        spring = params.base_stiffness + params.wavelength_stiffness / b
        theta = K.equilibrium_theta(drive, spring, b, cap)
        pred = n * b * K.contraction(theta) / H * DEG_PER_RAD
        err = (pred - target) / ANGLE_NORM_DEG
        sq_sum += float(np.sum(w * err * err))
        w_sum += float(np.sum(w))

    if dataset.force_samples:
        b, n, p, w = _row_arrays(dataset.force_samples, template)
        target = np.array([s.force_n for s in dataset.force_samples])
        push = np.array([s.push_mm for s in dataset.force_samples])
        cap = K.theta_cap(b, np.full_like(b, amp))
        drive = np.maximum(p - onset, 0.0) * KPA_MM3_TO_NMM * width
        spring = params.base_stiffness + params.wavelength_stiffness / b
        arm = np.full_like(b, template.total_length_mm)
        force, _, _ = K.tip_force(drive, spring, b, n,
                                  np.full_like(b, H), cap, arm, push)
        err = (force - target) / FORCE_NORM_N
        sq_sum += float(np.sum(w * err * err))
        w_sum += float(np.sum(w))

    return math.sqrt(sq_sum / w_sum)


def _normalize(vec: np.ndarray) -> np.ndarray:
    out = np.empty(4)
    for i, (lo, hi) in enumerate(BOUNDS.values()):
        out[i] = (vec[i] - lo) / (hi - lo)
    return out


def _denormalize(x: np.ndarray) -> np.ndarray:
    out = np.empty(4)
    for i, (lo, hi) in enumerate(BOUNDS.values()):
        out[i] = lo + x[i] * (hi - lo)
    return out


def fit(dataset: CalibrationDataset,
        initial: FittedParameters | None = None,
        template: PatternSpec | None = None) -> FittedParameters:
    """Nelder-Mead fit of (H, stiffnesses, onset) to the dataset.

    Deterministic given the same inputs.  Non-convergence within the
    evaluation budget is not an error: the best point found so far is
    returned with ``iterations`` at the budget.
    """
    template = template or PatternSpec()
    initial = initial or FittedParameters()

    def objective(x: np.ndarray) -> float:
        clamped = np.clip(x, 0.0, 1.0)
        overshoot = np.abs(x - clamped)
        params = _params_from_vector(_denormalize(clamped))
        return residual(params, dataset, template) + _PENALTY * float(np.sum(overshoot**2))

    x0 = np.clip(_normalize(initial.as_vector()), 0.0, 1.0)
    result = minimize(objective, x0, method="Nelder-Mead",
                      options={"maxfev": MAX_EVALUATIONS,
                               "xatol": SIMPLEX_TOL,
                               "fatol": math.inf,
                               "adaptive": False})
    best = _params_from_vector(_denormalize(np.clip(result.x, 0.0, 1.0)))
    rms = residual(best, dataset, template)
    return replace(best, residual_rms=rms, iterations=int(result.nfev))


def _params_from_vector(vec: np.ndarray) -> FittedParameters:
    return FittedParameters(section_height_mm=float(vec[0]),
                            base_stiffness=float(vec[1]),
                            wavelength_stiffness=float(vec[2]),
                            onset_pressure_kpa=float(vec[3]))


def load_dataset_csv(path) -> CalibrationDataset:
    """Read a dataset CSV: kind,wavelength_mm,pressure_kpa,push_mm,value,weight."""
    angles: list[AngleSample] = []
    forces: list[ForceSample] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetFormatError(1, "missing header row") from None
        if [h.strip() for h in header] != CSV_HEADER:
            raise DatasetFormatError(1, f"header must be {','.join(CSV_HEADER)}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(CSV_HEADER):
                raise DatasetFormatError(lineno, f"expected {len(CSV_HEADER)} columns, got {len(row)}")
            kind = row[0].strip()
            try:
                wavelength = float(row[1])
                pressure = float(row[2])
                value = float(row[4])
                weight = float(row[5])
            except ValueError as exc:
                raise DatasetFormatError(lineno, str(exc)) from None
            if kind == "angle":
                if row[3].strip():
                    raise DatasetFormatError(lineno, "push_mm must be empty for angle rows")
                angles.append(AngleSample(wavelength, pressure, value, weight))
            elif kind == "force":
                try:
                    push = float(row[3])
                except ValueError:
                    raise DatasetFormatError(lineno, "force rows need a numeric push_mm") from None
                forces.append(ForceSample(wavelength, pressure, push, value, weight))
            else:
                raise DatasetFormatError(lineno, f"kind must be 'angle' or 'force', got {kind!r}")
    if not angles and not forces:
        raise DatasetFormatError(1, "dataset has no samples")
    return CalibrationDataset(tuple(angles), tuple(forces))


def anchor_dataset_path() -> str:
    """Path of the bundled calibration target file."""
    return str(importlib.resources.files("bpactuator").joinpath("data/anchor_targets.csv"))


def anchor_dataset() -> CalibrationDataset:
    return load_dataset_csv(anchor_dataset_path())

"""Balloon-in-sleeve soft bending actuators: model, calibration, design.

A quasi-static toolkit for actuators made from a latex balloon slipped
into a stitched plastic sleeve with a sinusoidal rim.  It predicts bend
angle and tip force versus inflation pressure, fits the model's free
parameters to measured targets, evaluates a three-finger gripper's
payload, and emits cut patterns and cost estimates.

Quick use::

    from bpactuator import PatternSpec, BalloonModel, actuator_state
    state = actuator_state(PatternSpec(), BalloonModel(), 20.0, 50.0)
    print(state.bend_rad, state.fill_fraction)

The command-line entry point is ``bpactuator`` (see ``--help``).
"""

from ._backend import BACKEND_NAME
from .calibration import (AngleSample, CalibrationDataset, FittedParameters,
                          ForceSample, anchor_dataset, anchor_dataset_path,
                          fit, load_dataset_csv, residual)
from .config import Config, DEFAULTS, load_config
from .design import DesignQuery, SweepResult, SweepRow, sweep
from .equilibrium import (ActuatorState, BalloonModel, actuator_state,
                          pressure_sweep, saturation_pressure, solve_theta)
from .errors import (DatasetFormatError, DomainError, ExportError,
                     ValidationError)
from .gripper import (GraspResult, GraspScenario, find_contact, max_payload,
                      payload_ratio, squeeze_force)
from .kinematics import BackbonePose, backbone, bend_angle
from .pattern import (BillOfMaterials, MaterialModel, PatternSpec,
                      bill_of_materials, export_pattern, rim_polyline,
                      skin_mass, wave_count)
from .pouch import (PouchSegment, bulge_height, contraction_ratio,
                    segment_area, segment_area_derivative, theta_max)
from .statics import TipLoadResult, force_to_weight, tip_push_force, total_potential

__all__ = [
    "BACKEND_NAME",
    "ActuatorState", "AngleSample", "BackbonePose", "BalloonModel",
    "BillOfMaterials", "CalibrationDataset", "Config", "DEFAULTS",
    "DatasetFormatError", "DesignQuery", "DomainError", "ExportError",
    "FittedParameters", "ForceSample", "GraspResult", "GraspScenario",
    "MaterialModel", "PatternSpec", "PouchSegment", "SweepResult", "SweepRow",
    "TipLoadResult", "ValidationError",
    "actuator_state", "anchor_dataset", "anchor_dataset_path", "backbone",
    "bend_angle", "bill_of_materials", "bulge_height", "contraction_ratio",
    "export_pattern", "find_contact", "fit", "force_to_weight", "load_config",
    "load_dataset_csv", "max_payload", "payload_ratio", "pressure_sweep",
    "residual", "rim_polyline", "saturation_pressure", "segment_area",
    "segment_area_derivative", "skin_mass", "solve_theta", "squeeze_force",
    "sweep", "theta_max", "tip_push_force", "total_potential", "wave_count",
]

__version__ = "0.1.0"

"""JSON configuration: defaults, loading, validation, round-trip.

Every tunable the model exposes lives in one table below.  Geometry
values the source experiments never published (outline dimensions,
section height, grasp geometry, friction) are explicit, overridable
guesses; the balloon stiffness entries are pre-calibration placeholders.

    design.total_length_mm     140.0   skin length, root to tip
    design.width_mm             30.0   skin width (straight edge to rim base)
    design.wavelength_mm        30.0   wave period b of the sinusoidal rim
    design.amplitude_mm          7.5   wave bump height (bulge cap)
    design.straight_tail_mm     20.0   non-wavy root section
    design.seam_margin_mm        3.0   stitch line inset
    balloon.onset_pressure_kpa  20.0   pressure where waves start to fill
    balloon.base_stiffness      50.0   spring term k0 [N*mm/rad]
    balloon.wavelength_stiffness 3000  spring term k1/b [N*mm^2/rad]
    section_height_mm           20.0   rim-to-flat-layer distance H
    material.*                         0.08 mm PE sheet at 930 kg/m^3,
                                       0.21 + 0.011 USD, 0.70 g balloon
    grasp.*                            three fingers on a 45 mm palm
                                       radius, 26 mm cylinder, mu = 0.8
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass

from .equilibrium import BalloonModel
from .errors import ValidationError
from .gripper import GraspScenario
from .pattern import MaterialModel, PatternSpec

DEFAULTS = {
    "design": {
        "total_length_mm": 140.0,
        "width_mm": 30.0,
        "wavelength_mm": 30.0,
        "amplitude_mm": 7.5,
        "straight_tail_mm": 20.0,
        "seam_margin_mm": 3.0,
    },
    "balloon": {
        "onset_pressure_kpa": 20.0,
        "base_stiffness": 50.0,
        "wavelength_stiffness": 3000.0,
    },
    "section_height_mm": 20.0,
    "material": {
        "plastic_thickness_mm": 0.08,
        "plastic_density_kg_m3": 930.0,
        "plastic_unit_cost_usd": 0.21,
        "balloon_mass_g": 0.70,
        "balloon_unit_cost_usd": 0.011,
    },
    "grasp": {
        "finger_count": 3,
        "palm_radius_mm": 45.0,
        "object_radius_mm": 26.0,
        "object_mass_g": 35.055,
        "friction_mu": 0.8,
        "pressure_kpa": 50.0,
    },
}


@dataclass(frozen=True)
class Config:
    design: PatternSpec
    balloon: BalloonModel
    section_height_mm: float
    material: MaterialModel
    grasp_raw: dict

    def grasp_scenario(self) -> GraspScenario:
        return GraspScenario(finger_spec=self.design, **self.grasp_raw)


def _merge_section(name: str, defaults: dict, given: dict) -> dict:
    merged = dict(defaults)
    for key, value in given.items():
        if key not in defaults:
            raise ValidationError(f"{name}.{key}", "unknown config key")
        merged[key] = value
    return merged


def config_from_dict(raw: dict) -> Config:
    if not isinstance(raw, dict):
        raise ValidationError("config", "top level must be a JSON object")
    known = set(DEFAULTS)
    for key in raw:
        if key not in known:
            raise ValidationError(key, "unknown config key")
    design = _merge_section("design", DEFAULTS["design"], raw.get("design", {}))
    balloon = _merge_section("balloon", DEFAULTS["balloon"], raw.get("balloon", {}))
    material = _merge_section("material", DEFAULTS["material"], raw.get("material", {}))
    grasp = _merge_section("grasp", DEFAULTS["grasp"], raw.get("grasp", {}))
    height = raw.get("section_height_mm", DEFAULTS["section_height_mm"])
    if not isinstance(height, (int, float)) or not height > 0:
        raise ValidationError("section_height_mm", "must be a positive number")
    return Config(design=PatternSpec(**design),
                  balloon=BalloonModel(**balloon),
                  section_height_mm=float(height),
                  material=MaterialModel(**material),
                  grasp_raw=grasp)


def load_config(path=None) -> Config:
    """Config from a JSON file, or pure defaults when no path is given."""
    if path is None:
        return config_from_dict({})
    with open(path, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError("config", f"invalid JSON in {path}: {exc}") from exc
    return config_from_dict(raw)


def config_to_dict(config: Config) -> dict:
    d = config.design
    b = config.balloon
    m = config.material
    out = copy.deepcopy(DEFAULTS)
    out["design"] = {
        "total_length_mm": d.total_length_mm,
        "width_mm": d.width_mm,
        "wavelength_mm": d.wavelength_mm,
        "amplitude_mm": d.amplitude_mm,
        "straight_tail_mm": d.straight_tail_mm,
        "seam_margin_mm": d.seam_margin_mm,
    }
    out["balloon"] = {
        "onset_pressure_kpa": b.onset_pressure_kpa,
        "base_stiffness": b.base_stiffness,
        "wavelength_stiffness": b.wavelength_stiffness,
    }
    out["section_height_mm"] = config.section_height_mm
    out["material"] = {
        "plastic_thickness_mm": m.plastic_thickness_mm,
        "plastic_density_kg_m3": m.plastic_density_kg_m3,
        "plastic_unit_cost_usd": m.plastic_unit_cost_usd,
        "balloon_mass_g": m.balloon_mass_g,
        "balloon_unit_cost_usd": m.balloon_unit_cost_usd,
    }
    out["grasp"] = dict(config.grasp_raw)
    return out


def dump_config(config: Config) -> str:
    return json.dumps(config_to_dict(config), indent=2, sort_keys=True) + "\n"

"""Command-line front end.

Subcommands: simulate, pattern, calibrate, grasp, optimize, bom.
Exit codes: 0 success, 2 validation/input error, 1 internal failure.
All outputs are deterministic (no timestamps), so repeated runs on the
same inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import calibration, design, gripper, pattern, statics
from .config import Config, dump_config, load_config
from .equilibrium import pressure_sweep
from .errors import DatasetFormatError, ExportError, ValidationError
from .units import DEG_PER_RAD

SIM_HEADER = "pressure_kpa,theta_rad,fill_fraction,bend_deg,tip_force_n"
SIM_PUSH_MM = 2.0


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _write_out(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args) -> Config:
    config = load_config(getattr(args, "config", None))
    wavelength = getattr(args, "wavelength", None)
    if wavelength is not None:
        config = dataclasses.replace(
            config, design=dataclasses.replace(config.design, wavelength_mm=wavelength))
    return config


def _parse_float_list(text: str, field: str) -> list[float]:
    if not text.strip():
        return []
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise ValidationError(field, f"could not parse list: {exc}") from None


def cmd_simulate(args) -> int:
    config = _load(args)
    pressures = _parse_float_list(args.pressures, "pressures")
    states = pressure_sweep(config.design, config.balloon,
                            config.section_height_mm, pressures)
    lines = [SIM_HEADER]
    for state in states:
        load = statics.tip_push_force(config.design, config.balloon,
                                      config.section_height_mm,
                                      state.pressure_kpa, SIM_PUSH_MM)
        lines.append(",".join([
            _fmt(state.pressure_kpa), _fmt(state.theta_rad),
            _fmt(state.fill_fraction), _fmt(state.bend_rad * DEG_PER_RAD),
            _fmt(load.force_n)]))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_pattern(args) -> int:
    config = _load(args)
    pattern.export_pattern(config.design, args.out)
    return 0


def cmd_calibrate(args) -> int:
    config = _load(args)
    dataset_path = args.dataset or calibration.anchor_dataset_path()
    dataset = calibration.load_dataset_csv(dataset_path)
    initial = calibration.FittedParameters(
        section_height_mm=config.section_height_mm,
        base_stiffness=config.balloon.base_stiffness,
        wavelength_stiffness=config.balloon.wavelength_stiffness,
        onset_pressure_kpa=config.balloon.onset_pressure_kpa)
    fitted = calibration.fit(dataset, initial, config.design)
    new_config = dataclasses.replace(config, balloon=fitted.balloon(),
                                     section_height_mm=fitted.section_height_mm)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dump_config(new_config))
    sys.stdout.write(f"residual_rms={fitted.residual_rms:.9g} "
                     f"iterations={fitted.iterations}\n")
    return 0


def cmd_grasp(args) -> int:
    config = _load(args)
    scenario = config.grasp_scenario()
    result = gripper.max_payload(scenario, config.balloon, config.section_height_mm)
    ratio = gripper.payload_ratio(scenario, config.balloon,
                                  config.section_height_mm, config.material)
    report = {
        "contacts": list(result.contact_arclength_mm),
        "normal_forces_n": list(result.normal_force_n),
        "max_payload_g": result.max_payload_g,
        "payload_ratio": ratio,
        "liftable": result.liftable,
    }
    _write_out(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_optimize(args) -> int:
    config = _load(args)
    grid = _parse_float_list(args.grid, "grid")
    if not grid:
        raise ValidationError("grid", "grid cannot be empty")
    query = design.DesignQuery(
        objective=args.objective, pressure_kpa=args.pressure,
        wavelength_grid_mm=tuple(grid), template=config.design,
        balloon=config.balloon, section_height_mm=config.section_height_mm,
        material=config.material, grasp_template=config.grasp_scenario())
    result = design.sweep(query)
    lines = ["wavelength_mm,amplitude_mm,value,is_best,error"]
    for row in result.rows:
        lines.append(",".join([
            _fmt(row.wavelength_mm), _fmt(row.amplitude_mm),
            _fmt(row.value) if row.value is not None else "",
            "true" if row is result.best else "false",
            (row.error or "").replace(",", ";")]))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bom(args) -> int:
    config = _load(args)
    bom = pattern.bill_of_materials(config.design, config.material)
    report = {
        "plastic_usd": bom.plastic_usd,
        "balloon_usd": bom.balloon_usd,
        "total_usd": bom.total_usd,
        "skin_mass_g": pattern.skin_mass(config.design, config.material),
    }
    _write_out(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpactuator",
        description="Model, calibrate and lay out balloon-in-sleeve bending actuators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_default=None):
        p.add_argument("--config", default=None, help="JSON config path")
        p.add_argument("--wavelength", type=float, default=None,
                       help="override design wavelength [mm]")
        p.add_argument("--out", default=out_default, help="output path")

    p = sub.add_parser("simulate", help="pressure sweep as CSV")
    common(p)
    p.add_argument("--pressures", default="10,20,30,40,50",
                   help="comma-separated pressures [kPa]")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("pattern", help="export the cut pattern as SVG")
    common(p, out_default="pattern.svg")
    p.set_defaults(fn=cmd_pattern)

    p = sub.add_parser("calibrate", help="fit model parameters to a dataset CSV")
    common(p, out_default="fitted_config.json")
    p.add_argument("dataset", nargs="?", default=None,
                   help="dataset CSV (defaults to the bundled anchor targets)")
    p.set_defaults(fn=cmd_calibrate)

    p = sub.add_parser("grasp", help="evaluate the three-finger grasp scenario")
    common(p)
    p.set_defaults(fn=cmd_grasp)

    p = sub.add_parser("optimize", help="sweep the design grid for an objective")
    common(p)
    p.add_argument("--objective", default="max_tip_force",
                   choices=sorted(design.OBJECTIVES))
    p.add_argument("--grid", default="25,30,35,40",
                   help="comma-separated wavelengths [mm]")
    p.add_argument("--pressure", type=float, default=50.0,
                   help="evaluation pressure [kPa]")
    p.set_defaults(fn=cmd_optimize)

    p = sub.add_parser("bom", help="bill of materials and mass estimate")
    common(p)
    p.set_defaults(fn=cmd_bom)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValidationError, DatasetFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExportError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

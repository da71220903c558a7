"""Config parsing and the command-line surface (exit codes, formats)."""

import json
import xml.etree.ElementTree as ET

import pytest

from bpactuator import cli
from bpactuator.config import (config_from_dict, config_to_dict,
                               dump_config, load_config)
from bpactuator.errors import ValidationError

SIM_HEADER = "pressure_kpa,theta_rad,fill_fraction,bend_deg,tip_force_n"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConfig:
    def test_defaults_load(self):
        config = load_config(None)
        assert config.design.wavelength_mm == 30.0
        assert config.balloon.onset_pressure_kpa == 20.0

    def test_unknown_top_level_key(self):
        with pytest.raises(ValidationError, match="balloonn"):
            config_from_dict({"balloonn": {}})

    def test_unknown_nested_key(self):
        with pytest.raises(ValidationError, match="design.wavelength"):
            config_from_dict({"design": {"wavelength": 30}})

    def test_roundtrip_identity(self, tmp_path):
        config = config_from_dict({"design": {"wavelength_mm": 35.0},
                                   "section_height_mm": 18.5})
        path = tmp_path / "c.json"
        path.write_text(dump_config(config))
        again = load_config(path)
        assert config_to_dict(again) == config_to_dict(config)

    def test_invalid_json_rejected(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError):
            load_config(path)


class TestSimulate:
    def test_default_pressures(self, capsys):
        code, out, _ = run(capsys, "simulate")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == SIM_HEADER
        assert len(lines) == 6

    def test_empty_pressures_header_only(self, capsys):
        code, out, _ = run(capsys, "simulate", "--pressures", "")
        assert code == 0
        assert out.strip() == SIM_HEADER

    def test_below_onset_row_is_flat(self, capsys):
        code, out, _ = run(capsys, "simulate", "--pressures", "10")
        row = out.strip().split("\n")[1].split(",")
        assert float(row[3]) == 0.0  # bend_deg
        assert float(row[4]) == 0.0  # tip_force_n

    def test_bad_pressure_list(self, capsys):
        code, _, err = run(capsys, "simulate", "--pressures", "10,abc")
        assert code == 2
        assert "pressures" in err

    def test_out_file(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "simulate", "--out", str(out_path))
        assert code == 0
        assert out_path.read_text().startswith(SIM_HEADER)


class TestPattern:
    def test_writes_svg(self, capsys, tmp_path):
        target = tmp_path / "skin.svg"
        code, _, _ = run(capsys, "pattern", "--out", str(target))
        assert code == 0
        assert len(ET.parse(target).getroot()) == 2

    def test_wavelength_flag_overrides(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "pattern", "--out", str(a))
        run(capsys, "pattern", "--out", str(b), "--wavelength", "40")
        assert a.read_bytes() != b.read_bytes()

    def test_invalid_wavelength_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "pattern", "--out", str(tmp_path / "x.svg"),
                           "--wavelength", "0")
        assert code == 2
        assert "wavelength" in err

    def test_unwritable_path_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "pattern", "--out",
                           str(tmp_path / "no_dir" / "x.svg"))
        assert code == 2


class TestCalibrate:
    def test_anchor_fit_writes_config(self, capsys, tmp_path):
        out = tmp_path / "fitted.json"
        code, stdout, _ = run(capsys, "calibrate", "--out", str(out))
        assert code == 0
        assert "residual_rms=" in stdout and "iterations=" in stdout
        fitted = json.loads(out.read_text())
        assert set(fitted) == {"design", "balloon", "section_height_mm",
                               "material", "grasp"}
        load_config(out)  # round-trips through validation

    def test_empty_csv_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "empty.csv"
        bad.write_text("kind,wavelength_mm,pressure_kpa,push_mm,value,weight\n")
        code, _, err = run(capsys, "calibrate", str(bad),
                           "--out", str(tmp_path / "f.json"))
        assert code == 2

    def test_malformed_row_reports_line(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("kind,wavelength_mm,pressure_kpa,push_mm,value,weight\n"
                       "angle,30,10,,0,1\n"
                       "angle,30,oops,,0,1\n")
        code, _, err = run(capsys, "calibrate", str(bad),
                           "--out", str(tmp_path / "f.json"))
        assert code == 2
        assert "line 3" in err


class TestGrasp:
    def test_report_shape(self, capsys):
        code, out, _ = run(capsys, "grasp")
        assert code == 0
        report = json.loads(out)
        assert set(report) == {"contacts", "normal_forces_n", "max_payload_g",
                               "payload_ratio", "liftable"}
        assert len(report["normal_forces_n"]) == 3

    def test_massless_object_liftable(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"grasp": {"object_mass_g": 0.0}}))
        code, out, _ = run(capsys, "grasp", "--config", str(cfg))
        assert json.loads(out)["liftable"] is True

    def test_out_of_reach_object_not_liftable(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"grasp": {"object_radius_mm": 2.0}}))
        code, out, _ = run(capsys, "grasp", "--config", str(cfg))
        report = json.loads(out)
        assert report["liftable"] is False
        assert report["max_payload_g"] == 0.0


class TestOptimizeAndBom:
    def test_optimize_table_after_calibration(self, capsys, tmp_path):
        fitted = tmp_path / "fitted.json"
        assert run(capsys, "calibrate", "--out", str(fitted))[0] == 0
        code, out, _ = run(capsys, "optimize", "--grid", "25,30,35,40",
                           "--config", str(fitted))
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "wavelength_mm,amplitude_mm,value,is_best,error"
        assert len(lines) == 5
        best = [ln for ln in lines[1:] if ",true," in ln]
        assert len(best) == 1 and best[0].startswith("25,")

    def test_optimize_single_point(self, capsys):
        code, out, _ = run(capsys, "optimize", "--grid", "30")
        assert ",true," in out.strip().split("\n")[1]

    def test_optimize_empty_grid_exits_2(self, capsys):
        code, _, err = run(capsys, "optimize", "--grid", "")
        assert code == 2

    def test_bom_default_total(self, capsys):
        code, out, _ = run(capsys, "bom")
        report = json.loads(out)
        assert report["total_usd"] == 0.221
        assert report["plastic_usd"] == 0.21
        assert report["balloon_usd"] == 0.011
        assert abs(report["skin_mass_g"] - 1.392) <= 0.42

    def test_invalid_config_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"mystery": 1}))
        code, _, err = run(capsys, "bom", "--config", str(cfg))
        assert code == 2
        assert "mystery" in err

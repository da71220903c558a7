"""Load-bearing: potential landscape, tip push forces, virtual work."""

import numpy as np
import pytest

from bpactuator import (BalloonModel, DomainError, MaterialModel, PatternSpec,
                        ValidationError, force_to_weight, tip_push_force,
                        total_potential)
from bpactuator.statics import max_bend

BALLOON = BalloonModel()  # placeholders; fitted values come from conftest
SPEC = PatternSpec()
H = 20.0


class TestTotalPotential:
    def test_zero_at_rest(self):
        assert total_potential(SPEC, BALLOON, H, 50.0, 0.0) == 0.0

    def test_unpressurized_potential_is_elastic_only(self):
        phis = np.linspace(0.0, max_bend(SPEC, H), 40)
        values = [total_potential(SPEC, BALLOON, H, 0.0, p) for p in phis]
        assert values[0] == 0.0
        assert all(v2 >= v1 for v1, v2 in zip(values, values[1:]))

    def test_free_bend_is_a_local_minimum(self):
        load = tip_push_force(SPEC, BALLOON, H, 50.0, 0.0)
        phi = load.free_bend_rad
        center = total_potential(SPEC, BALLOON, H, 50.0, phi)
        assert total_potential(SPEC, BALLOON, H, 50.0, phi + 1e-3) >= center
        assert total_potential(SPEC, BALLOON, H, 50.0, phi - 1e-3) >= center

    def test_gradient_vanishes_at_free_bend(self):
        phi = tip_push_force(SPEC, BALLOON, H, 50.0, 0.0).free_bend_rad
        h = 1e-6
        grad = (total_potential(SPEC, BALLOON, H, 50.0, phi + h)
                - total_potential(SPEC, BALLOON, H, 50.0, phi - h)) / (2 * h)
        scale = abs(total_potential(SPEC, BALLOON, H, 50.0, phi))
        assert abs(grad) <= 1e-6 * scale + 1e-9

    def test_domain_check(self):
        with pytest.raises(DomainError):
            total_potential(SPEC, BALLOON, H, 50.0, max_bend(SPEC, H) + 0.1)


class TestTipPushForce:
    def test_zero_push_zero_force(self):
        load = tip_push_force(SPEC, BALLOON, H, 50.0, 0.0)
        assert abs(load.force_n) <= 1e-9

    def test_monotone_in_push(self):
        forces = [tip_push_force(SPEC, BALLOON, H, 50.0, push).force_n
                  for push in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0)]
        assert all(f2 >= f1 for f1, f2 in zip(forces, forces[1:]))
        assert forces[-1] > 0

    def test_two_vs_four_millimetres(self):
        f2 = tip_push_force(SPEC, BALLOON, H, 50.0, 2.0).force_n
        f4 = tip_push_force(SPEC, BALLOON, H, 50.0, 4.0).force_n
        assert f2 <= f4

    def test_virtual_work_consistency(self):
        load = tip_push_force(SPEC, BALLOON, H, 50.0, 2.0)
        phi_c = load.free_bend_rad - 2.0 / SPEC.total_length_mm
        h = 2e-6
        moment = -(total_potential(SPEC, BALLOON, H, 50.0, phi_c + h)
                   - total_potential(SPEC, BALLOON, H, 50.0, phi_c - h)) / (2 * h)
        assert load.force_n * SPEC.total_length_mm == pytest.approx(moment, rel=1e-4)

    def test_positive_base_stiffness_at_interior_equilibrium(self):
        load = tip_push_force(SPEC, BALLOON, H, 50.0, 2.0)
        assert load.base_stiffness_nmm > 0

    def test_below_onset_no_force(self):
        load = tip_push_force(SPEC, BALLOON, H, 10.0, 2.0)
        assert load.free_bend_rad == 0.0
        assert load.force_n == 0.0

    def test_push_past_flat_reads_zero(self):
        # barely above onset the free tip travel is under the push; the
        # flattened actuator transmits no bending reaction
        load = tip_push_force(SPEC, BALLOON, H, 20.5, 2.0)
        assert 0.0 < load.free_bend_rad < 2.0 / SPEC.total_length_mm
        assert load.force_n == 0.0

    def test_validation(self):
        with pytest.raises(ValidationError):
            tip_push_force(SPEC, BALLOON, H, 50.0, -1.0)


class TestFittedBehaviour:
    def test_force_non_increasing_in_wavelength(self, fitted, fitted_balloon):
        forces = [tip_push_force(PatternSpec(wavelength_mm=b), fitted_balloon,
                                 fitted.section_height_mm, 50.0, 2.0).force_n
                  for b in (25.0, 30.0, 35.0, 40.0)]
        assert all(f1 >= f2 for f1, f2 in zip(forces, forces[1:]))

    def test_mean_force_matches_reported_level(self, fitted, fitted_balloon):
        forces = [tip_push_force(PatternSpec(wavelength_mm=b), fitted_balloon,
                                 fitted.section_height_mm, 50.0, 2.0).force_n
                  for b in (25.0, 30.0, 35.0, 40.0)]
        assert 0.055 <= np.mean(forces) <= 0.085


class TestForceToWeight:
    def test_reference_ratio(self):
        # 0.070 N against a 1.392 g actuator is just over five-to-one
        spec, mat = PatternSpec(), MaterialModel()
        ratio = force_to_weight(spec, mat, 0.070)
        mass = 1.3919200000000002
        assert ratio == pytest.approx(0.070 / (mass * 0.0098), rel=1e-9)
        assert ratio == pytest.approx(5.13, abs=0.01)

    def test_zero(self):
        assert force_to_weight(PatternSpec(), MaterialModel(), 0.0) == 0.0

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            force_to_weight(PatternSpec(), MaterialModel(), -0.1)

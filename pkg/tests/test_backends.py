"""Numba and numpy kernel implementations must agree."""

import os
import subprocess
import sys

import numpy as np
import pytest

from bpactuator import _backend
from bpactuator import _kernels_numpy as numpy_impl

try:
    from bpactuator import _kernels_numba as numba_impl
except ImportError:
    numba_impl = None

needs_numba = pytest.mark.skipif(numba_impl is None, reason="numba unavailable")


def random_batch(size=300, seed=5):
    rng = np.random.default_rng(seed)
    b = rng.uniform(22.0, 45.0, size)
    amp = rng.uniform(4.0, 9.5, size)
    drive = rng.uniform(0.0, 1.2, size)
    spring = rng.uniform(20.0, 500.0, size)
    n = np.maximum(np.floor(120.0 / b), 1.0)
    height = rng.uniform(8.0, 30.0, size)
    arm = np.full(size, 140.0)
    push = rng.uniform(0.0, 4.0, size)
    phi = rng.uniform(0.0, 0.15, size)
    return b, amp, drive, spring, n, height, arm, push, phi


@needs_numba
class TestParity:
    def test_scalar_functions(self):
        rng = np.random.default_rng(6)
        t = rng.uniform(0.0, np.pi / 2, 500)
        t[:5] = [0.0, 1e-9, 1e-5, 9.9e-5, 1.1e-4]  # straddle the series switch
        for name in ("contraction", "contraction_slope", "bulge_frac",
                     "area_frac", "area_frac_slope"):
            a = getattr(numpy_impl, name)(t)
            b = getattr(numba_impl, name)(t)
            assert np.max(np.abs(a - b)) <= 1e-14, name

    def test_solvers(self):
        b, amp, drive, spring, n, height, arm, push, phi = random_batch()
        cap_np = numpy_impl.theta_cap(b, amp)
        cap_nb = numba_impl.theta_cap(b, amp)
        assert np.max(np.abs(cap_np - cap_nb)) <= 1e-14
        th_np = numpy_impl.equilibrium_theta(drive, spring, b, cap_np)
        th_nb = numba_impl.equilibrium_theta(drive, spring, b, cap_nb)
        assert np.max(np.abs(th_np - th_nb)) <= 1e-12
        pot_np = numpy_impl.bend_potential(phi, drive, spring, b, n, height, cap_np)
        pot_nb = numba_impl.bend_potential(phi, drive, spring, b, n, height, cap_nb)
        assert np.max(np.abs(pot_np - pot_nb)) <= 1e-9

    def test_tip_force(self):
        b, amp, drive, spring, n, height, arm, push, _ = random_batch()
        cap = numpy_impl.theta_cap(b, amp)
        f_np, pf_np, pc_np = numpy_impl.tip_force(drive, spring, b, n, height,
                                                  cap, arm, push)
        f_nb, pf_nb, pc_nb = numba_impl.tip_force(drive, spring, b, n, height,
                                                  cap, arm, push)
        # finite differencing amplifies last-ulp potential differences
        assert np.max(np.abs(f_np - f_nb)) <= 1e-6
        assert np.max(np.abs(pf_np - pf_nb)) <= 1e-12
        assert np.max(np.abs(pc_np - pc_nb)) <= 1e-12


class TestSelection:
    def test_wrappers_accept_scalars(self):
        out = _backend.contraction(0.5)
        assert isinstance(out, float)

    def test_disable_flag_selects_numpy(self):
        code = ("import bpactuator._backend as b; print(b.BACKEND_NAME)")
        env = dict(os.environ, BPACT_DISABLE_NUMBA="1")
        got = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        assert got.stdout.strip() == "numpy"

    def test_warm_up_runs(self):
        _backend.warm_up()

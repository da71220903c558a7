"""Kernel backend selection and scalar/array-friendly wrappers.

The numba backend is used when importable unless the environment variable
``BPACT_DISABLE_NUMBA`` is set to 1/true/yes/on, in which case the
vectorized numpy implementation takes over.  Both expose identical
functions over 1-D float64 arrays; the wrappers here broadcast arbitrary
scalar/array inputs, flatten, call through, and restore the broadcast
shape (python floats for all-scalar calls).
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("BPACT_DISABLE_NUMBA", "").strip().lower()
_numba_wanted = _flag not in {"1", "true", "yes", "on"}

if _numba_wanted:
    try:
        from . import _kernels_numba as _impl
        BACKEND_NAME = "numba"
    except ImportError:
        from . import _kernels_numpy as _impl
        BACKEND_NAME = "numpy"
else:
    from . import _kernels_numpy as _impl
    BACKEND_NAME = "numpy"

HALF_PI = float(np.pi / 2)
FD_STEP = 1e-5


def _prepare(*args):
    arrs = np.broadcast_arrays(*[np.asarray(a, dtype=np.float64) for a in args])
    shape = arrs[0].shape
    return [np.ascontiguousarray(a).ravel() for a in arrs], shape


def _restore(out, shape):
    out = out.reshape(shape)
    if shape == ():
        return float(out)
    return out


def _call1(fn, *args):
    flat, shape = _prepare(*args)
    return _restore(fn(*flat), shape)


def contraction(theta):
    return _call1(_impl.contraction, theta)


def contraction_slope(theta):
    return _call1(_impl.contraction_slope, theta)


def bulge_frac(theta):
    return _call1(_impl.bulge_frac, theta)


def area_frac(theta):
    return _call1(_impl.area_frac, theta)


def area_frac_slope(theta):
    return _call1(_impl.area_frac_slope, theta)


def theta_cap(wavelength, amplitude):
    return _call1(_impl.theta_cap, wavelength, amplitude)


def equilibrium_theta(drive, spring, wavelength, cap):
    return _call1(_impl.equilibrium_theta, drive, spring, wavelength, cap)


def theta_for_contraction(target, cap):
    return _call1(_impl.theta_for_contraction, target, cap)


def bend_potential(phi, drive, spring, wavelength, n_waves, height, cap):
    return _call1(_impl.bend_potential, phi, drive, spring, wavelength,
                  n_waves, height, cap)


def tip_force(drive, spring, wavelength, n_waves, height, cap, arm, push):
    flat, shape = _prepare(drive, spring, wavelength, n_waves, height, cap,
                           arm, push)
    force, phi_free, phi_c = _impl.tip_force(*flat)
    return (_restore(force, shape), _restore(phi_free, shape),
            _restore(phi_c, shape))


def warm_up():
    """Trigger JIT compilation of every kernel (no-op on the numpy path)."""
    z = np.array([0.3, 1.2])
    contraction(z)
    contraction_slope(z)
    bulge_frac(z)
    area_frac(z)
    area_frac_slope(z)
    cap = theta_cap(np.array([30.0, 40.0]), np.array([7.5, 7.5]))
    equilibrium_theta(np.array([0.5, 0.5]), np.array([100.0, 100.0]),
                      np.array([30.0, 40.0]), cap)
    theta_for_contraction(np.array([0.05, 0.05]), cap)
    bend_potential(np.array([0.1, 0.1]), np.array([0.5, 0.5]),
                   np.array([100.0, 100.0]), np.array([30.0, 40.0]),
                   np.array([4.0, 3.0]), np.array([20.0, 20.0]), cap)
    tip_force(np.array([0.5, 0.5]), np.array([100.0, 100.0]),
              np.array([30.0, 40.0]), np.array([4.0, 3.0]),
              np.array([20.0, 20.0]), cap, np.array([140.0, 140.0]),
              np.array([2.0, 2.0]))

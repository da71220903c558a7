"""Numba-compiled implementation of the hot numeric kernels.

Same contract as :mod:`bpactuator._kernels_numpy` (1-D float64 arrays in,
arrays out); the scalar cores are plain math written to be @njit-friendly.
Compilation is cached on disk, so only the first call of a session pays
the JIT cost.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

HALF_PI = math.pi / 2
SMALL_THETA = 1e-4
BISECT_ITERS = 52
FD_STEP = 1e-5


@njit(cache=True)
def _contraction(t):
    if t < SMALL_THETA:
        return t * t / 6.0 - t**4 / 120.0
    return 1.0 - math.sin(t) / t


@njit(cache=True)
def _contraction_slope(t):
    if t < SMALL_THETA:
        return t / 3.0 - t**3 / 30.0
    return (math.sin(t) - t * math.cos(t)) / (t * t)


@njit(cache=True)
def _bulge_frac(t):
    if t < SMALL_THETA:
        return t / 4.0 - t**3 / 48.0
    return (1.0 - math.cos(t)) / (2.0 * t)


@njit(cache=True)
def _area_frac(t):
    if t < SMALL_THETA:
        return t / 6.0 - t**3 / 30.0
    return (t - math.sin(t) * math.cos(t)) / (4.0 * t * t)


@njit(cache=True)
def _area_frac_slope(t):
    if t < SMALL_THETA:
        return 1.0 / 6.0 - t * t / 10.0
    s = math.sin(t)
    c = math.cos(t)
    return (t * s * s - t + s * c) / (2.0 * t**3)


@njit(cache=True)
def _theta_cap(b, a):
    if b * _bulge_frac(HALF_PI) <= a:
        return HALF_PI
    lo = 0.0
    hi = HALF_PI
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if b * _bulge_frac(mid) > a:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@njit(cache=True)
def _equilibrium_theta(drive, spring, b, cap):
    if drive <= 0.0:
        return 0.0
    b2 = b * b
    if drive * b2 * _area_frac_slope(cap) - spring * cap >= 0.0:
        return cap
    lo = 0.0
    hi = cap
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if drive * b2 * _area_frac_slope(mid) - spring * mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@njit(cache=True)
def _theta_for_contraction(target, cap):
    if target <= 0.0:
        return 0.0
    if target >= _contraction(cap):
        return cap
    lo = 0.0
    hi = cap
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if _contraction(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@njit(cache=True)
def _bend_potential(phi, drive, spring, b, n, height, cap):
    target = phi * height / (n * b)
    theta = _theta_for_contraction(target, cap)
    return n * (0.5 * spring * theta * theta - drive * b * b * _area_frac(theta))


@njit(cache=True)
def _tip_force(drive, spring, b, n, height, cap, arm, push):
    t_free = _equilibrium_theta(drive, spring, b, cap)
    phi_free = n * b * _contraction(t_free) / height
    phi_c = phi_free - push / arm
    if phi_c < 0.0:
        phi_c = 0.0
    # zero by convention at the free pose and at full flattening; see
    # the numpy twin for the rationale
    if push <= 0.0 or phi_c <= 0.0:
        return 0.0, phi_free, phi_c
    lo = phi_c - 0.5 * FD_STEP
    if lo < 0.0:
        lo = 0.0
    hi = lo + FD_STEP
    drop = (_bend_potential(lo, drive, spring, b, n, height, cap)
            - _bend_potential(hi, drive, spring, b, n, height, cap))
    force = drop / FD_STEP / arm
    if force < 0.0:
        force = 0.0
    return force, phi_free, phi_c


# --- array entry points (same names as the numpy backend) ---

@njit(cache=True)
def contraction(theta):
    out = np.empty(theta.shape[0])
    for i in range(theta.shape[0]):
        out[i] = _contraction(theta[i])
    return out


@njit(cache=True)
def contraction_slope(theta):
    out = np.empty(theta.shape[0])
    for i in range(theta.shape[0]):
        out[i] = _contraction_slope(theta[i])
    return out


@njit(cache=True)
def bulge_frac(theta):
    out = np.empty(theta.shape[0])
    for i in range(theta.shape[0]):
        out[i] = _bulge_frac(theta[i])
    return out


@njit(cache=True)
def area_frac(theta):
    out = np.empty(theta.shape[0])
    for i in range(theta.shape[0]):
        out[i] = _area_frac(theta[i])
    return out


@njit(cache=True)
def area_frac_slope(theta):
    out = np.empty(theta.shape[0])
    for i in range(theta.shape[0]):
        out[i] = _area_frac_slope(theta[i])
    return out


@njit(cache=True)
def theta_cap(wavelength, amplitude):
    out = np.empty(wavelength.shape[0])
    for i in range(wavelength.shape[0]):
        out[i] = _theta_cap(wavelength[i], amplitude[i])
    return out


@njit(cache=True)
def equilibrium_theta(drive, spring, wavelength, cap):
    out = np.empty(drive.shape[0])
    for i in range(drive.shape[0]):
        out[i] = _equilibrium_theta(drive[i], spring[i], wavelength[i], cap[i])
    return out


@njit(cache=True)
def theta_for_contraction(target, cap):
    out = np.empty(target.shape[0])
    for i in range(target.shape[0]):
        out[i] = _theta_for_contraction(target[i], cap[i])
    return out


@njit(cache=True)
def bend_potential(phi, drive, spring, wavelength, n_waves, height, cap):
    out = np.empty(phi.shape[0])
    for i in range(phi.shape[0]):
        out[i] = _bend_potential(phi[i], drive[i], spring[i], wavelength[i],
                                 n_waves[i], height[i], cap[i])
    return out


@njit(cache=True)
def tip_force(drive, spring, wavelength, n_waves, height, cap, arm, push):
    m = drive.shape[0]
    force = np.empty(m)
    phi_free = np.empty(m)
    phi_c = np.empty(m)
    for i in range(m):
        f, pf, pc = _tip_force(drive[i], spring[i], wavelength[i], n_waves[i],
                               height[i], cap[i], arm[i], push[i])
        force[i] = f
        phi_free[i] = pf
        phi_c[i] = pc
    return force, phi_free, phi_c

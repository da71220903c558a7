"""Vectorized numpy implementation of the hot numeric kernels.

Mirror of :mod:`bpactuator._kernels_numba`; :mod:`bpactuator._backend`
selects one of the two at import time.  Every function takes and returns
1-D float64 arrays of equal length (broadcasting is done by the backend
wrappers) and is deterministic.

Geometry of one wave: an inextensible film of flat length ``b`` bulges
into a circular arc of half-angle ``theta``; radius R = b/(2*theta).
The closed forms below all follow from that single construction:

* chord shortening    eps(theta)  = 1 - sin(theta)/theta
* bulge height        h(theta)    = b * (1 - cos(theta)) / (2*theta)
* cross-section area  A(theta)    = b^2 * (theta - sin*cos) / (4*theta^2)

Below SMALL_THETA the direct forms lose digits to cancellation and are
replaced by their series.
"""

from __future__ import annotations

import numpy as np

HALF_PI = np.pi / 2
SMALL_THETA = 1e-4
BISECT_ITERS = 52        # halving [0, pi/2] 52 times reaches float64 resolution
FD_STEP = 1e-5           # central-difference step for dPi/dphi [rad]


def _safe(t: np.ndarray) -> np.ndarray:
    return np.where(t == 0.0, 1.0, t)


def contraction(theta: np.ndarray) -> np.ndarray:
    """Chord contraction ratio eps(theta) = 1 - sin(theta)/theta."""
    small = theta < SMALL_THETA
    ts = _safe(theta)
    exact = 1.0 - np.sin(ts) / ts
    series = theta * theta / 6.0 - theta**4 / 120.0
    return np.where(small, series, exact)


def contraction_slope(theta: np.ndarray) -> np.ndarray:
    """d eps / d theta = (sin(theta) - theta*cos(theta)) / theta^2."""
    small = theta < SMALL_THETA
    ts = _safe(theta)
    exact = (np.sin(ts) - ts * np.cos(ts)) / (ts * ts)
    series = theta / 3.0 - theta**3 / 30.0
    return np.where(small, series, exact)


def bulge_frac(theta: np.ndarray) -> np.ndarray:
    """Bulge height per unit flat length: (1 - cos(theta)) / (2*theta)."""
    small = theta < SMALL_THETA
    ts = _safe(theta)
    exact = (1.0 - np.cos(ts)) / (2.0 * ts)
    series = theta / 4.0 - theta**3 / 48.0
    return np.where(small, series, exact)


def area_frac(theta: np.ndarray) -> np.ndarray:
    """Cross-section area per unit flat length squared: A/b^2."""
    small = theta < SMALL_THETA
    ts = _safe(theta)
    exact = (ts - np.sin(ts) * np.cos(ts)) / (4.0 * ts * ts)
    series = theta / 6.0 - theta**3 / 30.0
    return np.where(small, series, exact)


def area_frac_slope(theta: np.ndarray) -> np.ndarray:
    """d(A/b^2)/d theta; positive on (0, pi/2), exactly 0 at pi/2."""
    small = theta < SMALL_THETA
    ts = _safe(theta)
    s, c = np.sin(ts), np.cos(ts)
    exact = (ts * s * s - ts + s * c) / (2.0 * ts**3)
    series = 1.0 / 6.0 - theta * theta / 10.0
    return np.where(small, series, exact)


def theta_cap(wavelength: np.ndarray, amplitude: np.ndarray) -> np.ndarray:
    """Largest theta in (0, pi/2] whose bulge height stays within amplitude."""
    unbound = wavelength * bulge_frac(np.full_like(wavelength, HALF_PI)) <= amplitude
    lo = np.zeros_like(wavelength)
    hi = np.full_like(wavelength, HALF_PI)
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        over = wavelength * bulge_frac(mid) > amplitude
        hi = np.where(over, mid, hi)
        lo = np.where(over, lo, mid)
    return np.where(unbound, HALF_PI, 0.5 * (lo + hi))


def equilibrium_theta(drive: np.ndarray, spring: np.ndarray,
                      wavelength: np.ndarray, cap: np.ndarray) -> np.ndarray:
    """Root of drive*b^2*A'(theta) = spring*theta on [0, cap].

    ``drive`` is the pneumatic moment scale (P - onset)+ * 1e-3 * width in
    N/mm.  The residual is strictly decreasing, so plain bisection is
    exact; a non-negative residual at the cap means saturation.
    """
    b2 = wavelength * wavelength
    saturated = drive * b2 * area_frac_slope(cap) - spring * cap >= 0.0
    lo = np.zeros_like(cap)
    hi = cap.copy()
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        pos = drive * b2 * area_frac_slope(mid) - spring * mid > 0.0
        lo = np.where(pos, mid, lo)
        hi = np.where(pos, hi, mid)
    out = np.where(saturated, cap, 0.5 * (lo + hi))
    return np.where(drive <= 0.0, 0.0, out)


def theta_for_contraction(target: np.ndarray, cap: np.ndarray) -> np.ndarray:
    """Inverse of eps on [0, cap], clamped at the ends."""
    e_cap = contraction(cap)
    lo = np.zeros_like(cap)
    hi = cap.copy()
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        under = contraction(mid) < target
        lo = np.where(under, mid, lo)
        hi = np.where(under, hi, mid)
    out = np.where(target >= e_cap, cap, 0.5 * (lo + hi))
    return np.where(target <= 0.0, 0.0, out)


def bend_potential(phi: np.ndarray, drive: np.ndarray, spring: np.ndarray,
                   wavelength: np.ndarray, n_waves: np.ndarray,
                   height: np.ndarray, cap: np.ndarray) -> np.ndarray:
    """Total potential Pi(phi) in N*mm for a uniform-wave actuator.

    phi maps back to the per-wave angle through the contraction chain
    phi = n*b*eps(theta)/H; beyond the saturated bend the potential is
    held constant (theta clamps at the cap).
    """
    target = phi * height / (n_waves * wavelength)
    theta = theta_for_contraction(target, cap)
    b2 = wavelength * wavelength
    return n_waves * (0.5 * spring * theta * theta - drive * b2 * area_frac(theta))


def tip_force(drive: np.ndarray, spring: np.ndarray, wavelength: np.ndarray,
              n_waves: np.ndarray, height: np.ndarray, cap: np.ndarray,
              arm: np.ndarray, push: np.ndarray):
    """Reaction force for a tip pushed back along a moment arm.

    Returns ``(force_n, phi_free, phi_constrained)``.  The force is the
    central difference -dPi/dphi / arm at the constrained bend, floored
    at zero.  Two poses read exactly zero by convention: zero push (the
    free equilibrium; a stencil there would straddle the saturation
    clamp on saturated designs) and a push that flattens the actuator
    entirely (phi_c = 0, where the bend coordinate no longer couples to
    the pusher and the potential's slope is a square-root artifact).
    """
    t_free = equilibrium_theta(drive, spring, wavelength, cap)
    phi_free = n_waves * wavelength * contraction(t_free) / height
    phi_c = np.maximum(phi_free - push / arm, 0.0)
    lo = np.maximum(phi_c - 0.5 * FD_STEP, 0.0)
    hi = lo + FD_STEP
    drop = (bend_potential(lo, drive, spring, wavelength, n_waves, height, cap)
            - bend_potential(hi, drive, spring, wavelength, n_waves, height, cap))
    force = np.maximum(drop / FD_STEP / arm, 0.0)
    force = np.where((push <= 0.0) | (phi_c <= 0.0), 0.0, force)
    return force, phi_free, phi_c

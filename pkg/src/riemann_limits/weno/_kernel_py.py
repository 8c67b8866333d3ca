"""Vectorized NumPy version of the flux-split WENO5 right-hand side.

Mirrors ``_kernel.pyx`` operation for operation; used when the compiled
extension is unavailable or disabled.
"""

import numpy as np

EPS = 1e-6
D0, D1, D2 = 0.1, 0.6, 0.3
NG = 3


def weno5_left(a, b, c, d, e):
    """Value at the right face of the centre cell ``c`` from the stencil a..e."""
    q0 = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0
    q1 = (-b + 5.0 * c + 2.0 * d) / 6.0
    q2 = (2.0 * c + 5.0 * d - e) / 6.0
    b0 = 13.0 / 12.0 * (a - 2.0 * b + c) ** 2 + 0.25 * (a - 4.0 * b + 3.0 * c) ** 2
    b1 = 13.0 / 12.0 * (b - 2.0 * c + d) ** 2 + 0.25 * (b - d) ** 2
    b2 = 13.0 / 12.0 * (c - 2.0 * d + e) ** 2 + 0.25 * (3.0 * c - 4.0 * d + e) ** 2
    a0 = D0 / (EPS + b0) ** 2
    a1 = D1 / (EPS + b1) ** 2
    a2 = D2 / (EPS + b2) ** 2
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)


def _face_flux(fp, fm, n):
    # fp upwinds from the left (cells j..j+4), fm from the right (cells j+5..j+1)
    up = weno5_left(fp[0:n + 1], fp[1:n + 2], fp[2:n + 3], fp[3:n + 4], fp[4:n + 5])
    dn = weno5_left(fm[5:n + 6], fm[4:n + 5], fm[3:n + 4], fm[2:n + 3], fm[1:n + 2])
    return up + dn


def flux_split_rhs(rho, v, shift, theta, dx):
    """Semi-discrete tendencies ``(drho, dv, alpha)``.

    Flux ``(rho c, c^2/2 + theta/2 rho^(2 theta))`` with ``c = v + shift``;
    global Lax-Friedrichs splitting; three constant-extrapolation ghost cells.
    """
    n = rho.shape[0]
    r = np.pad(np.asarray(rho, dtype=float), NG, mode="edge")
    w = np.pad(np.asarray(v, dtype=float), NG, mode="edge")
    c = w + shift
    r_th = r ** theta
    alpha = float(np.max(np.abs(c) + theta * r_th))
    f1 = r * c
    f2 = 0.5 * c * c + 0.5 * theta * r_th * r_th
    F1 = _face_flux(0.5 * (f1 + alpha * r), 0.5 * (f1 - alpha * r), n)
    F2 = _face_flux(0.5 * (f2 + alpha * w), 0.5 * (f2 - alpha * w), n)
    return -(F1[1:] - F1[:-1]) / dx, -(F2[1:] - F2[:-1]) / dx, alpha

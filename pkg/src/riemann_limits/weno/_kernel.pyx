# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled flux-split WENO5 right-hand side (same contract as ``_kernel_py``)."""

import numpy as np
from libc.math cimport fabs, pow

cdef double EPS = 1e-6
cdef double D0 = 0.1, D1 = 0.6, D2 = 0.3
cdef int NG = 3


cdef inline double weno5_left(double a, double b, double c, double d, double e) nogil:
    cdef double q0 = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0
    cdef double q1 = (-b + 5.0 * c + 2.0 * d) / 6.0
    cdef double q2 = (2.0 * c + 5.0 * d - e) / 6.0
    cdef double t0 = a - 2.0 * b + c, u0 = a - 4.0 * b + 3.0 * c
    cdef double t1 = b - 2.0 * c + d, u1 = b - d
    cdef double t2 = c - 2.0 * d + e, u2 = 3.0 * c - 4.0 * d + e
    cdef double b0 = 13.0 / 12.0 * t0 * t0 + 0.25 * u0 * u0
    cdef double b1 = 13.0 / 12.0 * t1 * t1 + 0.25 * u1 * u1
    cdef double b2 = 13.0 / 12.0 * t2 * t2 + 0.25 * u2 * u2
    cdef double a0 = D0 / ((EPS + b0) * (EPS + b0))
    cdef double a1 = D1 / ((EPS + b1) * (EPS + b1))
    cdef double a2 = D2 / ((EPS + b2) * (EPS + b2))
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)


def flux_split_rhs(double[::1] rho, double[::1] v, double shift, double theta, double dx):
    cdef Py_ssize_t n = rho.shape[0]
    cdef Py_ssize_t m = n + 2 * NG
    cdef Py_ssize_t i, j, k
    cdef double[::1] r = np.empty(m)
    cdef double[::1] w = np.empty(m)
    cdef double[::1] fp1 = np.empty(m), fm1 = np.empty(m)
    cdef double[::1] fp2 = np.empty(m), fm2 = np.empty(m)
    cdef double[::1] F1 = np.empty(n + 1), F2 = np.empty(n + 1)
    drho_arr = np.empty(n)
    dv_arr = np.empty(n)
    cdef double[::1] drho = drho_arr, dv = dv_arr
    cdef double alpha = 0.0, c, rt, s, f1, f2

    with nogil:
        for i in range(m):
            k = i - NG
            if k < 0:
                k = 0
            elif k > n - 1:
                k = n - 1
            r[i] = rho[k]
            w[i] = v[k]
        for i in range(m):
            c = w[i] + shift
            s = fabs(c) + theta * pow(r[i], theta)
            if s > alpha:
                alpha = s
        for i in range(m):
            c = w[i] + shift
            rt = pow(r[i], theta)
            f1 = r[i] * c
            f2 = 0.5 * c * c + 0.5 * theta * rt * rt
            fp1[i] = 0.5 * (f1 + alpha * r[i])
            fm1[i] = 0.5 * (f1 - alpha * r[i])
            fp2[i] = 0.5 * (f2 + alpha * w[i])
            fm2[i] = 0.5 * (f2 - alpha * w[i])
        for j in range(n + 1):
            F1[j] = (weno5_left(fp1[j], fp1[j + 1], fp1[j + 2], fp1[j + 3], fp1[j + 4])
                     + weno5_left(fm1[j + 5], fm1[j + 4], fm1[j + 3], fm1[j + 2], fm1[j + 1]))
            F2[j] = (weno5_left(fp2[j], fp2[j + 1], fp2[j + 2], fp2[j + 3], fp2[j + 4])
                     + weno5_left(fm2[j + 5], fm2[j + 4], fm2[j + 3], fm2[j + 2], fm2[j + 1]))
        for i in range(n):
            drho[i] = -(F1[i + 1] - F1[i]) / dx
            dv[i] = -(F2[i + 1] - F2[i]) / dx

    return drho_arr, dv_arr, alpha

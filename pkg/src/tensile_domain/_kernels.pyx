# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Mooney-Rivlin kernels; mirror of ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, isnan, NAN, INFINITY

cnp.import_array()

BACKEND = "cython"

cdef enum:
    TENSE = 0
    WRINKLED_1 = 1
    WRINKLED_2 = 2
    SLACK = 3
    FLAG_BOUNDARY = 1
    FLAG_NO_WIDTH = 2
    FLAG_UNIAXIAL = 4


cdef inline void _stress(double c1, double c2, double kv, double l1, double l2,
                         double* t1, double* t2) noexcept nogil:
    cdef double a = l1 * l1
    cdef double b = l2 * l2
    cdef double ab = a * b
    cdef double inv = 1.0 / ab
    t1[0] = 2.0 * (c1 * (a - inv) - c2 * (1.0 / a - ab) - kv * ab)
    t2[0] = 2.0 * (c1 * (b - inv) - c2 * (1.0 / b - ab) - kv * ab)


cdef inline double _width(double c1, double c2, double kv, double lam) noexcept nogil:
    cdef double a = lam * lam
    cdef double num = c1 + c2 * a
    cdef double den = num - kv * a
    if den <= 0.0:
        return NAN
    if kv > c2 and lam >= sqrt(c1 / (kv - c2)):
        return NAN
    return (1.0 / sqrt(lam)) * sqrt(sqrt(num / den))


cdef inline void _point(double c1, double c2, double kv, double l1, double l2, double tau,
                        double* out, signed char* regime, signed char* flags) noexcept nogil:
    cdef double t1, t2, r, dummy, w1, w2, m1, m2
    _stress(c1, c2, kv, l1, l2, &t1, &t2)
    out[0] = t1
    out[1] = t2
    w1 = _width(c1, c2, kv, l2)
    w2 = _width(c1, c2, kv, l1)
    m1 = -INFINITY if isnan(w1) else l1 - w1
    m2 = -INFINITY if isnan(w2) else l2 - w2
    flags[0] = 0
    if fabs(m1) <= tau or fabs(m2) <= tau:
        flags[0] = FLAG_BOUNDARY
    out[2] = 0.0
    out[3] = 0.0
    if m1 > tau and m2 > tau:
        regime[0] = TENSE
        out[2] = t1
        out[3] = t2
    elif m1 > tau:
        regime[0] = WRINKLED_1
        if isnan(w2):
            flags[0] |= FLAG_NO_WIDTH
        else:
            _stress(c1, c2, kv, l1, w2, &r, &dummy)
            if r <= 0.0:
                flags[0] |= FLAG_UNIAXIAL
            else:
                out[2] = r
    elif m2 > tau:
        regime[0] = WRINKLED_2
        if isnan(w1):
            flags[0] |= FLAG_NO_WIDTH
        else:
            _stress(c1, c2, kv, w1, l2, &dummy, &r)
            if r <= 0.0:
                flags[0] |= FLAG_UNIAXIAL
            else:
                out[3] = r
    else:
        regime[0] = SLACK


def mr_stress(double c1, double c2, double kv, double l1, double l2):
    cdef double t1, t2
    _stress(c1, c2, kv, l1, l2, &t1, &t2)
    return t1, t2


def mr_width(double c1, double c2, double kv, double lam):
    return _width(c1, c2, kv, lam)


def mr_point(double c1, double c2, double kv, double l1, double l2, double tau):
    cdef double out[4]
    cdef signed char regime, flags
    _point(c1, c2, kv, l1, l2, tau, out, &regime, &flags)
    return out[0], out[1], out[2], out[3], regime, flags


def mr_grid(double c1, double c2, double kv, l1, l2, double tau):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(l1, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y = np.ascontiguousarray(l2, dtype=np.float64)
    if x.shape[0] != y.shape[0]:
        raise ValueError("l1 and l2 must be 1-D arrays of equal length")
    cdef Py_ssize_t n = x.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 4), dtype=np.float64)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] regime = np.empty(n, dtype=np.int8)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] flags = np.empty(n, dtype=np.int8)
    cdef double[:, ::1] ov = out
    cdef const double[::1] xv = x
    cdef const double[::1] yv = y
    cdef signed char[::1] rv = regime
    cdef signed char[::1] fv = flags
    with nogil:
        for i in range(n):
            _point(c1, c2, kv, xv[i], yv[i], tau, &ov[i, 0], &rv[i], &fv[i])
    return out[:, 0].copy(), out[:, 1].copy(), out[:, 2].copy(), out[:, 3].copy(), regime, flags

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled pairwise kernel core.

Mirrors ``_core_py``: powers of rho = |x - x_i|^2 + soft2 summed over sources.
Parallelism is over query points only; every query's source reduction runs in
a fixed order, so results are bit-identical for any thread count.  Per-query
work lives in nogil helpers so their locals stay thread-private.
"""

import numpy as np

cimport cython
from cython.parallel cimport prange
from libc.math cimport exp, pow

BACKEND = "compiled"


cdef inline long _potential_one(const double* q, const double[:, ::1] src,
                                const double[::1] w, double expo, double soft2,
                                double* out) noexcept nogil:
    cdef Py_ssize_t c, n = src.shape[0]
    cdef double rr, acc = 0.0, u0, u1, u2
    cdef long ns = 0
    for c in range(n):
        u0 = q[0] - src[c, 0]
        u1 = q[1] - src[c, 1]
        u2 = q[2] - src[c, 2]
        rr = u0 * u0 + u1 * u1 + u2 * u2 + soft2
        if rr == 0.0:
            ns += 1
            continue
        acc += w[c] * pow(rr, expo)
    out[0] = acc
    return ns


cdef inline long _field_one(const double* q, const double[:, ::1] src,
                            const double[::1] w, double expo, double soft2,
                            double* out) noexcept nogil:
    cdef Py_ssize_t c, n = src.shape[0]
    cdef double rr, g, u0, u1, u2
    cdef long ns = 0
    out[0] = 0.0
    out[1] = 0.0
    out[2] = 0.0
    for c in range(n):
        u0 = q[0] - src[c, 0]
        u1 = q[1] - src[c, 1]
        u2 = q[2] - src[c, 2]
        rr = u0 * u0 + u1 * u1 + u2 * u2 + soft2
        if rr == 0.0:
            ns += 1
            continue
        g = w[c] * pow(rr, expo)
        out[0] += g * u0
        out[1] += g * u1
        out[2] += g * u2
    return ns


cdef inline long _field_grad_one(const double* q, const double[:, ::1] src,
                                 const double[::1] w, double expo, double soft2,
                                 double* out) noexcept nogil:
    cdef Py_ssize_t c, j, k, n = src.shape[0]
    cdef double rr, g, g2
    cdef double u[3]
    cdef long ns = 0
    for j in range(9):
        out[j] = 0.0
    for c in range(n):
        u[0] = q[0] - src[c, 0]
        u[1] = q[1] - src[c, 1]
        u[2] = q[2] - src[c, 2]
        rr = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + soft2
        if rr == 0.0:
            ns += 1
            continue
        g = w[c] * pow(rr, expo)
        g2 = 2.0 * expo * w[c] * pow(rr, expo - 1.0)
        for j in range(3):
            out[4 * j] += g
            for k in range(3):
                out[3 * j + k] += g2 * u[j] * u[k]
    return ns


cdef inline long _field_hess_one(const double* q, const double[:, ::1] src,
                                 const double[::1] w, double expo, double soft2,
                                 double* out) noexcept nogil:
    cdef Py_ssize_t c, j, k, a, n = src.shape[0]
    cdef double rr, g2, g4
    cdef double u[3]
    cdef long ns = 0
    for j in range(27):
        out[j] = 0.0
    for c in range(n):
        u[0] = q[0] - src[c, 0]
        u[1] = q[1] - src[c, 1]
        u[2] = q[2] - src[c, 2]
        rr = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + soft2
        if rr == 0.0:
            ns += 1
            continue
        g2 = 2.0 * expo * w[c] * pow(rr, expo - 1.0)
        g4 = 4.0 * expo * (expo - 1.0) * w[c] * pow(rr, expo - 2.0)
        for j in range(3):
            for k in range(3):
                out[9 * j + 3 * k + j] += g2 * u[k]
                out[9 * j + 3 * k + k] += g2 * u[j]
                for a in range(3):
                    if j == k:
                        out[9 * j + 3 * k + a] += g2 * u[a]
                    out[9 * j + 3 * k + a] += g4 * u[j] * u[k] * u[a]
    return ns


def pairwise_potential(double[:, ::1] src, double[::1] w, double[:, ::1] queries,
                       double expo, double soft2):
    cdef Py_ssize_t i, m = queries.shape[0]
    out_arr = np.zeros(m)
    cdef double[::1] out = out_arr
    cdef long nsing = 0
    for i in prange(m, nogil=True, schedule="static"):
        nsing += _potential_one(&queries[i, 0], src, w, expo, soft2, &out[i])
    return out_arr, int(nsing)


def pairwise_field(double[:, ::1] src, double[::1] w, double[:, ::1] queries,
                   double expo, double soft2):
    cdef Py_ssize_t i, m = queries.shape[0]
    out_arr = np.zeros((m, 3))
    cdef double[:, ::1] out = out_arr
    cdef long nsing = 0
    for i in prange(m, nogil=True, schedule="static"):
        nsing += _field_one(&queries[i, 0], src, w, expo, soft2, &out[i, 0])
    return out_arr, int(nsing)


def pairwise_field_grad(double[:, ::1] src, double[::1] w, double[:, ::1] queries,
                        double expo, double soft2):
    cdef Py_ssize_t i, m = queries.shape[0]
    out_arr = np.zeros((m, 3, 3))
    cdef double[:, :, ::1] out = out_arr
    cdef long nsing = 0
    for i in prange(m, nogil=True, schedule="static"):
        nsing += _field_grad_one(&queries[i, 0], src, w, expo, soft2, &out[i, 0, 0])
    return out_arr, int(nsing)


def pairwise_field_hess(double[:, ::1] src, double[::1] w, double[:, ::1] queries,
                        double expo, double soft2):
    cdef Py_ssize_t i, m = queries.shape[0]
    out_arr = np.zeros((m, 3, 3, 3))
    cdef double[:, :, :, ::1] out = out_arr
    cdef long nsing = 0
    for i in prange(m, nogil=True, schedule="static"):
        nsing += _field_hess_one(&queries[i, 0], src, w, expo, soft2, &out[i, 0, 0, 0])
    return out_arr, int(nsing)


cdef inline void _kde_one(const double* q, const double[:, ::1] points,
                          const double[::1] w, const double* inv, double norm,
                          Py_ssize_t dd, int order, double* val,
                          double* grad, double* hess) noexcept nogil:
    cdef Py_ssize_t c, a, b, n = points.shape[0]
    cdef double k, s
    cdef double t[6]
    val[0] = 0.0
    if order >= 1:
        for a in range(dd):
            grad[a] = 0.0
    if order >= 2:
        for a in range(dd * dd):
            hess[a] = 0.0
    for c in range(n):
        s = 0.0
        for a in range(dd):
            t[a] = (q[a] - points[c, a]) * inv[a]
            s += t[a] * t[a]
        k = norm * w[c] * exp(-0.5 * s)
        val[0] += k
        if order >= 1:
            for a in range(dd):
                grad[a] -= k * t[a] * inv[a]
        if order >= 2:
            for a in range(dd):
                for b in range(dd):
                    hess[dd * a + b] += k * t[a] * inv[a] * t[b] * inv[b]
                hess[dd * a + a] -= k * inv[a] * inv[a]


def kde_eval(double[:, ::1] points, double[::1] w, double[:, ::1] queries,
             double[::1] bw, int order):
    cdef Py_ssize_t i, a, dd = points.shape[1], m = queries.shape[0]
    if dd > 6:
        raise ValueError("kde_eval supports at most 6 dimensions")
    cdef double det = 1.0
    cdef double inv[6]
    for a in range(dd):
        det *= bw[a]
        inv[a] = 1.0 / bw[a]
    cdef double norm = 1.0 / (det * pow(2.0 * np.pi, dd / 2.0))
    vals_arr = np.zeros(m)
    grads_arr = np.zeros((m, dd)) if order >= 1 else np.zeros((1, dd))
    hess_arr = np.zeros((m, dd, dd)) if order >= 2 else np.zeros((1, dd, dd))
    cdef double[::1] vals = vals_arr
    cdef double[:, ::1] grads = grads_arr
    cdef double[:, :, ::1] hess = hess_arr
    for i in prange(m, nogil=True, schedule="static"):
        _kde_one(&queries[i, 0], points, w, inv, norm, dd, order, &vals[i],
                 &grads[i if order >= 1 else 0, 0],
                 &hess[i if order >= 2 else 0, 0, 0])
    return (vals_arr,
            grads_arr if order >= 1 else None,
            hess_arr if order >= 2 else None)

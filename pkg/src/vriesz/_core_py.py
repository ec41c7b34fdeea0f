"""Chunked NumPy fallback for the pairwise kernel core.

Sources are processed in fixed-size chunks accumulated in chunk order, so
results do not depend on how callers distribute work and repeat bit-for-bit.
The compiled twin in ``_core.pyx`` exposes the same signatures.

Kernel shape shared by all routines: u = x - x_i, rho = |u|^2 + soft2,
terms are powers rho^expo with the caller-supplied exponent; prefactors such
as c_alpha live in the wrappers.  Exact zero-distance encounters (rho == 0,
only possible at zero softening) contribute nothing and are counted so the
wrapper can decide whether they are an error (field evaluation at a particle)
or expected (self-interaction).
"""

from __future__ import annotations

import numpy as np

CHUNK = 1024
BACKEND = "python"
_EYE = np.eye(3)


def _chunks(n):
    for lo in range(0, n, CHUNK):
        yield lo, min(lo + CHUNK, n)


def _masked_power(rr, expo):
    zero = rr == 0.0
    if zero.any():
        rr = np.where(zero, 1.0, rr)
    return rr, zero, int(zero.sum())


def pairwise_potential(src, w, queries, expo, soft2):
    """sum_i w_i rho^expo at each query -> (values (m,), n_singular)."""
    out = np.zeros(len(queries))
    nsing = 0
    for lo, hi in _chunks(len(src)):
        d = queries[:, None, :] - src[None, lo:hi, :]
        rr = np.einsum("icn,icn->ic", d, d) + soft2
        rr, zero, ns = _masked_power(rr, expo)
        nsing += ns
        term = rr ** expo
        term[zero] = 0.0
        out += term @ w[lo:hi]
    return out, nsing


def pairwise_field(src, w, queries, expo, soft2):
    """sum_i w_i u rho^expo -> (values (m, 3), n_singular)."""
    out = np.zeros((len(queries), 3))
    nsing = 0
    for lo, hi in _chunks(len(src)):
        d = queries[:, None, :] - src[None, lo:hi, :]
        rr = np.einsum("icn,icn->ic", d, d) + soft2
        rr, zero, ns = _masked_power(rr, expo)
        nsing += ns
        g = (rr ** expo) * w[lo:hi]
        g[zero] = 0.0
        out += np.einsum("ic,icn->in", g, d)
    return out, nsing


def pairwise_field_grad(src, w, queries, expo, soft2):
    """Jacobian entries d_j F_k of pairwise_field -> ((m, 3, 3), n_singular)."""
    out = np.zeros((len(queries), 3, 3))
    nsing = 0
    for lo, hi in _chunks(len(src)):
        d = queries[:, None, :] - src[None, lo:hi, :]
        rr = np.einsum("icn,icn->ic", d, d) + soft2
        rr, zero, ns = _masked_power(rr, expo)
        nsing += ns
        g = (rr ** expo) * w[lo:hi]
        g2 = 2.0 * expo * (rr ** (expo - 1.0)) * w[lo:hi]
        g[zero] = 0.0
        g2[zero] = 0.0
        out += g.sum(axis=1)[:, None, None] * _EYE
        out += np.einsum("ic,icj,ick->ijk", g2, d, d)
    return out, nsing


def pairwise_field_hess(src, w, queries, expo, soft2):
    """Second derivatives d_j d_k F_a of pairwise_field -> ((m, 3, 3, 3), n_singular)."""
    out = np.zeros((len(queries), 3, 3, 3))
    nsing = 0
    for lo, hi in _chunks(len(src)):
        d = queries[:, None, :] - src[None, lo:hi, :]
        rr = np.einsum("icn,icn->ic", d, d) + soft2
        rr, zero, ns = _masked_power(rr, expo)
        nsing += ns
        g2 = 2.0 * expo * (rr ** (expo - 1.0)) * w[lo:hi]
        g4 = 4.0 * expo * (expo - 1.0) * (rr ** (expo - 2.0)) * w[lo:hi]
        g2[zero] = 0.0
        g4[zero] = 0.0
        s2 = np.einsum("ic,icn->in", g2, d)
        out += np.einsum("ka,ij->ijka", _EYE, s2)
        out += np.einsum("ja,ik->ijka", _EYE, s2)
        out += np.einsum("jk,ia->ijka", _EYE, s2)
        out += np.einsum("ic,icj,ick,ica->ijka", g4, d, d, d)
    return out, nsing


def kde_eval(points, w, queries, bw, order):
    """Weighted product-Gaussian KDE at query points.

    points (n, d), queries (m, d), bw (d,) per-axis bandwidths.  Returns
    (values, grads, hessians); grads/hessians are None below the requested
    derivative ``order`` (0, 1 or 2).
    """
    n, dd = points.shape
    m = len(queries)
    norm = 1.0 / (np.prod(bw) * (2.0 * np.pi) ** (dd / 2.0))
    inv = 1.0 / bw
    vals = np.zeros(m)
    grads = np.zeros((m, dd)) if order >= 1 else None
    hess = np.zeros((m, dd, dd)) if order >= 2 else None
    eye = np.eye(dd)
    for lo, hi in _chunks(n):
        t = (queries[:, None, :] - points[None, lo:hi, :]) * inv
        k = norm * w[lo:hi] * np.exp(-0.5 * np.einsum("icn,icn->ic", t, t))
        vals += k.sum(axis=1)
        if order >= 1:
            grads -= np.einsum("ic,icn->in", k, t) * inv
        if order >= 2:
            hess += np.einsum("ic,icn,icp->inp", k, t * inv, t * inv)
            hess -= k.sum(axis=1)[:, None, None] * (eye * inv * inv)
    return vals, grads, hess

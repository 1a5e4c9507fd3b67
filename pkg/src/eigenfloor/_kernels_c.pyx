# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for the hot inner loops.

Mirrors eigenfloor._kernels_py operation for operation (same recurrences,
same mantissa/exponent scaling); keep both files in lockstep.
"""

from libc.math cimport frexp, ldexp, isfinite, isnan

import numpy as np

from .errors import (
    NotPositiveDefiniteError,
    ShiftRejectedError,
    SingularMatrixError,
    TraceOverflowError,
)

cdef double BIG = 1.3407807929942597e154 * 1.3407807929942597e154    # 2^512
cdef double SMALL = 1.0 / BIG


cdef inline (double, long) _renorm(double v, long e) noexcept:
    cdef int ex
    if v == 0.0:
        return 0.0, 0
    if v > BIG or v < -BIG or (-SMALL < v < SMALL):
        v = frexp(v, &ex)
        return v, e + ex
    return v, e


cdef inline (double, long) _sadd(double xv, long xe, double yv, long ye) noexcept:
    if xv == 0.0:
        return yv, ye
    if yv == 0.0:
        return xv, xe
    if xe >= ye:
        return _renorm(xv + ldexp(yv, <int>(ye - xe)), xe)
    return _renorm(ldexp(xv, <int>(xe - ye)) + yv, ye)


cdef inline (double, long) _smul(double xv, long xe, double yv, long ye) noexcept:
    return _renorm(xv * yv, xe + ye)


def trace_pair_bidiagonal(const double[::1] diag, const double[::1] sub):
    """O(m) inverse traces of A = B B^T; see the pure-Python twin for the
    recurrence derivation."""
    cdef Py_ssize_t m = diag.shape[0]
    cdef Py_ssize_t j
    cdef int ex
    cdef double sv, dv, qv, a, b, term
    cdef long qe
    cdef double cav, t2v, c1v, c2v, iv, vv, sv2, uv
    cdef long cae, t2e, c1e, c2e, ie, ve, se2, ue
    for j in range(m):
        if diag[j] == 0.0:
            raise SingularMatrixError(j)
    cdef double[::1] rv = np.zeros(max(m - 1, 1))
    cdef long[::1] re = np.zeros(max(m - 1, 1), dtype=np.int64)
    for j in range(m - 1):
        if sub[j] == 0.0:
            continue
        sv = frexp(sub[j], &ex)
        qe = ex
        dv = frexp(diag[j + 1], &ex)
        qe -= ex
        qv, qe = _renorm(sv / dv, qe)
        rv[j], re[j] = _renorm(qv * qv, 2 * qe)
    cdef double[::1] tv = np.ones(m)
    cdef long[::1] te = np.zeros(m, dtype=np.int64)
    for j in range(m - 2, -1, -1):
        qv, qe = _smul(rv[j], re[j], tv[j + 1], te[j + 1])
        tv[j], te[j] = _sadd(qv, qe, 1.0, 0)
    a = 0.0
    b = 0.0
    vv = 0.0
    ve = 0
    for j in range(m):
        dv = frexp(diag[j], &ex)
        iv, ie = _renorm(1.0 / (dv * dv), -2 * <long>ex)
        cav, cae = _smul(tv[j], te[j], iv, ie)
        a += ldexp(cav, <int>cae)
        t2v, t2e = _smul(tv[j], te[j], tv[j], te[j])
        c1v, c1e = _smul(t2v, t2e, iv, ie)
        c1v, c1e = _smul(c1v, c1e, iv, ie)
        term = ldexp(c1v, <int>c1e)
        if vv != 0.0:
            # c1 currently holds T^2/d^4; rebuild T^2/d^2 for the cross term
            c2v, c2e = _smul(t2v, t2e, iv, ie)
            c2v, c2e = _smul(c2v, c2e, vv, ve)
            term += 2.0 * ldexp(c2v, <int>c2e)
        b += term
        if not (isfinite(a) and isfinite(b)):
            raise TraceOverflowError(j)
        if j < m - 1:
            sv2, se2 = _sadd(vv, ve, iv, ie)
            vv, ve = _smul(rv[j], re[j], sv2, se2)
    return a, b


def shifted_trace_pair(const double[::1] diag, const double[::1] offdiag, double shift):
    """O(m) traces of (T - shift I)^-1 and its square; see the pure-Python
    twin for the recurrence derivation."""
    cdef Py_ssize_t m = diag.shape[0]
    cdef Py_ssize_t j
    cdef int ex
    cdef double d, f, fv, pv, lv, a, b, term
    cdef long le, pe, ie
    cdef double xv, iv, w2v, qv, uv
    cdef long xe, w2e, qe, ue
    cdef double sv_acc
    cdef long se_acc
    cdef double[::1] delta = np.empty(m)
    cdef double[::1] gv = np.zeros(max(m - 1, 1))
    cdef long[::1] ge = np.zeros(max(m - 1, 1), dtype=np.int64)
    d = diag[0] - shift
    if not d > 0.0:
        raise NotPositiveDefiniteError(0)
    delta[0] = d
    for j in range(m - 1):
        f = offdiag[j]
        d = (diag[j + 1] - shift) - (f / delta[j]) * f
        if not d > 0.0:
            raise NotPositiveDefiniteError(j + 1)
        delta[j + 1] = d
        if f != 0.0:
            fv = frexp(f, &ex)
            le = ex
            pv = frexp(delta[j], &ex)
            le -= ex
            lv, le = _renorm(fv / pv, le)
            gv[j], ge[j] = _renorm(lv * lv, 2 * le)
    cdef double[::1] wv = np.empty(m)
    cdef long[::1] we = np.zeros(m, dtype=np.int64)
    pv = frexp(delta[m - 1], &ex)
    wv[m - 1], we[m - 1] = _renorm(1.0 / pv, -<long>ex)
    for j in range(m - 2, -1, -1):
        xv, xe = _smul(gv[j], ge[j], wv[j + 1], we[j + 1])
        pv = frexp(delta[j], &ex)
        iv, ie = _renorm(1.0 / pv, -<long>ex)
        wv[j], we[j] = _sadd(xv, xe, iv, ie)
    a = 0.0
    b = 0.0
    sv_acc = 0.0
    se_acc = 0
    for j in range(m):
        a += ldexp(wv[j], <int>we[j])
        w2v, w2e = _smul(wv[j], we[j], wv[j], we[j])
        term = ldexp(w2v, <int>w2e)
        if sv_acc != 0.0:
            qv, qe = _smul(w2v, w2e, sv_acc, se_acc)
            term += 2.0 * ldexp(qv, <int>qe)
        b += term
        if not (isfinite(a) and isfinite(b)):
            raise TraceOverflowError(j)
        if j < m - 1:
            uv, ue = _sadd(sv_acc, se_acc, 1.0, 0)
            sv_acc, se_acc = _smul(gv[j], ge[j], uv, ue)
    return a, b


def sturm_counts(const double[::1] diag, const double[::1] offdiag, const double[::1] sigmas):
    """Eigenvalue counts strictly below each sigma; zero/NaN pivots become
    -2^-96 * ||T||."""
    cdef Py_ssize_t m = diag.shape[0]
    cdef Py_ssize_t k = sigmas.shape[0]
    cdef Py_ssize_t i, t
    cdef double scale = 0.0, absd, p, s, tiny
    for i in range(m):
        absd = diag[i] if diag[i] >= 0.0 else -diag[i]
        if absd > scale:
            scale = absd
    absd = 0.0
    for i in range(m - 1):
        p = offdiag[i] if offdiag[i] >= 0.0 else -offdiag[i]
        if p > absd:
            absd = p
    scale += 2.0 * absd
    tiny = ldexp(scale, -96) if scale > 0.0 else ldexp(1.0, -1022)
    counts_arr = np.zeros(k, dtype=np.int64)
    cdef long[::1] counts = counts_arr
    cdef long c
    for t in range(k):
        s = sigmas[t]
        p = diag[0] - s
        if p == 0.0:
            p = -tiny
        c = 1 if p < 0.0 else 0
        for i in range(1, m):
            p = (diag[i] - s) - (offdiag[i - 1] * offdiag[i - 1]) / p
            if isnan(p) or p == 0.0:
                p = -tiny
            if p < 0.0:
                c += 1
        counts[t] = c
    return counts_arr


def dqds_sweep(const double[::1] q, const double[::1] e, double shift,
               double[::1] out_q, double[::1] out_e):
    """One differential qd transform with shift; raises ShiftRejectedError
    the moment any new quantity goes nonpositive (inputs untouched)."""
    cdef Py_ssize_t n = q.shape[0]
    cdef Py_ssize_t i
    cdef double d, qh, ratio
    d = q[0] - shift
    for i in range(n - 1):
        qh = d + e[i]
        if not qh > 0.0:
            raise ShiftRejectedError(i)
        ratio = q[i + 1] / qh
        out_e[i] = e[i] * ratio
        d = d * ratio - shift
        if not d > 0.0:
            raise ShiftRejectedError(i + 1)
        out_q[i] = qh
    if not d > 0.0:
        raise ShiftRejectedError(n - 1)
    out_q[n - 1] = d

"""Pure-Python reference kernels for the hot inner loops.

`eigenfloor._kernels_c` implements the same four functions in Cython with
identical arithmetic; `eigenfloor._backend` picks whichever is available.
Keep both files in lockstep.

Running products over a graded matrix leave the double range long before the
final trace sums do, so the sweep quantities are carried as
(mantissa, power-of-two exponent) pairs and renormalized whenever the
mantissa leaves [2^-512, 2^512].
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    NotPositiveDefiniteError,
    ShiftRejectedError,
    SingularMatrixError,
    TraceOverflowError,
)

_BIG = 2.0**512
_SMALL = 2.0**-512


def _renorm(v: float, e: int):
    if v == 0.0:
        return 0.0, 0
    if v > _BIG or v < -_BIG or -_SMALL < v < _SMALL:
        v, ex = math.frexp(v)
        return v, e + ex
    return v, e


def _sadd(xv: float, xe: int, yv: float, ye: int):
    if xv == 0.0:
        return yv, ye
    if yv == 0.0:
        return xv, xe
    if xe >= ye:
        return _renorm(xv + math.ldexp(yv, ye - xe), xe)
    return _renorm(math.ldexp(xv, xe - ye) + yv, ye)


def _smul(xv: float, xe: int, yv: float, ye: int):
    return _renorm(xv * yv, xe + ye)


def trace_pair_bidiagonal(diag, sub):
    """O(m) inverse traces of A = B B^T for lower bidiagonal B.

    With r_j = (sub_j / diag_{j+1})^2, the inverse of A is semiseparable and

        Tr(A^-1) = sum_j T_j / d_j^2,   T_j = 1 + r_j T_{j+1}  (backward),
        Tr(A^-2) = sum_j T_j^2/d_j^4 + 2 sum_j (T_j^2/d_j^2) V_j,
                   V_{j+1} = r_j (V_j + 1/d_j^2)  (forward).

    Returns (a, b). Raises SingularMatrixError on a zero diagonal entry and
    TraceOverflowError (with the column index) when a final sum overflows.
    """
    m = len(diag)
    for j in range(m):
        if diag[j] == 0.0:
            raise SingularMatrixError(j)
    rv = [0.0] * (m - 1)
    re = [0] * (m - 1)
    for j in range(m - 1):
        if sub[j] == 0.0:
            continue
        sv, se = math.frexp(sub[j])
        dv, de = math.frexp(diag[j + 1])
        qv, qe = _renorm(sv / dv, se - de)
        rv[j], re[j] = _renorm(qv * qv, 2 * qe)
    tv = [1.0] * m
    te = [0] * m
    for j in range(m - 2, -1, -1):
        pv, pe = _smul(rv[j], re[j], tv[j + 1], te[j + 1])
        tv[j], te[j] = _sadd(pv, pe, 1.0, 0)
    a = 0.0
    b = 0.0
    vv, ve = 0.0, 0
    for j in range(m):
        dv, de = math.frexp(diag[j])
        iv, ie = _renorm(1.0 / (dv * dv), -2 * de)
        cav, cae = _smul(tv[j], te[j], iv, ie)
        a += math.ldexp(cav, cae)
        t2v, t2e = _smul(tv[j], te[j], tv[j], te[j])
        c1v, c1e = _smul(t2v, t2e, iv, ie)
        term = math.ldexp(*_smul(c1v, c1e, iv, ie))
        if vv != 0.0:
            c2v, c2e = _smul(c1v, c1e, vv, ve)
            term += 2.0 * math.ldexp(c2v, c2e)
        b += term
        if not (math.isfinite(a) and math.isfinite(b)):
            raise TraceOverflowError(j)
        if j < m - 1:
            sv2, se2 = _sadd(vv, ve, iv, ie)
            vv, ve = _smul(rv[j], re[j], sv2, se2)
    return a, b


def shifted_trace_pair(diag, offdiag, shift):
    """O(m) traces of (T - shift I)^-1 and (T - shift I)^-2 for tridiagonal T.

    Forward LDL^T pivots delta_j certify positive definiteness; the inverse's
    diagonal follows the backward recurrence W_j = 1/delta_j + l_j^2 W_{j+1}
    with l_j = offdiag_j / delta_j, and the off-diagonal Frobenius mass uses
    the forward prefix P_{j+1} = l_j^2 (1 + P_j):

        Tr(M^-1) = sum_j W_j,   Tr(M^-2) = sum_j W_j^2 (1 + 2 P_j).

    Raises NotPositiveDefiniteError with the pivot index when a pivot of
    T - shift I is nonpositive (the shift reached the smallest eigenvalue).
    """
    m = len(diag)
    delta = [0.0] * m
    gv = [0.0] * (m - 1)
    ge = [0] * (m - 1)
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
            fv, fe = math.frexp(f)
            pv, pe = math.frexp(delta[j])
            lv, le = _renorm(fv / pv, fe - pe)
            gv[j], ge[j] = _renorm(lv * lv, 2 * le)
    wv = [0.0] * m
    we = [0] * m
    pv, pe = math.frexp(delta[m - 1])
    wv[m - 1], we[m - 1] = _renorm(1.0 / pv, -pe)
    for j in range(m - 2, -1, -1):
        xv, xe = _smul(gv[j], ge[j], wv[j + 1], we[j + 1])
        pv, pe = math.frexp(delta[j])
        iv, ie = _renorm(1.0 / pv, -pe)
        wv[j], we[j] = _sadd(xv, xe, iv, ie)
    a = 0.0
    b = 0.0
    sv, se = 0.0, 0
    for j in range(m):
        a += math.ldexp(wv[j], we[j])
        w2v, w2e = _smul(wv[j], we[j], wv[j], we[j])
        term = math.ldexp(w2v, w2e)
        if sv != 0.0:
            qv, qe = _smul(w2v, w2e, sv, se)
            term += 2.0 * math.ldexp(qv, qe)
        b += term
        if not (math.isfinite(a) and math.isfinite(b)):
            raise TraceOverflowError(j)
        if j < m - 1:
            uv, ue = _sadd(sv, se, 1.0, 0)
            sv, se = _smul(gv[j], ge[j], uv, ue)
    return a, b


def sturm_counts(diag, offdiag, sigmas):
    """Number of eigenvalues strictly below each sigma, via signed pivots.

    Vectorized across sigmas; zero (or NaN) pivots are replaced by
    -2^-96 * ||T|| so boundary eigenvalues count as below.
    """
    d = np.asarray(diag, dtype=np.float64)
    f = np.asarray(offdiag, dtype=np.float64)
    s = np.asarray(sigmas, dtype=np.float64)
    m = d.shape[0]
    scale = float(np.max(np.abs(d))) + 2.0 * float(np.max(np.abs(f)))
    tiny = math.ldexp(scale, -96) if scale > 0.0 else 2.0**-1022
    p = d[0] - s
    p = np.where(p == 0.0, -tiny, p)
    counts = (p < 0.0).astype(np.int64)
    f2 = f * f
    for i in range(1, m):
        p = (d[i] - s) - f2[i - 1] / p
        p = np.where(np.isnan(p) | (p == 0.0), -tiny, p)
        counts += p < 0.0
    return counts


def dqds_sweep(q, e, shift, out_q, out_e):
    """One differential qd transform with shift.

        d_1 = q_1 - shift
        for i < n:  qhat_i = d_i + e_i
                    ehat_i = e_i * q_{i+1} / qhat_i
                    d_{i+1} = d_i * q_{i+1} / qhat_i - shift
        qhat_n = d_n

    Raises ShiftRejectedError (with the index) the moment any qhat or d goes
    nonpositive; out_q/out_e are garbage past that point, the inputs are
    untouched.
    """
    n = len(q)
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

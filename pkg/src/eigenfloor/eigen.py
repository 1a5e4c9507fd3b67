"""Ground-truth eigenvalues by Sturm-count bisection.

Independent of the bound formulas and of the dqds engine; every bound and the
dqds singular values are validated against this module. Certification is by
construction: each returned value sits in a bracket whose endpoints have
eigenvalue counts on opposite sides, and the reported tol is the widest
achieved half-width.

Accuracy note: bidiagonal singular values go through the squared (Gram)
matrix, which halves the attainable relative accuracy for tiny singular
values. Fine at the documented condition-number scale (kappa <= 1e8).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .core import LowerBidiagonal, SymTridiagonal, bidiagonal_gram
from .errors import SingularMatrixError

_MAX_BISECT = 4000


@dataclass(frozen=True, eq=False)
class EigenResult:
    """Certified eigenvalues, sorted non-increasing, each within +-tol."""

    values: np.ndarray
    tol: float

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64).reshape(-1)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)


def gershgorin_interval(T: SymTridiagonal) -> tuple[float, float]:
    """Closed interval containing the whole spectrum of T."""
    r = np.zeros(T.m)
    r[:-1] += np.abs(T.offdiag)
    r[1:] += np.abs(T.offdiag)
    return float(np.min(T.diag - r)), float(np.max(T.diag + r))


def sturm_count(T: SymTridiagonal, sigma: float) -> int:
    """Number of eigenvalues of T strictly below sigma.

    Signed LDL^T pivot count with zero pivots replaced by -2^-96 * ||T||, so
    an eigenvalue exactly at sigma counts as below.
    """
    counts = kernels.sturm_counts(
        np.ascontiguousarray(T.diag),
        np.ascontiguousarray(T.offdiag),
        np.array([float(sigma)]),
    )
    return int(counts[0])


def smallest_eigenvalue(T: SymTridiagonal, tol: float) -> float:
    """Bisection for the smallest eigenvalue, certified to +-tol/2.

    Brackets on [max(0, Gershgorin lower), Gershgorin upper]; the zero clamp
    is undone if the matrix turns out to have eigenvalues below zero.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    glo, ghi = gershgorin_interval(T)
    lo = max(0.0, glo)
    hi = np.nextafter(ghi, np.inf)
    if lo > glo and sturm_count(T, lo) > 0:
        lo = np.nextafter(glo, -np.inf)
    for _ in range(_MAX_BISECT):
        if hi - lo < tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(T, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _bisect_all(T: SymTridiagonal, converged):
    """Per-index bisection of the whole spectrum.

    `converged(lo, hi)` marks brackets that are tight enough. Returns the
    final (lo, hi) bracket arrays, ascending in eigenvalue index.
    """
    m = T.m
    diag = np.ascontiguousarray(T.diag)
    off = np.ascontiguousarray(T.offdiag)
    glo, ghi = gershgorin_interval(T)
    lo = np.full(m, np.nextafter(glo, -np.inf))
    hi = np.full(m, np.nextafter(ghi, np.inf))
    targets = np.arange(1, m + 1)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        stuck = (mid <= lo) | (mid >= hi)
        active = ~(converged(lo, hi) | stuck)
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        counts = kernels.sturm_counts(diag, off, mid[idx])
        above = counts >= targets[idx]
        hi[idx[above]] = mid[idx][above]
        lo[idx[~above]] = mid[idx][~above]
    return lo, hi


def full_spectrum(T: SymTridiagonal, tol: float) -> EigenResult:
    """All m eigenvalues by per-index bisection, certified to +-tol.

    The reported tol is the widest achieved half-width (the request is met
    unless machine resolution stops a bracket first).
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = _bisect_all(T, lambda lo, hi: (hi - lo) <= 2.0 * tol)
    values = 0.5 * (lo + hi)
    achieved = 0.5 * float(np.max(hi - lo))
    return EigenResult(values[::-1], max(achieved, 0.0))


def bidiagonal_singular_values(B: LowerBidiagonal, tol: float) -> EigenResult:
    """Singular values of B: square roots of the Gram matrix spectrum.

    Brackets are bisected until they are tol-tight after the square-root
    mapping, so the certification applies to the singular values themselves.
    """
    if not B.is_nonsingular():
        raise SingularMatrixError(int(np.nonzero(B.diag == 0.0)[0][0]))
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    T = bidiagonal_gram(B)

    def tight(lo, hi):
        return np.sqrt(np.maximum(hi, 0.0)) - np.sqrt(np.maximum(lo, 0.0)) <= 2.0 * tol

    lo, hi = _bisect_all(T, tight)
    slo = np.sqrt(np.maximum(lo, 0.0))
    shi = np.sqrt(np.maximum(hi, 0.0))
    values = 0.5 * (slo + shi)
    achieved = 0.5 * float(np.max(shi - slo))
    return EigenResult(values[::-1], max(achieved, 0.0))

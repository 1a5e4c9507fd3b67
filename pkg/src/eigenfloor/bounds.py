"""Closed-form lower bounds on the smallest eigenvalue from (Tr(A^-1),
Tr(A^-2)), the matching upper bound on how large the smallest eigenvalue can
be, and the iterated Laguerre refinement for tridiagonal matrices.

Bound formulas, with a = Tr(A^-1), b = Tr(A^-2), alpha = b/a^2:

    newton      b^(-1/2)
    bailey      2a / (a^2 + b)
    householder (1/a) (3/2 - b/(2 a^2))
    laguerre    (1/a) m / (1 + sqrt((m-1)(m alpha - 1)))

The Laguerre bound dominates the other three and is attained by an explicit
spectrum (see eigenfloor.extremal), so it is the sharpest bound computable
from the trace pair alone.
"""

from __future__ import annotations

import math

from .core import BoundReport, SymTridiagonal, TracePair
from .errors import NotPositiveDefiniteError
from .traces import shifted_traces

# Keeps floating-point inputs that sit exactly on a multiplicity boundary
# (alpha = 1/(q+1)) on the closed side q < a^2/b <= q+1. Safe: the radicand
# vanishes there, so the adjacent q values give identical results.
_Q_NUDGE = 1e-12

DEFAULT_ITER_TOL = 1e-14
DEFAULT_MAX_ITER = 60


def alpha(tp: TracePair) -> float:
    """Shape ratio b/a^2 in [1/m, 1)."""
    return tp.alpha


def newton_bound(tp: TracePair) -> float:
    return tp.b**-0.5


def bailey_bound(tp: TracePair) -> float:
    return 2.0 * tp.a / (tp.a * tp.a + tp.b)


def householder_bound(tp: TracePair) -> float:
    return (1.5 - tp.b / (2.0 * tp.a * tp.a)) / tp.a


def _laguerre_raw(a: float, b: float, m: int) -> float:
    # Radicand is >= 0 for feasible inputs; clamp the -1e-17s rounding leaves.
    rad = (m - 1.0) * (m * b / (a * a) - 1.0)
    return m / (a * (1.0 + math.sqrt(max(rad, 0.0))))


def laguerre_bound(tp: TracePair) -> float:
    """The optimal trace-pair bound; equals the smallest eigenvalue of the
    two-level extremal spectrum realizing (a, b)."""
    return _laguerre_raw(tp.a, tp.b, tp.m)


def multiplicity_q(tp: TracePair) -> int:
    """The unique integer q with q < a^2/b <= q+1, clamped to [1, m-1].

    This is the multiplicity of the smallest eigenvalue in the spectrum that
    maximizes it at fixed traces.
    """
    q = math.ceil(tp.a * tp.a / tp.b - _Q_NUDGE) - 1
    return min(max(q, 1), tp.m - 1)


def gap_upper_bound(tp: TracePair) -> float:
    """Largest value the smallest eigenvalue can take at fixed traces.

    (1/a) q(q+1) / (q + sqrt(q((q+1) alpha - 1))). A supremum: attained
    exactly when q = m-1, approached arbitrarily closely otherwise.
    """
    q = multiplicity_q(tp)
    rad = q * ((q + 1.0) * tp.alpha - 1.0)
    return q * (q + 1.0) / (tp.a * (q + math.sqrt(max(rad, 0.0))))


def gap_ratio(tp: TracePair) -> float:
    """laguerre_bound / gap_upper_bound in (0, 1]; 1 means the Laguerre bound
    is sharp for every matrix with this trace pair."""
    q = multiplicity_q(tp)
    al = tp.alpha
    num = q + math.sqrt(max(q * ((q + 1.0) * al - 1.0), 0.0))
    den = 1.0 + math.sqrt(max((tp.m - 1.0) * (tp.m * al - 1.0), 0.0))
    return tp.m / (q * (q + 1.0)) * num / den


def bound_report(tp: TracePair) -> BoundReport:
    return BoundReport(
        newton=newton_bound(tp),
        bailey=bailey_bound(tp),
        householder=householder_bound(tp),
        laguerre=laguerre_bound(tp),
        alpha=alpha(tp),
        q=multiplicity_q(tp),
        gap_upper=gap_upper_bound(tp),
        gap_ratio=gap_ratio(tp),
    )


def iterated_laguerre(
    T: SymTridiagonal,
    tol: float = DEFAULT_ITER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Monotone Laguerre iteration toward the smallest eigenvalue of T.

    Starting from 0, each step adds the Laguerre bound of the shifted matrix
    T - lam I (computed from its shifted traces), which converges cubically
    to the smallest eigenvalue from below. Stops when the relative step drops
    under tol or after max_iter steps; returns the last iterate.

    A step can land on the smallest eigenvalue itself (exactly so when the
    shifted spectrum is constant, and by rounding near convergence), where
    the shifted traces blow up. The failing iterate is then the eigenvalue
    to machine precision (it is >= by the pivot test and <= up to step
    rounding by the Laguerre property), so it is returned as converged. The
    result can therefore sit a few ulps above the true eigenvalue.

    Raises NotPositiveDefiniteError if T itself is not positive definite.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    lam = 0.0
    for _ in range(max_iter):
        try:
            st = shifted_traces(T, lam)
        except NotPositiveDefiniteError:
            if lam == 0.0:
                raise
            return lam
        new = lam + _laguerre_raw(st.a_shift, st.b_shift, T.m)
        if not new > lam:
            return lam
        if new - lam < tol * new:
            return new
        lam = new
    return lam

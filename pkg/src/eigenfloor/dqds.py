"""Differential qd with shifts (dqds) for bidiagonal singular values, with
pluggable shift strategies backed by the trace bounds.

The working state is the squared representation q_i = diag_i^2,
e_i = sub_i^2 plus the accumulated shift. Each sweep translates the squared
singular values down by the shift; a strategy picks shifts from the trace
bounds of the current state (computed in O(m) per sweep), and the smallest
squared singular value deflates once its coupling is negligible.

A run owns its mutable buffers and is single-threaded; distinct runs are
independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .bounds import laguerre_bound, newton_bound
from .core import LowerBidiagonal, TracePair
from .errors import (
    ConvergenceError,
    FeasibilityError,
    ShiftRejectedError,
    SingularMatrixError,
    TraceOverflowError,
)
from .traces import traces_fast

STRATEGY_KINDS = ("zero", "newton2", "laguerre")

# The bounds are strict lower bounds in exact arithmetic, but the O(m) trace
# recurrences can cross the smallest eigenvalue by ulps; shaving 1e-8 makes
# rejections a non-event on well-conditioned inputs.
DEFAULT_SAFETY = 1.0 - 1e-8

# Deflation threshold in squared units. One deflation perturbs a singular
# value by about sqrt(tol) relative in the clustered worst case, so 1e-28
# keeps the engine comfortably at 1e-10 accuracy.
DEFLATION_TOL = 1e-28

_SWEEPS_PER_N = 30
_SPLIT_PERIOD = 25
_MAX_RETRIES = 4


@dataclass(frozen=True)
class ShiftStrategy:
    """Shift rule plus a safety factor in (0, 1] applied to the bound."""

    kind: str
    safety_factor: float = 1.0

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(f"unknown strategy {self.kind!r}, expected one of {STRATEGY_KINDS}")
        if not 0.0 < self.safety_factor <= 1.0:
            raise ValueError(f"safety_factor must be in (0, 1], got {self.safety_factor}")


def strategy(kind: str, safety_factor: float | None = None) -> ShiftStrategy:
    """Strategy factory applying the documented default safety factor."""
    if safety_factor is None:
        safety_factor = 1.0 if kind == "zero" else DEFAULT_SAFETY
    return ShiftStrategy(kind, safety_factor)


@dataclass(frozen=True, eq=False)
class QdArrays:
    """dqds working state: squared diagonal/coupling arrays and the shift sum."""

    q: np.ndarray
    e: np.ndarray
    sigma_accum: float = 0.0

    def __post_init__(self):
        q = np.array(self.q, dtype=np.float64).reshape(-1)
        e = np.array(self.e, dtype=np.float64).reshape(-1)
        if e.size != q.size - 1:
            raise ValueError(f"e must have length {q.size - 1}, got {e.size}")
        if not np.all(q > 0.0):
            raise ValueError("q entries must be strictly positive")
        if not np.all(e >= 0.0):
            raise ValueError("e entries must be nonnegative")
        if not self.sigma_accum >= 0.0:
            raise ValueError(f"sigma_accum must be nonnegative, got {self.sigma_accum}")
        q.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "sigma_accum", float(self.sigma_accum))

    @property
    def n(self) -> int:
        return int(self.q.size)


@dataclass(frozen=True, eq=False)
class DqdsReport:
    """Outcome of a run: values sorted non-increasing, sweep count, the shift
    applied at each sweep, and how many shift attempts were rejected."""

    singular_values: np.ndarray
    iterations: int
    shifts_applied: tuple
    failures: int

    def __post_init__(self):
        arr = np.array(self.singular_values, dtype=np.float64).reshape(-1)
        arr.setflags(write=False)
        object.__setattr__(self, "singular_values", arr)


def qd_from_bidiagonal(B: LowerBidiagonal) -> QdArrays:
    """Initial qd arrays: q_i = diag_i^2, e_i = sub_i^2, zero shift sum."""
    if not B.is_nonsingular():
        raise SingularMatrixError(int(np.nonzero(B.diag == 0.0)[0][0]))
    return QdArrays(B.diag * B.diag, B.sub * B.sub, 0.0)


def dqds_step(state: QdArrays, shift: float) -> QdArrays:
    """One dqds transform; the represented squared singular values drop by
    `shift`. Raises ShiftRejectedError (state untouched) when the shift is
    not strictly below the smallest of them."""
    out_q = np.empty(state.n)
    out_e = np.empty(state.n - 1)
    kernels.dqds_sweep(state.q, state.e, float(shift), out_q, out_e)
    return QdArrays(out_q, out_e, state.sigma_accum + float(shift))


def _choose(strat: ShiftStrategy, q: np.ndarray, e: np.ndarray) -> float:
    if strat.kind == "zero" or q.size < 2:
        return 0.0
    try:
        tp = traces_fast(LowerBidiagonal(np.sqrt(q), np.sqrt(e)))
    except (FeasibilityError, TraceOverflowError, SingularMatrixError):
        return 0.0
    bound = newton_bound(tp) if strat.kind == "newton2" else laguerre_bound(tp)
    shift = strat.safety_factor * bound
    return shift if shift > 0.0 else 0.0


def choose_shift(strat: ShiftStrategy, state: QdArrays) -> float:
    """Shift for the current state: 0, or safety_factor times the Newton or
    Laguerre bound of the state's trace pair. Falls back to 0 when the trace
    computation fails (near-deflated or degenerate states)."""
    return _choose(strat, state.q, state.e)


def run_dqds(
    B: LowerBidiagonal,
    strat: ShiftStrategy,
    tol: float = DEFLATION_TOL,
    sweep_log: list | None = None,
) -> DqdsReport:
    """Drive dqds to convergence on all singular values of B.

    Deflates the trailing value when e_{n-1} <= tol (q_{n-1} + q_n), splits
    into independent blocks when an interior e_i <= tol sqrt(q_i q_{i+1}),
    and halves a rejected shift up to 4 times before falling back to zero.
    Raises ConvergenceError (carrying a partial report) if the total sweep
    budget of 30 m is exhausted.

    When sweep_log is a list, (sweep_id, shift, smallest q of the active
    block after the sweep) tuples are appended to it.
    """
    state = qd_from_bidiagonal(B)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    cap = _SWEEPS_PER_N * state.n
    segments = [(np.array(state.q), np.array(state.e), 0.0)]
    found: list[float] = []
    shifts: list[float] = []
    sweeps = 0
    failures = 0

    def _report() -> DqdsReport:
        values = np.sqrt(np.sort(np.asarray(found))[::-1])
        return DqdsReport(values, sweeps, tuple(shifts), failures)

    while segments:
        q, e, sigma = segments.pop()
        n = q.size
        qb = np.empty_like(q)
        eb = np.empty_like(e)
        split_countdown = 0
        while True:
            while n >= 2 and e[n - 2] <= tol * (q[n - 2] + q[n - 1]):
                found.append(sigma + q[n - 1])
                n -= 1
            if n == 1:
                found.append(sigma + q[0])
                break
            if split_countdown <= 0:
                split_countdown = _SPLIT_PERIOD
                negligible = np.nonzero(e[: n - 1] <= tol * np.sqrt(q[: n - 1] * q[1:n]))[0]
                if negligible.size:
                    cut = int(negligible[-1])
                    segments.append((q[: cut + 1].copy(), e[:cut].copy(), sigma))
                    q = q[cut + 1 : n].copy()
                    e = e[cut + 1 : n - 1].copy()
                    n = q.size
                    qb = np.empty_like(q)
                    eb = np.empty_like(e)
                    continue
            split_countdown -= 1
            if sweeps >= cap:
                raise ConvergenceError(
                    f"dqds did not converge within {cap} sweeps", report=_report()
                )
            shift = _choose(strat, q[:n], e[: n - 1])
            for attempt in range(_MAX_RETRIES + 2):
                try:
                    kernels.dqds_sweep(q[:n], e[: n - 1], shift, qb[:n], eb[: n - 1])
                    break
                except ShiftRejectedError:
                    failures += 1
                    if shift == 0.0:
                        raise ConvergenceError(
                            "zero-shift sweep rejected: state degenerated below "
                            "machine resolution",
                            report=_report(),
                        ) from None
                    shift = 0.0 if attempt >= _MAX_RETRIES else 0.5 * shift
            sweeps += 1
            shifts.append(shift)
            sigma += shift
            q, qb = qb, q
            e, eb = eb, e
            if sweep_log is not None:
                sweep_log.append((sweeps - 1, shift, float(np.min(q[:n]))))
    return _report()

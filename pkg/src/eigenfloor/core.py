"""Domain types and their constructors: spectra, trace pairs, and the
tridiagonal/bidiagonal matrix representations everything else operates on.

All types are immutable after construction and all operations here are pure
functions, so everything in this module is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FeasibilityError, NotPositiveDefiniteError

# Accept b >= a^2/m * (1 - slack): constant spectra sit exactly on the lower
# boundary and trace accumulation rounds both ways.
FEASIBILITY_SLACK = 1e-12


def _vector(values, name: str, min_len: int) -> np.ndarray:
    arr = np.array(values, dtype=np.float64).reshape(-1)
    if arr.size < min_len:
        raise ValueError(f"{name} needs at least {min_len} entries, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TracePair:
    """The pair (a, b) = (Tr(A^-1), Tr(A^-2)) plus the dimension m.

    Feasibility window: a^2/m <= b < a^2, i.e. alpha = b/a^2 in [1/m, 1).
    The lower edge is attained exactly by constant spectra; the upper edge
    is open because a matrix has at least two interacting eigenvalues.
    """

    a: float
    b: float
    m: int

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or isinstance(self.m, bool):
            raise FeasibilityError(f"dimension must be an integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if self.m < 2:
            raise FeasibilityError(f"dimension must be >= 2, got {self.m}")
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise FeasibilityError("traces must be finite")
        if self.a <= 0.0 or self.b <= 0.0:
            raise FeasibilityError(f"traces must be positive, got a={self.a}, b={self.b}")
        a2 = self.a * self.a
        if self.b < a2 / self.m * (1.0 - FEASIBILITY_SLACK):
            raise FeasibilityError(
                f"infeasible trace pair: b={self.b} < a^2/m={a2 / self.m} (alpha below 1/m)"
            )
        if not self.b < a2:
            raise FeasibilityError(
                f"infeasible trace pair: b={self.b} >= a^2={a2} (alpha must be below 1)"
            )

    @property
    def alpha(self) -> float:
        """Shape ratio b/a^2, confined to [1/m, 1)."""
        return self.b / (self.a * self.a)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Positive eigenvalues stored sorted non-increasing, length >= 2."""

    values: np.ndarray

    def __post_init__(self):
        arr = _vector(self.values, "spectrum", 2)
        if np.any(arr <= 0.0):
            raise ValueError("spectrum entries must be strictly positive")
        srt = np.sort(arr)[::-1].copy()
        srt.setflags(write=False)
        object.__setattr__(self, "values", srt)

    @property
    def m(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    """Symmetric tridiagonal matrix: main diagonal plus one off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = _vector(self.diag, "diag", 2)
        f = _vector(self.offdiag, "offdiag", d.size - 1)
        if f.size != d.size - 1:
            raise ValueError(f"offdiag must have length {d.size - 1}, got {f.size}")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", f)

    @property
    def m(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        m = self.m
        out = np.zeros((m, m))
        out[np.arange(m), np.arange(m)] = self.diag
        idx = np.arange(m - 1)
        out[idx, idx + 1] = self.offdiag
        out[idx + 1, idx] = self.offdiag
        return out


@dataclass(frozen=True, eq=False)
class LowerBidiagonal:
    """Lower bidiagonal matrix: main diagonal plus one subdiagonal.

    Nonsingular exactly when every diagonal entry is nonzero; operations
    that need the inverse raise SingularMatrixError otherwise.
    """

    diag: np.ndarray
    sub: np.ndarray

    def __post_init__(self):
        d = _vector(self.diag, "diag", 2)
        s = _vector(self.sub, "sub", d.size - 1)
        if s.size != d.size - 1:
            raise ValueError(f"sub must have length {d.size - 1}, got {s.size}")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "sub", s)

    @property
    def m(self) -> int:
        return int(self.diag.size)

    def is_nonsingular(self) -> bool:
        return bool(np.all(self.diag != 0.0))

    def to_dense(self) -> np.ndarray:
        m = self.m
        out = np.zeros((m, m))
        out[np.arange(m), np.arange(m)] = self.diag
        idx = np.arange(m - 1)
        out[idx + 1, idx] = self.sub
        return out


@dataclass(frozen=True, eq=False)
class BoundReport:
    """All four lower bounds plus the gap quantities for one trace pair."""

    newton: float
    bailey: float
    householder: float
    laguerre: float
    alpha: float
    q: int
    gap_upper: float
    gap_ratio: float


def spectrum_to_tracepair(s: Spectrum) -> TracePair:
    """Inverse traces of the diagonal realization of a spectrum."""
    x = 1.0 / s.values
    return TracePair(float(np.sum(x)), float(np.sum(x * x)), s.m)


def bidiagonal_gram(B: LowerBidiagonal) -> SymTridiagonal:
    """The Gram matrix B B^T, which is symmetric tridiagonal.

    Entries: (BB^T)_ii = diag_i^2 + sub_{i-1}^2 and
    (BB^T)_{i,i+1} = diag_i * sub_i.
    """
    d = B.diag
    s = B.sub
    t_diag = d * d
    t_diag = np.concatenate(([t_diag[0]], t_diag[1:] + s * s))
    t_off = d[:-1] * s
    return SymTridiagonal(t_diag, t_off)


def tridiagonal_cholesky(T: SymTridiagonal) -> LowerBidiagonal:
    """Lower bidiagonal B with B B^T = T; raises NotPositiveDefiniteError."""
    m = T.m
    d = np.empty(m)
    s = np.empty(m - 1)
    pivot = T.diag[0]
    if not pivot > 0.0:
        raise NotPositiveDefiniteError(0)
    d[0] = np.sqrt(pivot)
    for i in range(m - 1):
        s[i] = T.offdiag[i] / d[i]
        pivot = T.diag[i + 1] - s[i] * s[i]
        if not pivot > 0.0:
            raise NotPositiveDefiniteError(i + 1)
        d[i + 1] = np.sqrt(pivot)
    return LowerBidiagonal(d, s)


def ldlt_pivots(T: SymTridiagonal) -> np.ndarray:
    """Pivots of the LDL^T sweep; all positive iff T is positive definite."""
    m = T.m
    piv = np.empty(m)
    piv[0] = T.diag[0]
    for i in range(m - 1):
        if piv[i] == 0.0:
            piv[i + 1] = -np.inf
        else:
            piv[i + 1] = T.diag[i + 1] - T.offdiag[i] * (T.offdiag[i] / piv[i])
    return piv


def is_positive_definite(T: SymTridiagonal) -> bool:
    return bool(np.all(ldlt_pivots(T) > 0.0))


def normalize_unit_inverse_trace(s: Spectrum) -> Spectrum:
    """Rescale so that Tr(A^-1) = 1. Multiplying A by c maps a to a/c, so the
    scale factor is a itself; alpha is invariant under the rescaling."""
    a = float(np.sum(1.0 / s.values))
    return Spectrum(s.values * a)


def random_spd_spectrum(m: int, rng_seed: int) -> Spectrum:
    """m eigenvalues drawn i.i.d. log-uniform over [1e-3, 1e3], sorted.

    Deterministic for a given seed. The six-decade spread produces trace
    pairs across the whole alpha window.
    """
    if m < 2:
        raise ValueError(f"dimension must be >= 2, got {m}")
    rng = np.random.default_rng(rng_seed)
    return Spectrum(10.0 ** rng.uniform(-3.0, 3.0, size=m))

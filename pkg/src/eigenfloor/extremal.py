"""Spectra that attain the bounds, and the trace-preserving perturbation used
to explore everything in between.

Two constructions realize a given trace pair (a, b, m):

  * laguerre_extremal_spectrum: one simple small eigenvalue below m-1 equal
    large ones; its smallest eigenvalue equals the Laguerre bound exactly.
  * gap_extremal_spectrum: q equal smallest eigenvalues, one intermediate
    level, and m-q-1 huge eigenvalues standing in for infinite ones (their
    reciprocals are a caller-chosen epsilon > 0); its smallest eigenvalue
    approaches the gap upper bound with O(epsilon) error.

The perturbation moves three reciprocals while preserving both power sums
exactly, which is how random realizations of a fixed trace pair are built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import gap_upper_bound, laguerre_bound, multiplicity_q
from .core import (
    Spectrum,
    SymTridiagonal,
    TracePair,
    normalize_unit_inverse_trace,
    random_spd_spectrum,
)
from .eigen import smallest_eigenvalue
from .errors import DomainError

KIND_LAGUERRE = "laguerre_minimizer"
KIND_GAP = "gap_maximizer"

DEFAULT_GAP_EPSILON = 1e-8


@dataclass(frozen=True, eq=False)
class ExtremalSpectrum:
    spectrum: Spectrum
    kind: str
    epsilon: float


def laguerre_extremal_spectrum(tp: TracePair) -> ExtremalSpectrum:
    """The spectrum minimizing the smallest eigenvalue at fixed traces.

    Reciprocals: x_m = (a + sqrt(m(m-1)b - (m-1)a^2)) / m, the other m-1 all
    equal to (a^2 - b) / ((m-1)a + sqrt(...)), which is the cancellation-free
    form of ((m-1)a - sqrt(...)) / (m(m-1)). The smallest eigenvalue 1/x_m
    equals laguerre_bound(tp) to rounding.
    """
    a, b, m = tp.a, tp.b, tp.m
    s = math.sqrt(max(m * (m - 1.0) * b - (m - 1.0) * a * a, 0.0))
    x_m = (a + s) / m
    x_top = (a * a - b) / ((m - 1.0) * a + s)
    values = np.empty(m)
    values[: m - 1] = 1.0 / x_top
    values[m - 1] = 1.0 / x_m
    return ExtremalSpectrum(Spectrum(values), KIND_LAGUERRE, 0.0)


def gap_extremal_spectrum(tp: TracePair, epsilon: float) -> ExtremalSpectrum:
    """The spectrum maximizing the smallest eigenvalue at fixed traces.

    With q = multiplicity_q(tp), m-q-1 reciprocals are set to epsilon (huge
    eigenvalue surrogates) and the remaining two levels solve

        x_lev + q x_m = a - (m-q-1) epsilon
        x_lev^2 + q x_m^2 = b - (m-q-1) epsilon^2

    on the branch with x_lev <= x_m. When q = m-1 no surrogate slots exist,
    epsilon is ignored, and the maximum is attained exactly. Raises
    DomainError when epsilon breaks positivity or the level ordering.
    """
    a, b, m = tp.a, tp.b, tp.m
    q = multiplicity_q(tp)
    n_inf = m - q - 1
    if n_inf == 0:
        eps = 0.0
    else:
        eps = float(epsilon)
        if not eps > 0.0:
            raise DomainError(
                f"epsilon must be strictly positive when q < m-1 (q={q}, m={m})"
            )
    ap = a - n_inf * eps
    bp = b - n_inf * eps * eps
    if not (ap > 0.0 and bp > 0.0):
        raise DomainError(f"epsilon={eps} too large: residual traces nonpositive")
    rad = q * ((q + 1.0) * bp - ap * ap)
    if rad < 0.0:
        if rad < -1e-12 * q * (q + 1.0) * bp:
            raise DomainError(f"epsilon={eps} too large: level system has no real roots")
        rad = 0.0
    s = math.sqrt(rad)
    x_m = (ap * q + s) / (q * (q + 1.0))
    x_lev = (ap * ap - q * bp) / (ap + s)
    if not x_lev > 0.0:
        raise DomainError(f"epsilon={eps} too large: finite level went nonpositive")
    if n_inf and eps > x_lev:
        raise DomainError(f"epsilon={eps} exceeds the finite level {x_lev}")
    values = np.empty(m)
    if n_inf:
        values[:n_inf] = 1.0 / eps
    values[n_inf] = 1.0 / x_lev
    values[n_inf + 1 :] = 1.0 / x_m
    return ExtremalSpectrum(Spectrum(values), KIND_GAP, eps)


def trace_preserving_perturbation(x: float, y: float, z: float, epsilon: float):
    """Shrink the largest of three reciprocals while preserving both power sums.

    Requires x > y >= z >= 0 and 0 < epsilon < x - z. Returns

        x' = x - epsilon, y' = y + t eps, z' = z + (1-t) eps

    with t the positive root of eps t^2 + (y-z-eps) t + (z-x+eps) = 0, so
    x'+y'+z' and x'^2+y'^2+z'^2 match the inputs exactly. y' and z' are
    swapped if the perturbation inverts their order.
    """
    if not (x > y and y >= z and z >= 0.0):
        raise DomainError(f"need x > y >= z >= 0, got ({x}, {y}, {z})")
    if not epsilon > 0.0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if not x - z - epsilon > 0.0:
        raise DomainError(f"epsilon={epsilon} too large for x - z = {x - z}")
    c = y - z - epsilon
    disc = c * c + 4.0 * epsilon * (x - z - epsilon)
    if disc < 0.0:
        raise DomainError("perturbation discriminant is negative")
    t = (-c + math.sqrt(disc)) / (2.0 * epsilon)
    xp = x - epsilon
    yp = y + t * epsilon
    zp = z + (1.0 - t) * epsilon
    if yp < zp:
        yp, zp = zp, yp
    return xp, yp, zp


def perturbed_realization(s: Spectrum, steps: int, rng: np.random.Generator) -> Spectrum:
    """A random spectrum with the same trace pair as s.

    Applies `steps` trace-preserving perturbations to random reciprocal
    triples, skipping draws that would break positivity. Needs m >= 3 (at
    m = 2 the trace pair pins the spectrum completely).
    """
    if s.m < 3:
        raise DomainError("perturbed realizations need m >= 3")
    x = 1.0 / s.values
    for _ in range(steps):
        for _attempt in range(16):
            i, j, k = rng.choice(s.m, size=3, replace=False)
            zl, ym, xh = sorted((x[i], x[j], x[k]))
            if not xh > ym:
                continue
            eps = rng.uniform(0.02, 0.35) * (xh - zl)
            if not (eps > 0.0 and xh - zl - eps > 0.0):
                continue
            xp, yp, zp = trace_preserving_perturbation(xh, ym, zl, eps)
            if zp <= 0.0:
                continue
            x[i], x[j], x[k] = xp, yp, zp
            break
    return Spectrum(1.0 / x)


def figure_ensemble_spectrum(m: int, sample_id: int, seed: int) -> Spectrum:
    """One sample of the sweep ensemble, normalized to Tr(A^-1) = 1.

    A mixture of an i.i.d. log-uniform cloud (75%) and boundary-hugging
    spectra (25%): the extremal spectrum at a random alpha, half the time
    roughed up by a few trace-preserving perturbations. The boundary
    component is what makes the Laguerre bound visibly the lower envelope of
    the sweep. Deterministic in (m, sample_id, seed).
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed, sample_id]))
    if rng.random() < 0.75:
        s = random_spd_spectrum(m, int(rng.integers(2**63)))
    else:
        al = rng.uniform(1.0 / m * (1.0 + 1e-9), 0.995)
        s = laguerre_extremal_spectrum(TracePair(1.0, al, m)).spectrum
        if rng.random() < 0.5:
            s = perturbed_realization(s, int(rng.integers(1, 7)), rng)
    return normalize_unit_inverse_trace(s)


@dataclass(frozen=True, eq=False)
class AttainabilityReport:
    """Measured attainment gaps of both extremal constructions.

    The gap construction converges O(epsilon) with a coefficient that scales
    like m times the bound itself (epsilon is a reciprocal eigenvalue), so
    its pass threshold is max(tol, 100 m epsilon gap_upper).
    """

    laguerre_bound: float
    laguerre_lambda_min: float
    laguerre_rel_gap: float
    gap_upper: float
    gap_lambda_min: float
    gap_rel_gap: float
    gap_tol: float
    epsilon: float
    tol: float

    @property
    def laguerre_pass(self) -> bool:
        return self.laguerre_rel_gap <= self.tol

    @property
    def gap_pass(self) -> bool:
        return self.gap_rel_gap <= self.gap_tol

    @property
    def passed(self) -> bool:
        return self.laguerre_pass and self.gap_pass


def _diagonal_lambda_min(s: Spectrum, tol: float) -> float:
    T = SymTridiagonal(s.values, np.zeros(s.m - 1))
    return smallest_eigenvalue(T, tol)


def verify_attainability(
    tp: TracePair, tol: float, epsilon: float = DEFAULT_GAP_EPSILON
) -> AttainabilityReport:
    """Build both extremal spectra, measure their smallest eigenvalues with
    the bisection oracle, and report the relative gaps to the two bounds."""
    lb = laguerre_bound(tp)
    gu = gap_upper_bound(tp)
    oracle_tol_l = lb * min(tol, 1e-12) / 8.0
    oracle_tol_g = gu * min(tol, 1e-12) / 8.0
    lam_l = _diagonal_lambda_min(laguerre_extremal_spectrum(tp).spectrum, oracle_tol_l)
    gs = gap_extremal_spectrum(tp, epsilon)
    lam_g = _diagonal_lambda_min(gs.spectrum, oracle_tol_g)
    return AttainabilityReport(
        laguerre_bound=lb,
        laguerre_lambda_min=lam_l,
        laguerre_rel_gap=abs(lam_l - lb) / lb,
        gap_upper=gu,
        gap_lambda_min=lam_g,
        gap_rel_gap=abs(lam_g - gu) / gu,
        gap_tol=max(tol, 100.0 * tp.m * gs.epsilon * gu),
        epsilon=gs.epsilon,
        tol=tol,
    )

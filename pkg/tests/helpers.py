"""Shared generators for the test suite."""

import numpy as np

from eigenfloor import (
    FeasibilityError,
    LowerBidiagonal,
    TraceOverflowError,
    TracePair,
    bidiagonal_gram,
    laguerre_bound,
    spectrum_to_tracepair,
    traces_fast,
)
from eigenfloor.core import Spectrum
from eigenfloor.eigen import gershgorin_interval


def random_bidiagonal(rng, m, radius=None, signs=False):
    """Random lower bidiagonal with log-uniform entries of the given decade
    radius; the default radius shrinks with m to keep conditioning sane."""
    r = min(1.0, 2.5 / np.sqrt(m)) if radius is None else radius
    d = 10.0 ** rng.uniform(-r, r, m)
    s = 10.0 ** rng.uniform(-r, r, m - 1)
    if signs:
        d *= rng.choice([-1.0, 1.0], m)
        s *= rng.choice([-1.0, 1.0], m - 1)
    return LowerBidiagonal(d, s)


def kappa_estimate(B):
    """Upper estimate of cond(B B^T): Gershgorin top over the Laguerre floor."""
    try:
        tp = traces_fast(B)
    except (FeasibilityError, TraceOverflowError):
        return np.inf
    return gershgorin_interval(bidiagonal_gram(B))[1] / laguerre_bound(tp)


def conditioned_bidiagonal(rng, m, kappa_max=1e8, max_tries=200):
    """Random bidiagonal with estimated condition number below kappa_max."""
    for _ in range(max_tries):
        B = random_bidiagonal(rng, m)
        if kappa_estimate(B) <= kappa_max:
            return B
    raise AssertionError(f"no kappa<={kappa_max} draw in {max_tries} tries at m={m}")


def random_feasible_tracepair(rng, m=None):
    """Feasible trace pair, alternating between spectrum-derived pairs and
    direct draws of alpha across the whole window."""
    if m is None:
        m = int(rng.integers(2, 51))
    if rng.random() < 0.5:
        lam = 10.0 ** rng.uniform(-3, 3, m)
        return spectrum_to_tracepair(Spectrum(lam))
    a = float(np.exp(rng.uniform(-2.0, 2.0)))
    al = float(rng.uniform(1.0 / m * (1 + 1e-9), 1.0 - 1e-9))
    return TracePair(a, al * a * a, m)

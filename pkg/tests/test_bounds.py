import math

import numpy as np
import pytest

from eigenfloor import (
    SymTridiagonal,
    TracePair,
    alpha,
    bailey_bound,
    bidiagonal_gram,
    bound_report,
    gap_ratio,
    gap_upper_bound,
    householder_bound,
    iterated_laguerre,
    laguerre_bound,
    multiplicity_q,
    newton_bound,
    smallest_eigenvalue,
    spectrum_to_tracepair,
)
from eigenfloor.core import Spectrum
from helpers import conditioned_bidiagonal, random_feasible_tracepair

TP_IDENTITY3 = TracePair(3.0, 3.0, 3)
TP_124 = TracePair(1.75, 1.3125, 3)
TP_12 = TracePair(1.5, 1.25, 2)
TP_GOLDEN = TracePair(3.0, 7.0, 2)


def test_newton_examples():
    assert newton_bound(TP_IDENTITY3) == pytest.approx(1 / math.sqrt(3.0), rel=1e-15)
    assert newton_bound(TP_12) == pytest.approx(0.8944271909999159, rel=1e-15)
    assert newton_bound(TP_124) == pytest.approx(0.8728715609439696, rel=1e-15)


def test_bailey_examples():
    assert bailey_bound(TP_IDENTITY3) == pytest.approx(0.5, rel=1e-15)
    assert bailey_bound(TP_12) == pytest.approx(6.0 / 7.0, rel=1e-15)
    assert bailey_bound(TP_124) == pytest.approx(0.8, rel=1e-15)


def test_householder_examples():
    assert householder_bound(TP_IDENTITY3) == pytest.approx(4.0 / 9.0, rel=1e-15)
    assert householder_bound(TP_12) == pytest.approx(0.8148148148148148, rel=1e-14)
    assert householder_bound(TP_124) == pytest.approx(0.7346938775510204, rel=1e-14)


def test_laguerre_examples():
    assert laguerre_bound(TP_IDENTITY3) == pytest.approx(1.0, rel=1e-15)
    assert laguerre_bound(TP_12) == pytest.approx(1.0, rel=1e-14)
    # radicand 4/7; frozen from direct evaluation, cross-checked by the
    # extremal spectrum tests
    assert laguerre_bound(TP_124) == pytest.approx(0.9762842159261823, rel=1e-14)


def test_alpha_examples():
    assert alpha(TP_IDENTITY3) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert alpha(TP_124) == pytest.approx(3.0 / 7.0, rel=1e-15)
    assert alpha(TP_GOLDEN) == pytest.approx(7.0 / 9.0, rel=1e-15)


def test_multiplicity_q_examples():
    assert multiplicity_q(TP_IDENTITY3) == 2
    assert multiplicity_q(TracePair(5.0, 5.0, 5)) == 4
    assert multiplicity_q(TP_124) == 2
    # a^2/b exactly 2: the boundary stays on the q = 1 side
    assert multiplicity_q(TracePair(2.0, 2.0, 3)) == 1
    assert multiplicity_q(TP_GOLDEN) == 1


def test_gap_upper_examples():
    # alpha = 1/m: radicand vanishes and the bound collapses onto laguerre
    assert gap_upper_bound(TP_IDENTITY3) == pytest.approx(1.0, rel=1e-15)
    assert gap_upper_bound(TP_124) == pytest.approx(1.2440710539815456, rel=1e-14)
    # m=2 reconstructs the spectrum, so this equals the true smallest
    # eigenvalue (3-sqrt(5))/2 of [[1,1],[1,2]]
    assert gap_upper_bound(TP_GOLDEN) == pytest.approx((3 - math.sqrt(5)) / 2, rel=1e-14)


def test_gap_ratio_examples():
    assert gap_ratio(TP_IDENTITY3) == pytest.approx(1.0, rel=1e-15)
    assert gap_ratio(TP_124) == pytest.approx(0.7847495629784699, rel=1e-13)
    assert gap_ratio(TP_124) == pytest.approx(
        laguerre_bound(TP_124) / gap_upper_bound(TP_124), rel=1e-13
    )


def test_dominance_on_random_pairs():
    rng = np.random.default_rng(21)
    for _ in range(2000):
        tp = random_feasible_tracepair(rng)
        ll = laguerre_bound(tp)
        for other in (newton_bound(tp), bailey_bound(tp), householder_bound(tp)):
            assert ll - other >= -1e-13 * ll


def test_sandwich_on_random_spectra():
    rng = np.random.default_rng(22)
    for _ in range(2000):
        s = Spectrum(10.0 ** rng.uniform(-3, 3, 5))
        tp = spectrum_to_tracepair(s)
        lam_min = s.values[-1]
        assert laguerre_bound(tp) <= lam_min * (1 + 1e-10)
        assert lam_min <= gap_upper_bound(tp) * (1 + 1e-10)


def test_m2_exactness():
    rng = np.random.default_rng(23)
    for _ in range(500):
        lam = np.sort(10.0 ** rng.uniform(-3, 3, 2))
        if lam[1] / lam[0] < 1 + 1e-6:
            continue
        tp = spectrum_to_tracepair(Spectrum(lam))
        assert laguerre_bound(tp) == pytest.approx(lam[0], rel=1e-12)
        assert gap_upper_bound(tp) == pytest.approx(lam[0], rel=1e-12)


def test_ratio_consistency_grid():
    for m in (3, 5, 10, 100):
        for al in np.linspace(1.0 / m * (1 + 1e-9), 1 - 1e-9, 300):
            tp = TracePair(1.0, float(al), m)
            direct = gap_ratio(tp)
            quotient = laguerre_bound(tp) / gap_upper_bound(tp)
            assert direct == pytest.approx(quotient, rel=1e-12)
            assert 0.0 < direct <= 1.0 + 1e-15


def test_regime_large_multiplicity():
    # q = m-1 for alpha in [1/m, 1/(m-1)): ratio decreasing from 1 toward
    # m/(2(m-1))
    for m in (3, 5, 10):
        grid = np.linspace(1.0 / m * (1 + 1e-12), 1.0 / (m - 1) * (1 - 1e-12), 400)
        vals = []
        for al in grid:
            tp = TracePair(1.0, float(al), m)
            assert multiplicity_q(tp) == m - 1
            vals.append(gap_ratio(tp))
        vals = np.array(vals)
        assert np.all(np.diff(vals) <= 1e-12)
        # the ratio leaves 1 like sqrt(alpha - 1/m), so the first grid point
        # sits ~sqrt(m eps) below it
        assert vals[0] == pytest.approx(1.0, abs=1e-5)
        assert vals[-1] == pytest.approx(m / (2.0 * (m - 1)), abs=1e-6)
        assert np.all(vals > 0.5)


def test_regime_value_one_exact_at_lower_edge():
    # m=4, a=2, b=1 puts alpha = 1/4 exactly; everything is exact
    assert gap_ratio(TracePair(2.0, 1.0, 4)) == 1.0


def test_regime_simple_multiplicity():
    # q = 1 for alpha in [1/2, 1): ratio increasing toward 1, minimum at 1/2
    for m in (3, 5, 10, 100):
        grid = np.linspace(0.5, 1 - 1e-12, 400)
        vals = []
        for al in grid:
            tp = TracePair(1.0, float(al), m)
            assert multiplicity_q(tp) == 1
            vals.append(gap_ratio(tp))
        vals = np.array(vals)
        assert np.all(np.diff(vals) >= -1e-12)
        closed_form = (1 / math.sqrt(2)) / (
            math.sqrt(2) / m + math.sqrt((1 - 1 / m) * (1 - 2 / m))
        )
        assert vals[0] == pytest.approx(closed_form, rel=1e-12)
        for k in range(1, 13):
            tp = TracePair(1.0, 1.0 - 10.0**-k, m)
            vals_k = gap_ratio(tp)
            assert vals_k <= 1.0 + 1e-15
        assert gap_ratio(TracePair(1.0, 1.0 - 1e-12, m)) >= 1.0 - 1e-6


def test_regime_intermediate_inverse_sqrt_q():
    # 1 << q << m: the ratio scales like 1/sqrt(q)
    m = 10_000
    for q in (30, 100, 300):
        al = 0.5 * (1.0 / (q + 1) + 1.0 / q)
        tp = TracePair(1.0, al, m)
        assert multiplicity_q(tp) == q
        product = gap_ratio(tp) * math.sqrt(q)
        assert 0.5 <= product <= 2.0


def test_bound_report_consistency():
    rep = bound_report(TP_124)
    assert rep.q == 2
    assert rep.laguerre >= max(rep.newton, rep.bailey, rep.householder)
    assert rep.gap_ratio == pytest.approx(rep.laguerre / rep.gap_upper, rel=1e-13)


def test_iterated_laguerre_first_step_is_the_bound():
    T = SymTridiagonal([1.0, 2.0, 4.0], [0.0, 0.0])
    one_step = iterated_laguerre(T, tol=1e-14, max_iter=1)
    assert one_step == pytest.approx(laguerre_bound(TP_124), rel=1e-15)


def test_iterated_laguerre_examples():
    assert iterated_laguerre(SymTridiagonal(np.ones(4), np.zeros(3)), 1e-12, 60) == 1.0
    T = SymTridiagonal([2.0, 2.0], [-1.0])
    assert iterated_laguerre(T, 1e-12, 60) == pytest.approx(1.0, rel=1e-10)
    T = SymTridiagonal([1.0, 2.0, 4.0], [0.0, 0.0])
    assert iterated_laguerre(T, 1e-12, 60) == pytest.approx(1.0, rel=1e-10)


def test_iterated_laguerre_monotone_below_truth():
    rng = np.random.default_rng(24)
    for _ in range(40):
        m = int(rng.integers(2, 60))
        T = bidiagonal_gram(conditioned_bidiagonal(rng, m))
        truth = smallest_eigenvalue(T, tol=1e-300)
        iterates = [iterated_laguerre(T, tol=1e-14, max_iter=k) for k in (1, 2, 4, 8, 60)]
        assert np.all(np.diff(iterates) >= 0)
        # slack covers the intrinsic eps*kappa uncertainty of both routes
        for it in iterates:
            assert it <= truth * (1 + 1e-8)
        assert iterates[-1] == pytest.approx(truth, rel=1e-8)

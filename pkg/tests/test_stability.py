import math

import numpy as np
import pytest

from leapfrog import (
    DiffSumState,
    NotConverged,
    TransformedParams,
    ZeroB1,
    classify_fixed_point,
    critical_elasticity,
    find_fixed_points,
    flip_elasticity,
    jacobian_at,
    lyapunov_largest,
    period_one_condition,
    step_zw,
    transform_params,
)
from leapfrog.errors import InsufficientSamples
from leapfrog.fixed_points import FixedPointResult
from leapfrog.orbits import OrbitConfig
from leapfrog.stability import Jacobian2x2, stability_of, trace_condition_elasticities

from helpers import LEAPFROG_SETS, random_model_params, tp_for
from oracles import central_difference_jacobian

TP_FIG1 = TransformedParams(1.06, 0.74, 0.58, 0.12, 105.0)
SEED = OrbitConfig().initial


def _step(tp):
    def f(z, w):
        out = step_zw(DiffSumState(z, w), tp)
        return out.z, out.w
    return f


# --- jacobian ----------------------------------------------------------------

def test_jacobian_at_origin():
    j = jacobian_at(0.0, TP_FIG1)
    assert j.j11 == pytest.approx(1 - 0.58 - 105 * 0.74 / 4, abs=1e-13)
    assert j.j21 == pytest.approx(0.12 + 105 * 1.06 / 4, abs=1e-13)
    assert j.j12 == TP_FIG1.beta1 and j.j22 == 1 - TP_FIG1.alpha1


def test_jacobian_linear_part():
    j = jacobian_at(0.37, TP_FIG1.with_c(0.0))
    assert (j.j11, j.j12, j.j21, j.j22) == (1 - 0.58, 0.12, 0.12, 1 - 0.58)


def test_jacobian_matches_central_differences(rng):
    for p in random_model_params(rng, 100):
        tp = transform_params(p)
        z, w = rng.uniform(-1.0, 1.0, size=2)
        fd = central_difference_jacobian(_step(tp), z, w, h=1e-6)
        assert np.max(np.abs(jacobian_at(z, tp).as_array() - fd)) <= 1e-6


def test_jacobian_finite_at_extreme_arguments():
    j = jacobian_at(100.0, TP_FIG1.with_c(1e4))
    assert all(math.isfinite(v) for v in (j.j11, j.j12, j.j21, j.j22))


# --- eigenvalues and classification ------------------------------------------

def test_fig1_fixed_point_is_unstable():
    (fp,) = find_fixed_points(TP_FIG1)
    rep = classify_fixed_point(fp, TP_FIG1)
    assert rep.classification == "unstable"
    assert not rep.is_stable


def test_linear_case_is_stable():
    tp = TP_FIG1.with_c(0.0)
    (fp,) = find_fixed_points(tp)
    rep = classify_fixed_point(fp, tp)
    assert rep.spectral_radius == pytest.approx(max(abs(0.42 + 0.12), abs(0.42 - 0.12)), abs=1e-14)
    assert rep.is_stable and rep.classification == "stable-node"


def test_stable_spiral_and_marginal():
    assert stability_of(Jacobian2x2(0.5, -0.5, 0.5, 0.5)).classification == "stable-spiral"
    assert stability_of(Jacobian2x2(1.0, 0.0, 0.0, 0.5)).classification == "marginal"
    assert stability_of(Jacobian2x2(1.1, 0.0, 0.0, 0.5)).classification == "unstable"


def test_report_trace_and_determinant_exact():
    j = jacobian_at(-0.03, TP_FIG1)
    rep = stability_of(j)
    assert rep.trace == j.j11 + j.j22
    assert rep.determinant == j.j11 * j.j22 - j.j12 * j.j21


def test_eigenvalues_solve_characteristic_polynomial(rng):
    for p in random_model_params(rng, 100):
        tp = transform_params(p)
        rep = stability_of(jacobian_at(float(rng.uniform(-1, 1)), tp))
        for lam in rep.eigenvalues:
            assert abs(lam * lam - rep.trace * lam + rep.determinant) < 1e-10
        assert rep.spectral_radius == max(abs(v) for v in rep.eigenvalues)


def test_classification_stable_across_solver_tolerance(rng):
    for p in random_model_params(rng, 40):
        tp = transform_params(p)
        loose = find_fixed_points(tp, tol=1e-10)
        tight = find_fixed_points(tp, tol=1e-13)
        # a 1e-10 root can miss the 1e-10 residual gate, so label via the Jacobian directly
        label = lambda f: stability_of(jacobian_at(f.z0, tp)).classification
        assert [label(f) for f in loose] == [label(f) for f in tight]


def test_unconverged_fixed_point_rejected():
    with pytest.raises(NotConverged):
        classify_fixed_point(FixedPointResult(0.5, 0.5, 1.0, 1.0, False), TP_FIG1)


# --- trace diagnostics ---------------------------------------------------------

def test_period_one_condition_linear():
    value, dist = period_one_condition(0.0, TP_FIG1.with_c(0.0))
    assert value == pytest.approx(8 * 0.42, abs=1e-14)
    assert dist == pytest.approx(8 - 8 * 0.42, abs=1e-14)


def test_period_one_condition_at_printed_threshold():
    value, dist = period_one_condition(0.0, TP_FIG1.with_c(27.891891892))
    assert value == pytest.approx(-17.28, abs=1e-8)
    assert dist == pytest.approx(9.28, abs=1e-8)


def test_period_one_condition_independent_of_c_when_b1_zero():
    tp = TransformedParams(1.0, 0.0, 0.5, 0.1, 0.0)
    values = {period_one_condition(0.0, tp.with_c(c))[0] for c in (0.0, 10.0, 200.0)}
    assert values == {4.0}


def test_trace_condition_elasticities():
    lo, hi = trace_condition_elasticities(TP_FIG1)
    assert lo == pytest.approx(-8 * 0.58 / 0.74)
    assert hi == pytest.approx((16 - 8 * 0.58) / 0.74)
    assert period_one_condition(0.0, TP_FIG1.with_c(hi))[1] == pytest.approx(0.0, abs=1e-12)


def test_critical_elasticity_values():
    assert critical_elasticity(TP_FIG1) == pytest.approx(27.891891892, abs=1e-9)
    assert critical_elasticity(TransformedParams(1.0, 16.0, 0.0, 0.0, 0.0)) == 1.0
    assert critical_elasticity(TransformedParams(1.15, -0.25, 0.55, -0.15, 0.0)) == pytest.approx(-81.6)


def test_critical_elasticity_zero_b1():
    with pytest.raises(ZeroB1):
        critical_elasticity(TransformedParams(1.0, 0.0, 0.5, 0.0, 0.0))


def test_flip_elasticity_is_eigenvalue_crossing():
    c_flip = flip_elasticity(TP_FIG1)
    assert 14.0 < c_flip < 15.0
    for c, stable in ((c_flip - 0.01, True), (c_flip + 0.01, False)):
        tp = TP_FIG1.with_c(c)
        (fp,) = find_fixed_points(tp)
        rep = classify_fixed_point(fp, tp)
        assert rep.is_stable is stable
        assert min(v.real for v in rep.eigenvalues) == pytest.approx(-1.0, abs=0.01)


# --- lyapunov ----------------------------------------------------------------

def test_lyapunov_negative_with_attracting_fixed_point():
    assert lyapunov_largest(SEED, TP_FIG1.with_c(1.0)) < 0


def test_lyapunov_positive_on_chaotic_attractor():
    assert lyapunov_largest(SEED, TP_FIG1) > 1e-3


@pytest.mark.xfail(strict=True, reason="this attractor is quasi-periodic; exponent is ~+1e-4, not negative")
def test_lyapunov_negative_on_fig6_leapfrogging():
    assert lyapunov_largest(SEED, tp_for(LEAPFROG_SETS["fig6"], 150.0)) < 0


def test_lyapunov_fig6_leapfrogging_not_chaotic():
    assert lyapunov_largest(SEED, tp_for(LEAPFROG_SETS["fig6"], 150.0)) <= 1e-3


def test_lyapunov_linear_map():
    tp = TransformedParams(1.06, 0.74, 0.58, 0.12, 0.0)
    assert lyapunov_largest(SEED, tp) == pytest.approx(math.log(0.42 + 0.12), abs=1e-3)


def test_lyapunov_requires_samples():
    with pytest.raises(InsufficientSamples):
        lyapunov_largest(SEED, TP_FIG1, n_sample=999)

"""Monte Carlo period integration: exactness, reproducibility, consistency."""

import math

import pytest

from feynperiods.divergence import IntegrandSpec
from feynperiods.graphs import Edge, ExternalLeg, FeynmanGraph
from feynperiods.periods import PeriodEstimate, g_minus_2_two_loop, integrate
from feynperiods.polynomials import SparsePolynomial


def banana(mass_sq=0):
    return FeynmanGraph(
        vertices=("u", "v"),
        edges=(Edge(1, ("u", "v"), mass_sq), Edge(2, ("u", "v"), mass_sq)),
        legs=(ExternalLeg("u", (1, 0, 0, 0)), ExternalLeg("v", (-1, 0, 0, 0))),
    )


# 1 / (a1*a2 + (a1+a2)^2) on the simplex reduces to integral of
# 1/(t(1-t)+1) over (0,1), which elementary calculus evaluates exactly.
MASSIVE_BANANA_EXACT = 4 * math.asinh(0.5) / math.sqrt(5)
MASSIVE_SPEC = IntegrandSpec(psi_power=0, xi_power=1)


def test_massless_banana_is_exact():
    # psi = a1 + a2 equals 1 on the simplex, so every sample is exactly 1
    est = integrate(banana(), samples=10_000, seed=0)
    assert est.value == 1.0
    assert est.std_error == 0.0
    assert est.samples == 10_000 and est.workers == 1


def test_massive_banana_matches_closed_form():
    est = integrate(banana(1), MASSIVE_SPEC, samples=200_000, seed=11)
    assert est.std_error < 2e-4
    assert abs(est.value - MASSIVE_BANANA_EXACT) < 4 * est.std_error


def test_affine_chart_agrees():
    simplex = integrate(banana(1), MASSIVE_SPEC, samples=200_000, seed=11)
    affine = integrate(banana(1), MASSIVE_SPEC, samples=200_000, seed=11, chart="affine")
    assert abs(affine.value - MASSIVE_BANANA_EXACT) < 4 * affine.std_error
    joint = math.hypot(simplex.std_error, affine.std_error)
    assert abs(simplex.value - affine.value) < 4 * joint


def test_error_shrinks_like_root_n():
    small = integrate(banana(1), MASSIVE_SPEC, samples=200_000, seed=11)
    big = integrate(banana(1), MASSIVE_SPEC, samples=400_000, seed=11)
    ratio = small.std_error / big.std_error
    assert 1.25 < ratio < 1.60  # sqrt(2) up to sampling noise


def test_reproducible_for_any_worker_count():
    # chunk c always draws from stream (seed, c); partials reduce in chunk
    # order, so the result cannot depend on how chunks land on workers
    runs = [
        integrate(banana(1), MASSIVE_SPEC, samples=600_000, seed=4, workers=w)
        for w in (1, 3, 3)
    ]
    assert len({r.value for r in runs}) == 1
    assert len({r.std_error for r in runs}) == 1
    assert runs[1].workers == 3


def test_boundary_bias_weight_is_unbiased():
    # integrand is exactly 1, so the estimate is the mean importance weight
    est = integrate(banana(), samples=50_000, seed=3, boundary_bias=0.7)
    assert est.std_error > 0
    assert abs(est.value - 1.0) < 4 * est.std_error


def test_boundary_bias_validation():
    with pytest.raises(ValueError, match="simplex"):
        integrate(banana(), chart="affine", boundary_bias=0.5)
    for bad in (0.0, -0.3, 1.5):
        with pytest.raises(ValueError, match="boundary_bias"):
            integrate(banana(), boundary_bias=bad)


def test_rejects_bad_inputs():
    triangle = FeynmanGraph(
        vertices=("x", "y", "z"),
        edges=(Edge(1, ("x", "y")), Edge(2, ("y", "z")), Edge(3, ("z", "x"))),
    )
    with pytest.raises(ValueError, match="degree"):
        integrate(triangle)  # degree 3 - 2*1 = 1
    with pytest.raises(ValueError, match="samples"):
        integrate(banana(), samples=1)
    with pytest.raises(ValueError, match="workers"):
        integrate(banana(), workers=0)
    with pytest.raises(ValueError, match="chart"):
        integrate(banana(), chart="torus")

    tadpole = FeynmanGraph(vertices=("u",), edges=(Edge(1, ("u", "u")),))
    spec = IntegrandSpec(numerator=SparsePolynomial.variable(1))
    with pytest.raises(ValueError, match="two edges"):
        integrate(tadpole, spec)

    fourgraph = FeynmanGraph(
        vertices=("v1", "v2", "v3"),
        edges=(
            Edge(1, ("v1", "v2")),
            Edge(2, ("v2", "v3")),
            Edge(3, ("v3", "v1")),
            Edge(4, ("v3", "v1")),
        ),
    )
    singular = IntegrandSpec(
        numerator=SparsePolynomial.variable(1), psi_power=1, xi_power=1
    )
    with pytest.raises(ValueError, match="vanishes"):
        integrate(fourgraph, singular)  # no legs, no masses: xi == 0


def test_period_estimate_validation():
    with pytest.raises(ValueError, match="samples"):
        PeriodEstimate(value=1.0, std_error=0.0, samples=0, seed=0)
    with pytest.raises(ValueError, match="std_error"):
        PeriodEstimate(value=1.0, std_error=-1.0, samples=10, seed=0)


def test_g_minus_2_closed_form():
    assert abs(g_minus_2_two_loop() - (-0.3284789655791937928)) < 1e-14

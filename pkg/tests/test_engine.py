"""Quadrature application, caching, aliasing identity, interval splitting."""

import math

import numpy as np
import pytest

from helpers import split_reference, supported_sizes
from singquad.engine import (
    Integrand,
    SampleCache,
    aliasing_error,
    cc_integrate_by_coeffs,
    integrate,
    integrate_split,
    pairwise_sum,
)
from singquad.errors import ConfigError, DomainError, InputError, IntegrandError, SizeError
from singquad.rules import RuleKind, cc_rule_direct, cc_rule_fast, gl_rule
from singquad.singular import SingularityProfile
from singquad.transform import ChebGrid


def brute_cc_error(n, m):
    """Rule error on the degree-m Chebyshev basis polynomial, by evaluation."""
    rule = cc_rule_direct(n)  # any even n, not just transform sizes
    samples = np.cos(m * ChebGrid(n).angles)
    exact = 0.0 if m % 2 else 2.0 / (1.0 - float(m) ** 2)
    return exact - float(rule.weights @ samples)


# ---------------------------------------------------------------------------
# integrate


def test_integrate_is_exact_on_x_squared_at_n2():
    result = integrate(cc_rule_fast(2), lambda x: x * x)
    assert abs(result.approx - 2.0 / 3.0) <= 1e-15


def test_integrate_degree_four_basis_poly_on_n2_gives_two():
    # all three nodes of the n = 2 rule see the value 1
    result = integrate(cc_rule_fast(2), lambda x: 8 * x**4 - 8 * x**2 + 1)
    assert result.approx == pytest.approx(2.0, abs=1e-14)


def test_integrate_root_singularity_at_n64():
    result = integrate(cc_rule_fast(64), lambda x: math.sqrt(1.0 - x))
    assert abs(result.approx - 4.0 * math.sqrt(2.0) / 3.0) <= 1e-3


def test_result_records_rule_metadata():
    result = integrate(cc_rule_fast(8), math.exp)
    assert result.n == 8
    assert result.kind is RuleKind.CLENSHAW_CURTIS
    assert result.evals_used == 9
    gl = integrate(gl_rule(8), math.exp)
    assert gl.evals_used == 8
    assert gl.kind is RuleKind.GAUSS_LEGENDRE


@pytest.mark.parametrize("n", [8, 64, 256, 1024])
def test_odd_integrands_annihilate(n):
    for f in (lambda x: x**3, lambda x: x**7 * math.cos(x), lambda x: math.sin(3 * x)):
        result = integrate(cc_rule_fast(n), f)
        assert abs(result.approx) <= 1e-14


def test_integrand_wrapper_rejects_non_callables():
    with pytest.raises(InputError):
        Integrand(42)


def test_non_finite_sample_raises_with_the_offending_node():
    bad = lambda x: math.inf if x == 1.0 else x
    with pytest.raises(IntegrandError, match="non-finite") as info:
        integrate(cc_rule_fast(4), bad)
    assert info.value.node == 1.0


# ---------------------------------------------------------------------------
# coefficient-space path


def test_coeff_path_constant():
    assert cc_integrate_by_coeffs(lambda x: 1.0, 4, SampleCache(4)).approx == pytest.approx(
        2.0, abs=1e-15
    )


def test_coeff_path_x_squared():
    got = cc_integrate_by_coeffs(lambda x: x * x, 4, SampleCache(4)).approx
    assert abs(got - 2.0 / 3.0) <= 1e-15


def test_coeff_path_equals_weight_path_on_a_degree8_polynomial():
    rng = np.random.default_rng(7)
    c = rng.uniform(-1.0, 1.0, 9)
    f = lambda x: float(np.polyval(c, x))
    by_coeff = cc_integrate_by_coeffs(f, 8, SampleCache(8)).approx
    by_rule = integrate(cc_rule_fast(8), f).approx
    assert abs(by_coeff - by_rule) <= 1e-13 * abs(by_rule)


@pytest.mark.parametrize("f", [math.exp, lambda x: 1.0 / (2.0 + x)], ids=["exp", "rational"])
def test_two_path_equivalence_on_smooth_integrands(f):
    for n in supported_sizes(1024, minimum=2):
        if n % 2:
            continue
        cache = SampleCache(n)
        by_rule = integrate(cc_rule_fast(n), f, cache)
        by_coeff = cc_integrate_by_coeffs(f, n, cache)
        assert abs(by_coeff.approx - by_rule.approx) <= 1e-13 * abs(by_rule.approx), n


def test_coeff_path_rejects_odd_sizes():
    with pytest.raises(SizeError):
        cc_integrate_by_coeffs(math.exp, 5, SampleCache(4))


# ---------------------------------------------------------------------------
# sample cache


def test_cache_spends_exactly_4n_plus_1_evaluations_over_three_doublings():
    calls = 0

    def f(x):
        nonlocal calls
        calls += 1
        return math.exp(x)

    n = 16
    cache = SampleCache(n)
    results = [integrate(cc_rule_fast(size), f, cache) for size in (n, 2 * n, 4 * n)]
    assert calls == 4 * n + 1
    assert cache.eval_count == 4 * n + 1
    assert [r.evals_used for r in results] == [n + 1, n, 2 * n]
    # a repeat at an already-cached size is free
    assert integrate(cc_rule_fast(2 * n), f, cache).evals_used == 0
    assert calls == 4 * n + 1


def test_cached_and_fresh_results_are_identical():
    f = lambda x: math.cos(3.0 * x)
    cache = SampleCache(8)
    integrate(cc_rule_fast(32), f, cache)  # fill past the target size
    assert integrate(cc_rule_fast(16), f, cache).approx == integrate(cc_rule_fast(16), f).approx


def test_cache_size_validation():
    with pytest.raises(SizeError):
        SampleCache(3)
    with pytest.raises(SizeError):
        SampleCache(0)
    cache = SampleCache(8)
    with pytest.raises(SizeError):
        cache.ensure(math.exp, 12)  # not a doubling of the base
    with pytest.raises(SizeError):
        cache.ensure(math.exp, 6)
    with pytest.raises(SizeError):
        cache.values_at(8)  # nothing stored yet
    cache.ensure(math.exp, 16)
    with pytest.raises(SizeError):
        cache.values_at(6)
    assert cache.values_at(8).shape == (9,)


def test_cache_refuses_gauss_rules():
    with pytest.raises(ConfigError):
        integrate(gl_rule(8), math.exp, SampleCache(8))


# ---------------------------------------------------------------------------
# aliasing identity


def test_aliasing_hand_values():
    assert aliasing_error(2, 4) == pytest.approx(-32.0 / 15.0, rel=1e-15)
    assert aliasing_error(8, 6) == 0.0
    assert aliasing_error(4, 10) == pytest.approx(-2.0 / 99.0 + 2.0 / 3.0, rel=1e-15)
    assert aliasing_error(8, 3) == 0.0  # odd degrees are annihilated
    assert aliasing_error(8, 0) == 0.0


def test_aliasing_formula_matches_node_evaluation_everywhere():
    """Formula vs brute-force rule application, all even n <= 32, m <= 200."""
    for n in range(2, 33, 2):
        for m in range(0, 201):
            formula = aliasing_error(n, m)
            brute = brute_cc_error(n, m)
            assert abs(formula - brute) <= 1e-12, (n, m)


def test_aliasing_argument_validation():
    with pytest.raises(SizeError):
        aliasing_error(5, 10)
    with pytest.raises(DomainError):
        aliasing_error(4, -2)


# ---------------------------------------------------------------------------
# pairwise summation


def test_pairwise_sum_tracks_fsum():
    rng = np.random.default_rng(11)
    values = rng.uniform(-1.0, 1.0, 1000)
    err = abs(pairwise_sum(values) - math.fsum(values))
    assert err <= 2e-15 * np.sum(np.abs(values))


def test_pairwise_sum_edge_cases():
    assert pairwise_sum([]) == 0.0
    assert pairwise_sum([3.25]) == 3.25


# ---------------------------------------------------------------------------
# interval splitting


def test_split_at_a_kink_restores_polynomial_exactness():
    assert abs(integrate_split(abs, 0.0, 8) - 1.0) <= 1e-13


def test_split_of_a_constant():
    assert integrate_split(lambda x: 1.0, 0.3, 8) == pytest.approx(2.0, abs=1e-14)


def test_split_interior_root_singularity_against_reference():
    f = lambda x: math.sqrt(abs(x - 0.25))
    got = integrate_split(f, 0.25, 256, method="cc")
    assert abs(got - split_reference(f, 0.25)) <= 1e-5


def test_split_with_extrapolation_reaches_near_machine_accuracy():
    f = lambda x: math.sqrt(abs(x - 0.25))
    profiles = (SingularityProfile(0.5, 0.0), SingularityProfile(0.0, 0.5))
    got = integrate_split(f, 0.25, 64, method="extrapolated", q=2, profiles=profiles)
    exact = (2.0 / 3.0) * (1.25**1.5 + 0.75**1.5)
    assert abs(got - exact) <= 1e-12


def test_split_argument_validation():
    with pytest.raises(DomainError):
        integrate_split(abs, 1.5, 8)
    with pytest.raises(DomainError):
        integrate_split(abs, -1.0, 8)
    with pytest.raises(ConfigError):
        integrate_split(abs, 0.0, 8, method="extrapolated", q=1)  # profiles missing
    with pytest.raises(ConfigError):
        integrate_split(abs, 0.0, 8, method="simpson")

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monodyn.errors import InputRangeError
from monodyn.mean_values import (
    analytic_C_mean,
    analytic_I,
    analytic_N,
    default_checkpoints,
    density_mean_gcd,
    dirichlet_D,
    divergence_probe,
    empirical_mean,
    mobius_invert_multiples,
)
from monodyn.numtheory import divisors, max_exponent, v_s

from oracles import brute_v_s, naive_divisors, naive_is_prime


class TestAnalyticI:
    def test_goldens(self):
        assert analytic_I(12, 1) == 6
        assert analytic_I(8, 2) == 8
        assert analytic_I(1, 1) == 1
        assert analytic_I(1, 7) == 1

    def test_s_one_is_divisor_count(self):
        for m in range(1, 2000):
            assert analytic_I(m, 1) == len(naive_divisors(m))

    @given(
        st.integers(min_value=1, max_value=2000),
        st.integers(min_value=1, max_value=6),
    )
    def test_is_divisor_sum_of_unit_power_counts(self, m, s):
        assert analytic_I(m, s) == sum(brute_v_s(s, l) for l in naive_divisors(m))


class TestAnalyticN:
    def test_goldens(self):
        assert analytic_N(1, 1, 2) == 2
        assert analytic_N(2, 1, 2) == 1
        assert analytic_N(3, 1, 2) == 1
        assert analytic_N(2, 1, 3) == 2
        for s in range(1, 5):
            assert analytic_N(1, s, 2) == 2

    def test_fixed_point_mean_counts_divisors(self):
        # r = 1: mean is I(n - 1, s) + 1; for s = 1 that is tau(n-1) + 1
        for n in range(2, 40):
            assert analytic_N(1, 1, n) == len(naive_divisors(n - 1)) + 1

    def test_cycle_mean_goldens(self):
        assert analytic_C_mean(3, 1, 2) == Fraction(1, 3)
        assert analytic_C_mean(2, 1, 2) == Fraction(1, 2)
        assert analytic_C_mean(1, 1, 2) == 2

    def test_prime_period_means_are_positive(self):
        for r in (2, 3, 5, 7, 11, 13):
            for n in (2, 3, 10):
                for s in (1, 2, 3):
                    assert analytic_N(r, s, n) >= 1, (r, s, n)

    def test_input_errors(self):
        with pytest.raises(InputRangeError):
            analytic_N(0, 1, 2)
        with pytest.raises(InputRangeError):
            analytic_N(1, 0, 2)
        with pytest.raises(InputRangeError):
            analytic_N(1, 1, 1)


class TestMobiusInversion:
    @given(st.integers(min_value=1, max_value=500), st.data())
    def test_recovers_summand(self, m, data):
        divs = naive_divisors(m)
        h = {d: data.draw(st.integers(min_value=-50, max_value=50)) for d in divs}

        def g(r: int) -> int:
            return sum(h[j] for j in divs if j % r == 0)

        for r in divs:
            assert mobius_invert_multiples(g, m, r) == h[r]

    def test_rejects_non_divisor(self):
        with pytest.raises(InputRangeError):
            mobius_invert_multiples(lambda j: 1, 12, 5)


class TestDirichletRoute:
    def test_density_mean_matches_divisor_count(self):
        for m in range(1, 300):
            assert density_mean_gcd(m, 1) == len(naive_divisors(m))

    @given(
        st.integers(min_value=1, max_value=400),
        st.integers(min_value=1, max_value=5),
    )
    def test_density_mean_matches_divisor_sum_route(self, m, s):
        val = density_mean_gcd(m, s)
        assert val.denominator == 1
        assert val == analytic_I(m, s)

    def test_class_densities_sum_to_one(self):
        # the density of {p : gcd(m, p**s - 1) = l} over all l | m is 1
        for m, s in ((12, 1), (36, 2), (100, 3), (7, 4)):
            total = sum(
                mobius_invert_multiples(
                    lambda j: Fraction(v_s(s, j), euler_phi_local(j)), m, l
                )
                for l in divisors(m)
            )
            assert total == 1, (m, s)

    def test_golden(self):
        assert dirichlet_D(1, 1, 13) == 7

    def test_agrees_with_analytic(self):
        for r in range(1, 7):
            for s in range(1, 5):
                for n in range(2, 11):
                    assert dirichlet_D(r, s, n) == analytic_N(r, s, n), (r, s, n)


def euler_phi_local(j: int) -> int:
    return sum(1 for k in range(1, j + 1) if math.gcd(k, j) == 1)


class TestEmpiricalSweep:
    def test_degenerate_case_is_exactly_two(self):
        rep = empirical_mean(1, 1, 2, 1000)
        assert rep.analytic == 2
        assert [c.t for c in rep.checkpoints] == [10, 100, 1000]
        for c in rep.checkpoints:
            assert c.mean == 2
            assert c.total == 2 * c.prime_count
        assert rep.final_abs_error == 0

    def test_prime_counts_at_checkpoints(self):
        rep = empirical_mean(2, 1, 2, 100)
        assert [c.prime_count for c in rep.checkpoints] == [4, 25]

    def test_small_sweep_exact_totals(self):
        # r=1, s=1, n=3: per prime the count is gcd(2, p-1) + 1
        rep = empirical_mean(1, 1, 3, 50, checkpoints=[50])
        primes = [p for p in range(2, 51) if naive_is_prime(p)]
        want = sum(math.gcd(2, p - 1) + 1 for p in primes)
        assert rep.checkpoints[-1].total == want
        assert rep.checkpoints[-1].mean == Fraction(want, len(primes))

    def test_worker_count_does_not_change_report(self):
        one = empirical_mean(2, 2, 3, 30000, checkpoints=[101, 9999, 30000])
        three = empirical_mean(
            2, 2, 3, 30000, checkpoints=[101, 9999, 30000], workers=3
        )
        assert one == three

    def test_checkpoints_sorted_and_terminal(self):
        rep = empirical_mean(1, 1, 5, 500, checkpoints=[300, 20, 500, 20])
        ts = [c.t for c in rep.checkpoints]
        assert ts == [20, 300, 500]

    def test_missing_terminal_checkpoint_is_added(self):
        rep = empirical_mean(1, 1, 5, 500, checkpoints=[100])
        assert [c.t for c in rep.checkpoints] == [100, 500]

    def test_error_shrinks_on_long_range(self):
        rep = empirical_mean(1, 1, 3, 200000, checkpoints=[1000, 200000])
        small, big = rep.checkpoints
        err_small = abs(small.mean - rep.analytic)
        err_big = abs(big.mean - rep.analytic)
        assert err_big < err_small
        assert err_big < Fraction(1, 50)

    def test_input_errors(self):
        with pytest.raises(InputRangeError):
            empirical_mean(1, 1, 2, 1)
        with pytest.raises(InputRangeError):
            empirical_mean(0, 1, 2, 100)
        with pytest.raises(InputRangeError):
            empirical_mean(1, 1, 2, 100, checkpoints=[200])
        with pytest.raises(InputRangeError):
            empirical_mean(1, 1, 2, 100, checkpoints=[1])
        with pytest.raises(InputRangeError):
            empirical_mean(1, 1, 2, 100, workers=0)

    def test_default_checkpoints(self):
        assert default_checkpoints(1000) == [10, 100, 1000]
        assert default_checkpoints(2500) == [10, 100, 1000, 2500]
        assert default_checkpoints(10) == [10]


class TestDivergence:
    def test_partial_sums_grow(self):
        series = divergence_probe(1, 2, 31)
        assert series.r_values == tuple(range(1, 32))
        for a, b in zip(series.point_sums, series.point_sums[1:]):
            assert b >= a
        for a, b in zip(series.cycle_sums, series.cycle_sums[1:]):
            assert b >= a

    def test_strict_growth_at_primes(self):
        series = divergence_probe(1, 2, 31)
        sums = {r: v for r, v in zip(series.r_values, series.point_sums)}
        for r in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            assert sums[r] > sums[r - 1], r

    def test_values_match_analytic(self):
        series = divergence_probe(2, 3, 8)
        running = 0
        for r, got in zip(series.r_values, series.point_sums):
            running += analytic_N(r, 2, 3)
            assert got == running

    def test_cap_reported(self):
        cap = max_exponent(2)
        with pytest.raises(InputRangeError) as err:
            divergence_probe(1, 2, cap + 1)
        assert str(cap) in str(err.value)

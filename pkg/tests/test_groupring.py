"""Tests for integer group-ring arithmetic and the tiling condition check."""

import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from latile.abelian import GroupElement, GroupSpec, elements, rank_of
from latile.construct import golay11_tiling
from latile.groupring import (
    GroupRingElement,
    OrderMismatchError,
    all_ones,
    as_code_set,
    check_tiling_conditions,
    coefficient_of,
    from_multiset,
    linear_combine,
    multiply,
    one,
    power_map,
    reduce_mod,
    star,
    support,
    zero,
)
from latile.tiling import induced_code_set

from helpers import all_specs_up_to, naive_multiply

Z5 = GroupSpec((5,))
Z19 = GroupSpec((19,))


def ring(spec, *coeffs):
    return GroupRingElement(spec, tuple(coeffs))


class TestConstruction:
    def test_from_empty_multiset_is_zero(self):
        assert from_multiset(Z5, []) == zero(Z5)

    def test_from_multiset_counts_repeats(self):
        g = GroupElement(Z5, (1,))
        e = GroupElement(Z5, (0,))
        assert from_multiset(Z5, [e, g, g]) == ring(Z5, 1, 2, 0, 0, 0)

    def test_from_multiset_rejects_foreign_elements(self):
        with pytest.raises(Exception):
            from_multiset(Z5, [GroupElement(Z19, (1,))])

    def test_one_and_all_ones(self):
        assert one(Z5) == ring(Z5, 1, 0, 0, 0, 0)
        assert all_ones(Z5) == ring(Z5, 1, 1, 1, 1, 1)

    def test_length_must_match_order(self):
        with pytest.raises(ValueError):
            GroupRingElement(Z5, (1, 2, 3))


class TestLinearCombine:
    def test_cancellation(self):
        a = ring(Z5, 1, 2, 0, -1, 4)
        assert linear_combine(1, a, -1, a) == zero(Z5)

    def test_weighted_sum(self):
        assert linear_combine(2, all_ones(Z5), 1, one(Z5)) == ring(Z5, 3, 2, 2, 2, 2)

    def test_mismatched_specs_rejected(self):
        with pytest.raises(Exception):
            linear_combine(1, one(Z5), 1, one(Z19))


class TestMultiply:
    def test_identity_law(self):
        a = ring(Z5, 3, -1, 0, 2, 5)
        assert multiply(a, one(Z5)) == a
        assert multiply(one(Z5), a) == a

    def test_small_worked_example(self):
        # (e + g + g^4)^2 = 3e + 2g + g^2 + g^3 + 2g^4 in Z[Z_5]
        t = ring(Z5, 1, 1, 0, 0, 1)
        assert multiply(t, t) == ring(Z5, 3, 2, 1, 1, 2)

    def test_all_ones_absorbs(self):
        a = ring(Z5, 1, -2, 3, 0, 1)
        total = sum(a.coefficients)
        assert multiply(a, all_ones(Z5)) == GroupRingElement(Z5, (total,) * 5)

    def test_mismatched_specs_rejected(self):
        with pytest.raises(Exception):
            multiply(one(Z5), one(Z19))


class TestUnaryOps:
    def test_star_strips_identity_coefficient(self):
        a = ring(Z5, 7, 1, 2, 3, 4)
        assert star(a) == ring(Z5, 0, 1, 2, 3, 4)
        assert star(star(a)) == star(a)

    def test_negation_pushforward_reverses_group_elements(self):
        a = ring(Z5, 7, 1, 2, 3, 4)
        assert power_map(a, -1) == ring(Z5, 7, 4, 3, 2, 1)
        assert power_map(power_map(a, -1), -1) == a

    def test_reduce_mod(self):
        a = ring(Z5, 5, -1, 7, 3, 0)
        assert reduce_mod(a, 3) == ring(Z5, 2, 2, 1, 0, 0)
        with pytest.raises(ValueError):
            reduce_mod(a, 1)

    def test_power_map_examples(self):
        a = ring(Z5, 0, 1, 1, 0, 0)
        # g -> 2g sends g^1 to g^2 and g^2 to g^4
        assert power_map(a, 2) == ring(Z5, 0, 0, 1, 0, 1)
        assert power_map(a, 1) == a

    def test_power_map_folds_kernel(self):
        a = ring(Z5, 0, 1, 1, 1, 1)
        assert power_map(a, 5) == ring(Z5, 4, 0, 0, 0, 0)

    def test_support_and_coefficient(self):
        a = ring(Z5, 0, 3, 0, -1, 0)
        assert [rank_of(g) for g in support(a)] == [1, 3]
        assert coefficient_of(a, GroupElement(Z5, (3,))) == -1


class TestCodeSet:
    def test_accepts_zero_one_vectors(self):
        code = as_code_set(ring(Z5, 1, 0, 1, 1, 0))
        assert code == ring(Z5, 1, 0, 1, 1, 0)

    def test_rejects_multiplicities(self):
        with pytest.raises(ValueError):
            as_code_set(ring(Z5, 1, 2, 0, 0, 0))
        with pytest.raises(ValueError):
            as_code_set(ring(Z5, -1, 0, 0, 0, 0))


SMALL_SPECS = [s for s in all_specs_up_to(30) if s.order >= 2]


@st.composite
def ring_pairs(draw, count=2, low=-4, high=4):
    spec = draw(st.sampled_from(SMALL_SPECS))
    out = []
    for _ in range(count):
        coeffs = draw(
            st.lists(
                st.integers(low, high),
                min_size=spec.order,
                max_size=spec.order,
            )
        )
        out.append(GroupRingElement(spec, tuple(coeffs)))
    return tuple(out)


@given(ring_pairs())
def test_multiply_matches_naive_oracle(pair):
    a, b = pair
    assert multiply(a, b) == naive_multiply(a, b)


@given(ring_pairs())
def test_multiplication_commutes(pair):
    a, b = pair
    assert multiply(a, b) == multiply(b, a)


@settings(max_examples=60)
@given(ring_pairs(count=3))
def test_multiplication_associates_and_distributes(triple):
    a, b, c = triple
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    lhs = multiply(a, linear_combine(1, b, 1, c))
    rhs = linear_combine(1, multiply(a, b), 1, multiply(a, c))
    assert lhs == rhs


@given(ring_pairs(), st.integers(min_value=-2, max_value=6))
def test_power_map_is_a_ring_homomorphism(pair, t):
    a, b = pair
    assert power_map(multiply(a, b), t) == multiply(power_map(a, t), power_map(b, t))
    assert power_map(linear_combine(1, a, 1, b), t) == linear_combine(
        1, power_map(a, t), 1, power_map(b, t)
    )


@given(ring_pairs(count=1), st.integers(0, 5), st.integers(0, 5))
def test_power_map_composes(args, s, t):
    (a,) = args
    assert power_map(power_map(a, s), t) == power_map(a, s * t)


def test_power_map_by_unit_permutes_multiset():
    rng = random.Random(7)
    for t in (2, 3, 18):
        assert math.gcd(t, 19) == 1
        a = GroupRingElement(Z19, tuple(rng.randint(0, 3) for _ in range(19)))
        assert sorted(power_map(a, t).coefficients) == sorted(a.coefficients)


class TestTilingConditions:
    def test_golay_code_set_satisfies_all_conditions(self):
        hom = golay11_tiling()
        code = as_code_set(induced_code_set(hom))
        report = check_tiling_conditions(code, 11)
        assert report.size == 23
        assert report.size_ok
        assert report.contains_identity
        assert report.symmetric
        assert report.equation_holds
        assert report.passed

    def test_dropping_identity_fails(self):
        hom = golay11_tiling()
        code = as_code_set(induced_code_set(hom))
        coeffs = list(code.coefficients)
        coeffs[0] = 0
        broken = GroupRingElement(code.spec, tuple(coeffs))
        report = check_tiling_conditions(broken, 11)
        assert not report.contains_identity
        assert not report.passed

    def test_group_order_must_match_ball_size(self):
        with pytest.raises(OrderMismatchError):
            check_tiling_conditions(one(Z5), 3)

    def test_rejects_multiset_input(self):
        bad = ring(Z19, *([2] + [0] * 18))
        with pytest.raises(ValueError):
            check_tiling_conditions(bad, 3)

    def test_no_symmetric_code_works_in_z19(self):
        """Exhaustive n=3 check over Z_19: e plus three inverse pairs, 84 ways."""
        pair_mins = list(range(1, 10))
        passed = 0
        for picks in combinations(pair_mins, 3):
            coeffs = [0] * 19
            coeffs[0] = 1
            for v in picks:
                coeffs[v] = 1
                coeffs[19 - v] = 1
            report = check_tiling_conditions(
                GroupRingElement(Z19, tuple(coeffs)), 3
            )
            if report.passed:
                passed += 1
            assert report.size_ok and report.symmetric and report.contains_identity
        assert passed == 0

    def test_square_coefficients_split_by_doubling_support(self):
        """Off-identity coefficients of code^2 are 3 exactly on the doubled
        support and 2 elsewhere (the pruning dichotomy used by the search)."""
        hom = golay11_tiling()
        code = as_code_set(induced_code_set(hom))
        square = multiply(code, code)
        doubled = {rank_of(g) for g in support(power_map(code, 2))}
        for g in elements(code.spec):
            r = rank_of(g)
            if r == 0:
                assert square.coefficients[0] == 23
            elif r in doubled:
                assert square.coefficients[r] == 3
            else:
                assert square.coefficients[r] == 2

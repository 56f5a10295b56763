import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from zqhash.analysis import (
    MAX_SWEEP_MODULUS,
    bias,
    closed_inner_shallow,
    closed_inner_single,
    collision_resistance,
    cosine_sum_check,
    epsilon_of_biased_set,
    equality_test_prob,
    shift_normalize,
    simulated_inner,
)
from zqhash.hashing import BiasedSet, HashForm, ParamSet
from zqhash.statevec import StateVector, basis_state, zero_state


def bias_oracle(biased, x):
    # Straightforward complex phase sum, one term at a time.
    total = sum(
        cmath.exp(2j * math.pi * b * x / biased.q) for b in biased.elements
    )
    return abs(total) / biased.size


@st.composite
def biased_cases(draw):
    q = draw(st.integers(2, 64))
    d = draw(st.integers(1, 8))
    return BiasedSet(q, tuple(draw(st.integers(0, q - 1)) for _ in range(d)))


class TestBias:
    def test_x_zero_is_one(self):
        assert bias(BiasedSet(8, (0, 1, 2, 3)), 0) == 1.0

    def test_vanishing_point(self):
        assert_allclose(bias(BiasedSet(8, (0, 1, 2, 3)), 4), 0.0, atol=1e-12)

    def test_singleton_always_one(self):
        for x in range(5):
            assert_allclose(bias(BiasedSet(5, (3,)), x), 1.0)

    @given(biased_cases(), st.integers(0, 63))
    @settings(max_examples=80, deadline=None)
    def test_matches_complex_sum(self, biased, x_raw):
        x = x_raw % biased.q
        assert_allclose(bias(biased, x), bias_oracle(biased, x), atol=1e-12)

    @pytest.mark.parametrize("x", [-1, 8])
    def test_rejects_out_of_range(self, x):
        with pytest.raises(ValueError):
            bias(BiasedSet(8, (0, 1)), x)


class TestShiftNormalize:
    def test_example(self):
        assert shift_normalize(BiasedSet(8, (3, 5, 6))).elements == (0, 2, 3)

    def test_idempotent_once_anchored(self):
        shifted = shift_normalize(BiasedSet(8, (3, 5, 6)))
        assert shift_normalize(shifted).elements == shifted.elements

    @given(biased_cases())
    @settings(max_examples=60, deadline=None)
    def test_preserves_bias_everywhere(self, biased):
        shifted = shift_normalize(biased)
        assert shifted.elements[0] == 0
        for x in range(biased.q):
            assert_allclose(bias(shifted, x), bias(biased, x), atol=1e-12)


class TestEpsilonSweep:
    def test_half_modulus_pair_is_maximally_biased(self):
        report = epsilon_of_biased_set(BiasedSet(4, (0, 2)))
        assert_allclose(report.epsilon, 1.0)
        assert report.worst_x == 2
        assert_allclose(report.values[0], 0.0, atol=1e-12)

    def test_values_match_scalar_bias(self):
        # The sweep and the scalar path can differ by an ulp: numpy's
        # complex exp picks different code paths for long and short arrays.
        biased = BiasedSet(17, (0, 3, 5, 11))
        report = epsilon_of_biased_set(biased)
        for x, value in report.table():
            assert abs(value - bias(biased, x)) < 1e-15

    def test_epsilon_is_max_and_worst_x_is_smallest(self):
        # Bias is symmetric under x -> q - x, so the peak appears twice and
        # the report must point at the smaller residue.
        report = epsilon_of_biased_set(BiasedSet(5, (0, 1)))
        assert report.epsilon == max(report.values)
        assert report.worst_x == 1
        assert_allclose(report.values[3], report.values[0])

    def test_table_spans_nonzero_residues(self):
        report = epsilon_of_biased_set(BiasedSet(9, (0, 1, 4)))
        assert [x for x, _ in report.table()] == list(range(1, 9))

    def test_rejects_oversized_modulus(self):
        with pytest.raises(ValueError):
            epsilon_of_biased_set(BiasedSet(MAX_SWEEP_MODULUS + 1, (0, 1)))

    def test_large_modulus_block_sweep(self):
        # Exercises the blocked path with a modulus above the block size.
        q = 1 << 12
        report = epsilon_of_biased_set(BiasedSet(q, (0, 1)))
        # Adjacent pair: bias at x is |cos(pi*x/q)|, worst at x=1.
        assert report.worst_x == 1
        assert_allclose(report.epsilon, abs(math.cos(math.pi / q)), atol=1e-12)


class TestClosedInner:
    def test_equal_inputs_give_one(self):
        assert closed_inner_single(ParamSet(4, (1,)), 3, 3) == 1.0

    def test_single_param(self):
        value = closed_inner_single(ParamSet(4, (1,)), 1, 0)
        assert value == math.cos(math.pi / 4)

    def test_sum_qubit_squares_single_factor(self):
        value = closed_inner_single(ParamSet(4, (1,)), 1, 0, include_sum_qubit=True)
        assert_allclose(value, 0.5, atol=1e-12)

    def test_worked_product(self):
        value = closed_inner_shallow(ParamSet(8, (1, 2)), 1, 0)
        assert abs(value - 0.25) < 1e-15

    def test_shallow_equals_single_with_sum(self):
        params = ParamSet(13, (2, 5, 9))
        for x1 in range(13):
            for x2 in range(13):
                assert closed_inner_shallow(params, x1, x2) == closed_inner_single(
                    params, x1, x2, include_sum_qubit=True
                )

    def test_depends_only_on_difference(self):
        params = ParamSet(11, (3, 7))
        for shift in (1, 4, 9):
            assert closed_inner_single(params, 5, 2) == closed_inner_single(
                params, (5 + shift) % 11 + 11, (2 + shift) % 11 + 11
            )

    def test_signed_value_can_be_negative(self):
        value = closed_inner_single(ParamSet(5, (4,)), 4, 0)
        assert value < 0


class TestSimulatedInner:
    @pytest.mark.parametrize(
        "form,with_sum",
        [
            (HashForm.SINGLE_QUBIT, False),
            (HashForm.SINGLE_QUBIT, True),
            (HashForm.SHALLOW, False),
            (HashForm.STANDARD, False),
        ],
    )
    def test_matches_closed_form_signed(self, form, with_sum):
        rng = np.random.default_rng(31)
        for _ in range(8):
            q = int(rng.integers(2, 30))
            n = int(rng.integers(1, 5))
            params = ParamSet(q, tuple(int(v) for v in rng.integers(0, q, n)))
            x1, x2 = int(rng.integers(0, q)), int(rng.integers(0, q))
            simulated = simulated_inner(form, params, x1, x2, with_sum)
            if form is HashForm.SINGLE_QUBIT:
                closed = closed_inner_single(params, x1, x2, with_sum)
            else:
                closed = closed_inner_shallow(params, x1, x2)
            assert abs(simulated - closed) < 1e-10

    def test_same_input_gives_unit_overlap(self):
        params = ParamSet(9, (2, 4))
        assert abs(simulated_inner(HashForm.SHALLOW, params, 5, 5) - 1.0) < 1e-12

    def test_magnitude_depends_only_on_difference(self):
        params = ParamSet(7, (1, 5))
        for form, with_sum in (
            (HashForm.SHALLOW, False),
            (HashForm.SINGLE_QUBIT, False),
            (HashForm.SINGLE_QUBIT, True),
        ):
            for x1 in range(7):
                for x2 in range(7):
                    lhs = abs(simulated_inner(form, params, x1, x2, with_sum))
                    rhs = abs(
                        simulated_inner(form, params, (x1 - x2) % 7, 0, with_sum)
                    )
                    assert abs(lhs - rhs) < 1e-10

    def test_standard_needs_set_for_other_forms(self):
        with pytest.raises(ValueError):
            simulated_inner(HashForm.SHALLOW, BiasedSet(4, (0, 1)), 1, 0)


class TestCollisionResistance:
    def test_single_param_report(self):
        report = collision_resistance(ParamSet(4, (1,)), HashForm.SINGLE_QUBIT)
        assert report.epsilon == math.cos(math.pi / 4)
        assert report.worst_x == 1
        assert_allclose(report.values[1], 0.0, atol=1e-12)

    def test_all_zero_set_is_worthless(self):
        report = collision_resistance(ParamSet(6, (0, 0)), HashForm.SHALLOW)
        assert report.epsilon == 1.0
        assert report.worst_x == 1

    def test_values_match_scalar_closed_form_bitwise(self):
        params = ParamSet(19, (4, 7, 11))
        report = collision_resistance(
            params, HashForm.SINGLE_QUBIT, include_sum_qubit=True
        )
        for x, value in report.table():
            assert value == abs(closed_inner_single(params, x, 0, True))

    def test_shallow_and_standard_share_values(self):
        params = ParamSet(23, (3, 8))
        shallow = collision_resistance(params, HashForm.SHALLOW)
        standard = collision_resistance(params, HashForm.STANDARD)
        assert np.array_equal(shallow.values, standard.values)

    def test_sum_qubit_never_hurts(self):
        rng = np.random.default_rng(77)
        for _ in range(10):
            q = int(rng.integers(2, 50))
            n = int(rng.integers(1, 4))
            params = ParamSet(q, tuple(int(v) for v in rng.integers(0, q, n)))
            bare = collision_resistance(params, HashForm.SINGLE_QUBIT)
            summed = collision_resistance(params, HashForm.SINGLE_QUBIT, True)
            assert summed.values.max() <= bare.values.max() + 1e-12

    def test_rejects_oversized_modulus(self):
        with pytest.raises(ValueError):
            collision_resistance(
                ParamSet(MAX_SWEEP_MODULUS + 1, (1,)), HashForm.SINGLE_QUBIT
            )


class TestCosineSumCheck:
    def test_quarter_turn_pair(self):
        cos_part, full = cosine_sum_check(BiasedSet(4, (0, 1)), 1)
        assert_allclose(cos_part, 0.5)
        assert_allclose(full, math.sqrt(0.5))

    def test_cancelling_pair(self):
        cos_part, full = cosine_sum_check(BiasedSet(4, (0, 2)), 1)
        assert_allclose([cos_part, full], [0.0, 0.0], atol=1e-12)

    def test_rejects_zero_x(self):
        with pytest.raises(ValueError):
            cosine_sum_check(BiasedSet(4, (0, 1)), 0)

    @given(biased_cases(), st.integers(1, 63))
    @settings(max_examples=80, deadline=None)
    def test_cosine_never_exceeds_magnitude(self, biased, x_raw):
        x = 1 + x_raw % (biased.q - 1) if biased.q > 2 else 1
        cos_part, full = cosine_sum_check(biased, x)
        assert cos_part <= full + 1e-12

    def test_full_part_is_bias(self):
        biased = BiasedSet(12, (0, 2, 5))
        for x in range(1, 12):
            assert cosine_sum_check(biased, x)[1] == bias(biased, x)


class TestEqualityTestProb:
    def test_identical_states_accept(self):
        state = basis_state(2, 3)
        assert equality_test_prob(state, state) == 1.0

    def test_orthogonal_states_coin_flip(self):
        assert equality_test_prob(zero_state(1), basis_state(1, 1)) == 0.5

    def test_partial_overlap(self):
        a = StateVector(1, np.array([1.0, 0.0]))
        b = StateVector(1, np.array([0.25, math.sqrt(1 - 0.0625)]))
        assert equality_test_prob(a, b) == 0.53125

    def test_sign_of_overlap_is_invisible(self):
        a = StateVector(1, np.array([1.0, 0.0]))
        b = StateVector(1, np.array([-0.25, math.sqrt(1 - 0.0625)]))
        assert equality_test_prob(a, b) == 0.53125

    def test_rejects_width_mismatch(self):
        with pytest.raises(ValueError):
            equality_test_prob(zero_state(1), zero_state(2))

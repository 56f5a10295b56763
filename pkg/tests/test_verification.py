import pytest

from zqhash.verification import (
    check_resistance_equivalence,
    check_shallow_inner_product,
    check_single_qubit_inner_product,
    check_ucr_decomposition,
    run_all_checks,
)

CHECK_NAMES = [
    "ucr_decomposition",
    "single_qubit_inner_product",
    "shallow_inner_product",
    "resistance_equivalence",
]


class TestCleanRun:
    def test_all_checks_pass_on_a_small_sweep(self):
        results = run_all_checks(q_max=12, n_max=4, trials=2)
        assert [result.name for result in results] == CHECK_NAMES
        for result in results:
            assert result.passed, result.name
            assert result.max_deviation < 1e-10
            assert result.detail

    def test_deterministic(self):
        first = run_all_checks(q_max=8, n_max=3, trials=2, seed=99)
        second = run_all_checks(q_max=8, n_max=3, trials=2, seed=99)
        assert [r.max_deviation for r in first] == [r.max_deviation for r in second]

    @pytest.mark.parametrize("seed", [0, 31337])
    def test_passes_for_any_seed(self, seed):
        # The properties hold for all inputs; the seed only picks samples.
        for result in run_all_checks(q_max=10, n_max=3, trials=2, seed=seed):
            assert result.passed, result.name


class TestFaultInjection:
    # A corrupted angle convention must be caught; these prove the checks
    # are able to fail.

    def test_ucr_check_catches_scaled_angles(self):
        result = check_ucr_decomposition(
            n_max=3, vectors_per_n=3, gate_angle_scale=0.5
        )
        assert not result.passed
        assert result.max_deviation > 1e-3

    def test_single_qubit_check_catches_scaled_angles(self):
        result = check_single_qubit_inner_product(
            [5, 9], sets_per_q=3, gate_angle_scale=0.5
        )
        assert not result.passed

    def test_shallow_check_catches_scaled_angles(self):
        result = check_shallow_inner_product(
            [5, 9], sets_per_q=3, gate_angle_scale=0.5
        )
        assert not result.passed

    def test_equivalence_check_catches_scaled_angles(self):
        result = check_resistance_equivalence(
            [5, 9], sets_per_q=3, gate_angle_scale=0.5
        )
        assert not result.passed

    def test_tiny_corruption_still_detected(self):
        result = check_shallow_inner_product(
            [8], sets_per_q=4, gate_angle_scale=1.0 + 1e-6
        )
        assert not result.passed


class TestCheckGranularity:
    def test_single_modulus_sweep(self):
        result = check_single_qubit_inner_product([17], sets_per_q=5)
        assert result.passed
        assert result.max_deviation < 1e-12

    def test_equivalence_reports_are_bit_identical(self):
        result = check_resistance_equivalence(range(2, 20), sets_per_q=2)
        assert result.passed
        assert "bit-identical" in result.detail

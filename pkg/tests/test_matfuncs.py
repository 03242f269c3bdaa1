import itertools
import math

import numpy as np
import pytest

from photonlift.lift import balanced_beam_splitter
from photonlift.matfuncs import (
    PERMANENT_SIZE_LIMIT,
    NotUnitaryError,
    frobenius_norm,
    is_hermitian,
    is_unitary,
    matrix_exponential,
    permanent,
    unitary_logarithm,
)

# Five-decimal golden values for the principal-branch logarithm of the
# balanced beam splitter.
GOLDEN_COUPLER_LOG = np.array(
    [[0.46008, -1.11072], [-1.11072, 2.68152]], dtype=complex
)


def factorial_permanent(matrix):
    """Oracle: the defining sum over all permutations."""
    matrix = np.asarray(matrix, dtype=complex)
    size = matrix.shape[0]
    total = 0j
    for sigma in itertools.permutations(range(size)):
        product = 1 + 0j
        for row, column in enumerate(sigma):
            product *= matrix[row, column]
        total += product
    return total


def random_complex(rng, size):
    return rng.uniform(-1, 1, (size, size)) + 1j * rng.uniform(-1, 1, (size, size))


def random_skew_hermitian(rng, size):
    raw = random_complex(rng, size)
    return (raw - raw.conj().T) / 2


class TestPredicates:
    def test_identity_is_unitary(self):
        assert is_unitary(np.eye(3), 1e-12)

    def test_beam_splitter_is_unitary(self):
        assert is_unitary(balanced_beam_splitter(), 1e-12)

    def test_shear_is_not_unitary(self):
        assert not is_unitary([[1, 1], [0, 1]], 1e-6)

    def test_unitary_rejects_non_square(self):
        with pytest.raises(ValueError):
            is_unitary(np.ones((2, 3)), 1e-9)

    def test_golden_log_is_hermitian(self):
        assert is_hermitian(GOLDEN_COUPLER_LOG, 1e-9)

    def test_anti_hermitian_is_not_hermitian(self):
        assert not is_hermitian(1j * np.eye(3), 1e-12)

    def test_real_symmetric_is_hermitian_at_zero_tol(self):
        symmetric = np.array([[1.0, 2.5], [2.5, -3.0]])
        assert is_hermitian(symmetric, 0.0)

    def test_negative_tolerance_rejected(self):
        with pytest.raises(ValueError):
            is_unitary(np.eye(2), -1e-9)

    def test_non_finite_entries_rejected(self):
        with pytest.raises(ValueError):
            is_hermitian([[np.nan, 0], [0, 1]], 1e-9)


class TestMatrixExponential:
    def test_zero_gives_identity(self):
        assert np.allclose(matrix_exponential(np.zeros((3, 3))), np.eye(3), atol=1e-14)

    def test_diagonal_phases(self):
        result = matrix_exponential(np.diag([1j * np.pi, 0]))
        assert np.allclose(result, np.diag([-1, 1]), atol=1e-12)

    def test_recovers_coupler_from_golden_log(self):
        result = matrix_exponential(1j * GOLDEN_COUPLER_LOG)
        assert np.max(np.abs(result - balanced_beam_splitter())) < 1e-4

    def test_nilpotent_general_path(self):
        shear = np.array([[0, 1], [0, 0]], dtype=complex)
        assert np.allclose(
            matrix_exponential(shear), [[1, 1], [0, 1]], atol=1e-14
        )

    @pytest.mark.parametrize("size", [1, 2, 5, 12, 20])
    def test_inverse_property_skew_hermitian(self, size):
        rng = np.random.default_rng(100 + size)
        skew = random_skew_hermitian(rng, size)
        product = matrix_exponential(skew) @ matrix_exponential(-skew)
        assert frobenius_norm(product - np.eye(size)) <= 1e-10

    @pytest.mark.parametrize("size", [2, 7, 20])
    def test_skew_hermitian_input_gives_unitary(self, size):
        rng = np.random.default_rng(size)
        result = matrix_exponential(random_skew_hermitian(rng, size))
        assert is_unitary(result, 1e-10)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            matrix_exponential(np.ones((2, 3)))


class TestUnitaryLogarithm:
    def test_identity_gives_zero(self):
        assert np.allclose(unitary_logarithm(np.eye(4)), np.zeros((4, 4)), atol=1e-14)

    def test_beam_splitter_golden_values(self):
        log = unitary_logarithm(balanced_beam_splitter())
        assert np.max(np.abs(log - GOLDEN_COUPLER_LOG)) < 1e-4

    def test_minus_one_maps_to_plus_pi(self):
        assert np.allclose(unitary_logarithm([[-1.0]]), [[np.pi]], atol=1e-14)

    def test_branch_snap_for_perturbed_minus_one(self):
        # An eigenvalue of -1 computed with a stray negative imaginary part
        # must still land on +pi, not -pi.
        value = complex(-1.0, -0.0)
        assert np.allclose(unitary_logarithm([[value]]), [[np.pi]], atol=1e-14)

    def test_degenerate_eigenphases(self):
        log = unitary_logarithm(1j * np.eye(3))
        assert np.allclose(log, (np.pi / 2) * np.eye(3), atol=1e-12)

    @pytest.mark.parametrize("size", [1, 3, 8, 20])
    def test_round_trip_random_unitary(self, size):
        rng = np.random.default_rng(200 + size)
        skew = random_skew_hermitian(rng, size)
        unitary = matrix_exponential(skew)
        log = unitary_logarithm(unitary)
        assert is_hermitian(log, 1e-10)
        assert frobenius_norm(matrix_exponential(1j * log) - unitary) <= 1e-10

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            unitary_logarithm([[1, 1], [0, 1]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            unitary_logarithm(np.ones((1, 2)))


class TestPermanent:
    def test_two_by_two_closed_form(self):
        assert permanent([[1, 2], [3, 4]]) == pytest.approx(10)

    @pytest.mark.parametrize("size", [1, 2, 3, 4, 5, 6])
    def test_all_ones_gives_factorial(self, size):
        assert permanent(np.ones((size, size))) == pytest.approx(math.factorial(size))

    def test_random_five_by_five_matches_oracle(self):
        rng = np.random.default_rng(7)
        matrix = random_complex(rng, 5)
        expected = factorial_permanent(matrix)
        assert abs(permanent(matrix) - expected) <= 1e-10 * abs(expected)

    def test_matches_oracle_over_many_random_matrices(self):
        rng = np.random.default_rng(11)
        for trial in range(102):
            size = trial % 6 + 1
            matrix = random_complex(rng, size)
            expected = factorial_permanent(matrix)
            assert abs(permanent(matrix) - expected) <= 1e-10 * max(1.0, abs(expected))

    def test_zero_row_gives_zero(self):
        matrix = np.ones((4, 4), dtype=complex)
        matrix[2, :] = 0
        assert permanent(matrix) == 0

    def test_invariant_under_row_and_column_swaps(self):
        rng = np.random.default_rng(13)
        matrix = random_complex(rng, 5)
        swapped_rows = matrix[[1, 0, 2, 3, 4], :]
        swapped_cols = matrix[:, [0, 1, 4, 3, 2]]
        reference = permanent(matrix)
        assert permanent(swapped_rows) == pytest.approx(reference, rel=1e-12)
        assert permanent(swapped_cols) == pytest.approx(reference, rel=1e-12)

    def test_empty_matrix_is_one(self):
        assert permanent(np.zeros((0, 0))) == 1

    def test_size_limit(self):
        too_big = np.eye(PERMANENT_SIZE_LIMIT + 1)
        with pytest.raises(ValueError):
            permanent(too_big)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            permanent(np.ones((2, 3)))

"""Lift single-photon network matrices to their n-photon counterparts.

The m x m scattering matrix S of a photon-conserving linear network fixes
the evolution of any number of photons. ``lift_unitary_expansion`` and
``lift_unitary_permanent`` are two independent constructions of the lifted
M x M unitary (M = C(m+n-1, n)); ``lift_hamiltonian`` is the matching map
on effective Hamiltonians, where exp(i H) gives the evolution. Entry (p, q)
of a lifted matrix is the amplitude from basis state q to basis state p, so
columns are images of input states. Everything here is a pure function over
immutable inputs and safe to call concurrently.
"""

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .fock import (
    FockBasis,
    MoveKind,
    OccupationState,
    apply_creation,
    enumerate_basis,
    photon_move_relation,
)
from .matfuncs import NotHermitianError, _as_square, is_hermitian, permanent

__all__ = [
    "LiftedUnitary",
    "LiftedHamiltonian",
    "lift_unitary_expansion",
    "lift_unitary_permanent",
    "lift_hamiltonian",
    "hamiltonian_element",
    "global_phase_lift",
    "transition_distribution",
    "balanced_beam_splitter",
]


@dataclass(frozen=True)
class LiftedUnitary:
    """n-photon unitary together with the basis that indexes it."""

    basis: FockBasis
    matrix: np.ndarray


@dataclass(frozen=True)
class LiftedHamiltonian:
    """n-photon effective Hamiltonian together with its basis.

    Off-diagonal entries are non-zero only between states one photon move
    apart; everything farther is exactly zero.
    """

    basis: FockBasis
    matrix: np.ndarray


def lift_unitary_expansion(scattering, photons: int) -> LiftedUnitary:
    """Lift S by expanding products of transformed creation operators.

    Column q is built by applying, for every input mode k with q_k photons,
    the operator (sum_j S_jk a_j^dag) q_k times to the vacuum and dividing
    by sqrt(q_k!). Amplitudes are carried as a sparse map from occupation
    state to complex weight, so each factor costs O(states * modes).
    """
    matrix = _as_square(scattering)
    modes = matrix.shape[0]
    basis = enumerate_basis(modes, photons)
    size = len(basis)
    lifted = np.zeros((size, size), dtype=complex)
    vacuum = (0,) * modes
    for column, source in enumerate(basis.states):
        amplitudes: dict[OccupationState, complex] = {vacuum: 1.0 + 0.0j}
        # The same sqrt ladder coefficients are multiplied into the
        # normalization, in the same order, so trivial columns stay exact.
        normalization = 1.0
        for k in range(modes):
            for extra in range(source[k]):
                normalization *= math.sqrt(extra + 1)
                updated: dict[OccupationState, complex] = defaultdict(complex)
                for state, amplitude in amplitudes.items():
                    for j in range(modes):
                        weight = matrix[j, k]
                        if weight == 0:
                            continue
                        created = apply_creation(state, j)
                        updated[created.state] += (
                            amplitude * weight * created.coefficient
                        )
                amplitudes = updated
        for state, amplitude in amplitudes.items():
            lifted[basis.index_of(state), column] = amplitude / normalization
    return LiftedUnitary(basis, lifted)


def _photon_mode_indices(state: OccupationState) -> np.ndarray:
    return np.repeat(np.arange(len(state)), state)


def _occupation_norm(state: OccupationState) -> float:
    return math.sqrt(math.prod(math.factorial(count) for count in state))


def lift_unitary_permanent(scattering, photons: int) -> LiftedUnitary:
    """Lift S entry by entry through permanents of repeated submatrices.

    Entry (p, q) is per(S[p|q]) / sqrt(prod_k p_k! prod_k q_k!) where
    S[p|q] repeats row j of S p_j times and column l q_l times. Must agree
    with the expansion construction; the two serve as cross-checks.
    """
    matrix = _as_square(scattering)
    modes = matrix.shape[0]
    basis = enumerate_basis(modes, photons)
    size = len(basis)
    rows = [_photon_mode_indices(state) for state in basis.states]
    norms = [_occupation_norm(state) for state in basis.states]
    lifted = np.zeros((size, size), dtype=complex)
    for column in range(size):
        for row in range(size):
            block = matrix[np.ix_(rows[row], rows[column])]
            lifted[row, column] = permanent(block) / (norms[row] * norms[column])
    return LiftedUnitary(basis, lifted)


def lift_hamiltonian(h_single, photons: int, *, tol: float = 1e-9) -> LiftedHamiltonian:
    """Lift an m-mode effective Hamiltonian to the n-photon space.

    Each entry couples states at most one photon move apart:

    * diagonal: sum_l q_l * H_ll,
    * one photon moved from mode l to mode j: sqrt((q_j + 1) * q_l) * H_jl,
    * anything farther: exactly zero.

    The construction loops only over occupied modes of each state, never
    over all state pairs.
    """
    matrix = _as_square(h_single)
    if not is_hermitian(matrix, tol):
        raise NotHermitianError(f"matrix is not Hermitian within tolerance {tol}")
    modes = matrix.shape[0]
    basis = enumerate_basis(modes, photons)
    size = len(basis)
    lifted = np.zeros((size, size), dtype=complex)
    for column, source in enumerate(basis.states):
        lifted[column, column] = sum(
            count * matrix[mode, mode] for mode, count in enumerate(source) if count
        )
        for mode, count in enumerate(source):
            if count == 0:
                continue
            for target in range(modes):
                if target == mode:
                    continue
                moved = list(source)
                moved[mode] -= 1
                moved[target] += 1
                row = basis.index_of(tuple(moved))
                lifted[row, column] = (
                    math.sqrt((source[target] + 1) * count) * matrix[target, mode]
                )
    return LiftedHamiltonian(basis, lifted)


def hamiltonian_element(h_single, output_state, input_state) -> complex:
    """Single entry of the lifted Hamiltonian without building the matrix.

    ``output_state`` and ``input_state`` play the roles of bra and ket; the
    single-photon matrix is assumed Hermitian.
    """
    matrix = _as_square(h_single)
    p = tuple(output_state)
    q = tuple(input_state)
    if len(q) != matrix.shape[0]:
        raise ValueError(
            f"states of length {len(q)} incompatible with a "
            f"{matrix.shape[0]}-mode matrix"
        )
    relation = photon_move_relation(p, q)
    if relation.kind is MoveKind.IDENTICAL:
        return complex(
            sum(count * matrix[mode, mode] for mode, count in enumerate(q) if count)
        )
    if relation.kind is MoveKind.ONE_MOVE:
        j, l = relation.target, relation.source
        return complex(math.sqrt((q[j] + 1) * q[l]) * matrix[j, l])
    return 0j


def global_phase_lift(phase: float, photons: int) -> float:
    """Phase picked up by the lifted unitary when S gains a global phase.

    Multiplying S by e^{i phase} multiplies the n-photon unitary by
    e^{i n phase}; the returned angle is n * phase reduced to (-pi, pi].
    """
    reduced = math.remainder(photons * phase, math.tau)
    if reduced <= -math.pi:
        reduced += math.tau
    return reduced


def transition_distribution(
    scattering, input_state
) -> dict[OccupationState, float]:
    """Output occupation probabilities for a basis-state input.

    Lifts the scattering matrix to the photon number of ``input_state`` and
    returns |amplitude|^2 per output state, keyed in canonical basis order.
    """
    matrix = _as_square(scattering)
    occupation = tuple(int(count) for count in input_state)
    lifted = lift_unitary_expansion(matrix, sum(occupation))
    column = lifted.matrix[:, lifted.basis.index_of(occupation)]
    return {
        state: float(abs(amplitude) ** 2)
        for state, amplitude in zip(lifted.basis.states, column)
    }


def balanced_beam_splitter() -> np.ndarray:
    """The 50/50 two-mode coupler (1/sqrt 2) [[1, 1], [1, -1]]."""
    return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)

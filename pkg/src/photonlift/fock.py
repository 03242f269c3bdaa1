"""Occupation-number basis for n photons in m modes, with ladder operators.

States are plain tuples of per-mode photon counts. The basis for a given
(modes, photons) pair is ordered reverse-lexicographically, so all photons
start bunched in the first mode: for two photons in two modes the order is
(2, 0), (1, 1), (0, 2). Positions are recovered by exact combinatorial
ranking rather than hashing, so ``index_of`` is O(modes) with no collision
handling. Everything here is immutable and safe to share across threads.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

__all__ = [
    "MAX_DIMENSION",
    "OccupationState",
    "FockBasis",
    "LadderResult",
    "MoveKind",
    "MoveRelation",
    "dimension",
    "enumerate_basis",
    "apply_creation",
    "apply_annihilation",
    "photon_move_relation",
    "bunched_first_order",
]

OccupationState = tuple[int, ...]

# Largest basis size that still fits signed 64-bit indexing downstream.
MAX_DIMENSION = 2**63 - 1


def dimension(modes: int, photons: int) -> int:
    """Number of ways to distribute ``photons`` photons over ``modes`` modes.

    Equals C(modes + photons - 1, photons), the size of the occupation
    basis. Raises OverflowError instead of returning a count too large to
    index with 64-bit integers.
    """
    if modes < 1:
        raise ValueError(f"mode count must be >= 1, got {modes}")
    if photons < 0:
        raise ValueError(f"photon count must be >= 0, got {photons}")
    size = math.comb(modes + photons - 1, photons)
    if size > MAX_DIMENSION:
        raise OverflowError(
            f"basis for modes={modes}, photons={photons} has {size} states, "
            f"exceeding the supported limit {MAX_DIMENSION}"
        )
    return size


def _compositions(total: int, slots: int) -> Iterator[OccupationState]:
    # Reverse-lexicographic: the leading mode count decreases from total to 0.
    if slots == 1:
        yield (total,)
        return
    for count in range(total, -1, -1):
        for rest in _compositions(total - count, slots - 1):
            yield (count, *rest)


@dataclass(frozen=True)
class FockBasis:
    """All occupation states for a fixed photon number, canonically ordered."""

    modes: int
    photons: int
    states: tuple[OccupationState, ...]

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[OccupationState]:
        return iter(self.states)

    def __getitem__(self, position: int) -> OccupationState:
        return self.states[position]

    def index_of(self, state: OccupationState) -> int:
        """Position of ``state`` in canonical order, by combinatorial ranking."""
        state = tuple(state)
        if (
            len(state) != self.modes
            or any(count < 0 for count in state)
            or sum(state) != self.photons
        ):
            raise ValueError(
                f"state {state} does not belong to the basis with "
                f"modes={self.modes}, photons={self.photons}"
            )
        rank = 0
        remaining = self.photons
        for position, count in enumerate(state[:-1]):
            remaining -= count
            slots_after = self.modes - 1 - position
            if remaining > 0:
                rank += math.comb(remaining - 1 + slots_after, slots_after)
        return rank


def enumerate_basis(modes: int, photons: int) -> FockBasis:
    """Build the full occupation basis for the given mode and photon counts."""
    dimension(modes, photons)
    return FockBasis(modes, photons, tuple(_compositions(photons, modes)))


@dataclass(frozen=True)
class LadderResult:
    """Coefficient and resulting state of one ladder-operator application.

    ``state`` is None when annihilation hits an empty mode; the coefficient
    is then 0 and the term drops out of any matrix-element sum.
    """

    coefficient: float
    state: OccupationState | None


def _check_mode(state: OccupationState, mode: int) -> None:
    if not 0 <= mode < len(state):
        raise ValueError(f"mode {mode} out of range for {len(state)} modes")


def apply_creation(state: OccupationState, mode: int) -> LadderResult:
    """Add one photon to ``mode``: coefficient sqrt(count + 1)."""
    _check_mode(state, mode)
    raised = list(state)
    raised[mode] += 1
    return LadderResult(math.sqrt(state[mode] + 1), tuple(raised))


def apply_annihilation(state: OccupationState, mode: int) -> LadderResult:
    """Remove one photon from ``mode``: coefficient sqrt(count), 0 on vacuum."""
    _check_mode(state, mode)
    if state[mode] == 0:
        return LadderResult(0.0, None)
    lowered = list(state)
    lowered[mode] -= 1
    return LadderResult(math.sqrt(state[mode]), tuple(lowered))


class MoveKind(Enum):
    IDENTICAL = "identical"
    ONE_MOVE = "one_move"
    FAR = "far"


@dataclass(frozen=True)
class MoveRelation:
    """How two occupation states relate under single-photon moves.

    For ONE_MOVE, ``target`` gained the photon and ``source`` lost it, i.e.
    the first state is the second with one photon moved source -> target.
    """

    kind: MoveKind
    target: int | None = None
    source: int | None = None


def photon_move_relation(p: OccupationState, q: OccupationState) -> MoveRelation:
    """Classify the pair as identical, one photon moved, or farther apart."""
    p = tuple(p)
    q = tuple(q)
    if len(p) != len(q):
        raise ValueError(f"mode counts differ: {len(p)} vs {len(q)}")
    if any(count < 0 for count in p) or any(count < 0 for count in q):
        raise ValueError("occupation counts must be non-negative")
    if sum(p) != sum(q):
        raise ValueError(f"photon totals differ: {sum(p)} vs {sum(q)}")
    gained = [mode for mode, (a, b) in enumerate(zip(p, q)) if a - b > 0]
    lost = [mode for mode, (a, b) in enumerate(zip(p, q)) if a - b < 0]
    if not gained and not lost:
        return MoveRelation(MoveKind.IDENTICAL)
    if (
        len(gained) == 1
        and len(lost) == 1
        and p[gained[0]] - q[gained[0]] == 1
        and q[lost[0]] - p[lost[0]] == 1
    ):
        return MoveRelation(MoveKind.ONE_MOVE, target=gained[0], source=lost[0])
    return MoveRelation(MoveKind.FAR)


def bunched_first_order(basis: FockBasis) -> tuple[int, ...]:
    """Permutation listing states that occupy fewer distinct modes first.

    Ties keep canonical order. For two photons in two modes this yields
    (2,0), (0,2), (1,1), the ordering with fully bunched states up front.
    """
    def occupied(position: int) -> int:
        return sum(1 for count in basis.states[position] if count)

    return tuple(sorted(range(len(basis)), key=lambda k: (occupied(k), k)))

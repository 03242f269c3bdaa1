"""Dense complex matrix functions: unitarity tests, exp, principal log, permanent.

Conventions used throughout the package:

* A matrix is "unitary within tol" when the Frobenius norm of A^dag A - I
  is at most tol, and "Hermitian within tol" when ||A - A^dag||_F <= tol.
* The logarithm of a unitary takes eigenphases in the principal branch
  (-pi, pi], with the eigenvalue -1 mapped to +pi.

All functions are pure; no input is mutated.
"""

import numpy as np
import scipy.linalg

__all__ = [
    "PERMANENT_SIZE_LIMIT",
    "NotUnitaryError",
    "NotHermitianError",
    "frobenius_norm",
    "is_unitary",
    "is_hermitian",
    "matrix_exponential",
    "unitary_logarithm",
    "permanent",
]

# Ryser's formula walks 2^k column subsets; beyond this the run is hopeless.
PERMANENT_SIZE_LIMIT = 30

# Relative threshold below which a matrix is routed to the exact
# eigendecomposition path of matrix_exponential.
_STRUCTURE_GUARD = 1e-14

# Eigenphases this close to -pi are snapped to +pi so eigenvalues that are
# -1 up to rounding land on the documented branch.
_BRANCH_SNAP = 1e-12


class NotUnitaryError(ValueError):
    """Input expected to be unitary within tolerance is not."""


class NotHermitianError(ValueError):
    """Input expected to be Hermitian within tolerance is not."""


def _as_square(matrix) -> np.ndarray:
    out = np.asarray(matrix, dtype=complex)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {out.shape}")
    if not np.isfinite(out).all():
        raise ValueError("matrix entries must be finite (no NaN or Inf)")
    return out


def frobenius_norm(matrix) -> float:
    return float(np.linalg.norm(np.asarray(matrix), "fro"))


def _check_tol(tol: float) -> None:
    if tol < 0:
        raise ValueError(f"tolerance must be non-negative, got {tol}")


def is_unitary(matrix, tol: float) -> bool:
    """True when A^dag A is the identity to within ``tol`` (Frobenius)."""
    _check_tol(tol)
    out = _as_square(matrix)
    eye = np.eye(out.shape[0], dtype=complex)
    return frobenius_norm(out.conj().T @ out - eye) <= tol


def is_hermitian(matrix, tol: float) -> bool:
    """True when A equals its conjugate transpose to within ``tol``."""
    _check_tol(tol)
    out = _as_square(matrix)
    return frobenius_norm(out - out.conj().T) <= tol


def matrix_exponential(matrix) -> np.ndarray:
    """Matrix exponential e^A.

    Hermitian and skew-Hermitian inputs (the only kinds this package
    produces internally) go through an eigendecomposition, which keeps
    exp(i H) unitary to rounding for Hermitian H. Anything else falls back
    to scaling-and-squaring.
    """
    out = _as_square(matrix)
    scale = max(1.0, frobenius_norm(out))
    adjoint = out.conj().T
    if frobenius_norm(out + adjoint) <= _STRUCTURE_GUARD * scale:
        generator = -1j * out
        generator = (generator + generator.conj().T) / 2
        phases, vectors = np.linalg.eigh(generator)
        return (vectors * np.exp(1j * phases)) @ vectors.conj().T
    if frobenius_norm(out - adjoint) <= _STRUCTURE_GUARD * scale:
        symmetric = (out + adjoint) / 2
        values, vectors = np.linalg.eigh(symmetric)
        return (vectors * np.exp(values)) @ vectors.conj().T
    return scipy.linalg.expm(out)


def unitary_logarithm(matrix, tol: float = 1e-9) -> np.ndarray:
    """Hermitian H with e^{iH} equal to the given unitary.

    Eigenphases are taken in (-pi, pi] with -1 mapped to +pi. A unitary
    matrix is normal, so its complex Schur form is diagonal and the Schur
    vectors give an orthonormal eigenbasis; degenerate eigenphases need no
    special handling because any orthonormal basis of the eigenspace
    reassembles to the same H.
    """
    out = _as_square(matrix)
    if not is_unitary(out, tol):
        raise NotUnitaryError(
            f"matrix is not unitary within tolerance {tol}"
        )
    triangular, vectors = scipy.linalg.schur(out, output="complex")
    phases = np.angle(np.diagonal(triangular))
    phases = np.where(phases <= -np.pi + _BRANCH_SNAP, phases + 2 * np.pi, phases)
    log = (vectors * phases) @ vectors.conj().T
    return (log + log.conj().T) / 2


def permanent(matrix) -> complex:
    """Permanent of a square matrix by Ryser's formula with Gray-code updates.

    Runs in O(2^k * k) for a k x k input and refuses k above
    PERMANENT_SIZE_LIMIT. Subset sums are accumulated in a fixed sequential
    order, so the result is reproducible bit for bit.
    """
    out = _as_square(matrix)
    size = out.shape[0]
    if size > PERMANENT_SIZE_LIMIT:
        raise ValueError(
            f"permanent limited to {PERMANENT_SIZE_LIMIT}x{PERMANENT_SIZE_LIMIT}, "
            f"got {size}x{size}"
        )
    if size == 0:
        return 1 + 0j
    if size == 1:
        return complex(out[0, 0])
    if size == 2:
        return complex(out[0, 0] * out[1, 1] + out[0, 1] * out[1, 0])

    columns = np.ascontiguousarray(out.T)
    row_sums = np.zeros(size, dtype=complex)
    total = 0j
    for step in range(1, 1 << size):
        flipped = (step & -step).bit_length() - 1
        subset = step ^ (step >> 1)
        if (subset >> flipped) & 1:
            row_sums += columns[flipped]
        else:
            row_sums -= columns[flipped]
        term = np.prod(row_sums)
        total += -term if subset.bit_count() & 1 else term
    return complex(total if size % 2 == 0 else -total)

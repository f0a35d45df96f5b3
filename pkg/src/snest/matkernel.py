"""Dense complex matrix kernel.

Small numerical primitives every other module consumes: Kronecker products,
Hermitian eigendecomposition, trace norm, the realignment map and the partial
trace. Everything operates on ordinary numpy arrays; the bipartite composite
index convention is row-major, |i>_A |k>_B <-> i*dB + k.
"""

import numpy as np

from .errors import DimensionMismatchError, ParameterError

MAX_KRON_DIM = 4096


def _as_matrix(a):
    a = np.asarray(a)
    if a.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ParameterError("matrix contains NaN or Inf")
    return a


def kron(a, b, max_dim=MAX_KRON_DIM):
    """Kronecker product with a guard against runaway dimensions.

    Block (i,j) of the result equals a[i,j]*b.
    """
    a = _as_matrix(a)
    b = _as_matrix(b)
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    if rows > max_dim or cols > max_dim:
        raise DimensionMismatchError(
            f"kron result {rows}x{cols} exceeds the configured maximum {max_dim}")
    return np.kron(a, b)


def hermitian_eig(a, tol=1e-10):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvector columns). Raises if the input
    deviates from Hermiticity by more than `tol` in any entry.
    """
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"matrix is {a.shape}, not square")
    dev = np.abs(a - a.conj().T).max()
    if dev > tol:
        raise ParameterError(f"matrix is not Hermitian (max |a - a^dag| = {dev:.3e})")
    w, v = np.linalg.eigh(a)
    return w, v


def trace_norm(a):
    """Sum of singular values (nuclear norm)."""
    a = _as_matrix(a)
    return float(np.linalg.svd(a, compute_uv=False).sum())


def realign(rho, dA, dB):
    """Realignment map of a bipartite (dA*dB) x (dA*dB) matrix.

    Returns the dA^2 x dB^2 matrix R with
    R[i*dA + j, k*dB + l] = rho[i*dB + k, j*dB + l].
    """
    rho = _as_matrix(rho)
    n = dA * dB
    if rho.shape != (n, n):
        raise DimensionMismatchError(
            f"state is {rho.shape}, expected {(n, n)} for dims {dA}x{dB}")
    return rho.reshape(dA, dB, dA, dB).transpose(0, 2, 1, 3).reshape(dA * dA, dB * dB)


def partial_trace_b(rho, dA, dB):
    """Trace out the second subsystem: result[i,j] = sum_k rho[i*dB+k, j*dB+k]."""
    rho = _as_matrix(rho)
    n = dA * dB
    if rho.shape != (n, n):
        raise DimensionMismatchError(
            f"state is {rho.shape}, expected {(n, n)} for dims {dA}x{dB}")
    return np.einsum('ikjk->ij', rho.reshape(dA, dB, dA, dB))

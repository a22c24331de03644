"""Dense complex linear algebra helpers.

Matrices are plain ``numpy.ndarray`` objects in the default (row-major)
layout; every index map elsewhere in the package is defined against it.
"""

import numpy as np

from .errors import NotHermitian, NotSquare

HERMITIAN_TOL = 1e-10
UNITARY_TOL = 1e-10


def as_square(m, name="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquare(f"{name} must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


def hermiticity_error(h):
    h = np.asarray(h)
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def hermitian_eig(h, tol=HERMITIAN_TOL):
    """Eigen-decompose a Hermitian matrix.

    Parameters
    ----------
    h : array_like
        Square matrix with ``max|h - h^dagger| <= tol``.
    tol : float
        Hermiticity tolerance.

    Returns
    -------
    eigenvalues : ndarray
        Real, sorted descending.
    eigenvectors : ndarray
        Unitary matrix whose columns are the matching eigenvectors.
    """
    h = as_square(h)
    err = hermiticity_error(h)
    if err > tol:
        raise NotHermitian(f"matrix is not Hermitian: max|H - H^dagger| = {err:.3e} > {tol:.1e}")
    h = 0.5 * (h + h.conj().T)
    w, v = np.linalg.eigh(h)
    return w[::-1].copy(), v[:, ::-1].copy()


def kron(a, b):
    """Kronecker product; 1-d inputs are treated as column vectors."""
    return np.kron(np.asarray(a), np.asarray(b))


def swap_matrix(N, M):
    """Permutation ``S`` (size ``N*M``) with ``kron(a, b) == S @ kron(b, a)``.

    ``a`` has length ``N`` and ``b`` length ``M``.
    """
    if N < 1 or M < 1:
        raise ValueError(f"swap_matrix needs N, M >= 1, got ({N}, {M})")
    n = N * M
    s = np.zeros((n, n))
    for k in range(N):
        for a in range(M):
            # (b kron a) holds b_a a_k at a*N + k; (a kron b) holds it at k*M + a
            s[k * M + a, a * N + k] = 1.0
    return s


def entrywise_abs_squared(u):
    """``|u_ij|^2`` entrywise; doubly stochastic when ``u`` is unitary."""
    u = np.asarray(u)
    return u.real**2 + u.imag**2


def is_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return float(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))) <= tol


def permutation_matrix(sigma):
    """Matrix ``P`` with ``(P @ x)[i] == x[sigma[i]]`` (0-based ``sigma``)."""
    sigma = np.asarray(sigma, dtype=int)
    p = np.zeros((sigma.size, sigma.size))
    p[np.arange(sigma.size), sigma] = 1.0
    return p

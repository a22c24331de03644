"""Density matrices: validation, von Neumann entropy, seeded generators."""

from dataclasses import dataclass

import numpy as np

from .errors import BadRank, NotPositive, TraceNotOne
from .linalg_core import HERMITIAN_TOL, as_square, hermitian_eig
from .prob_core import xlogx

TRACE_TOL = 1e-9
EIG_CLAMP = 1e-9


def validate_density(m, herm_tol=HERMITIAN_TOL, trace_tol=TRACE_TOL, eig_tol=EIG_CLAMP):
    """Return a symmetrised copy of ``m`` if it is a density matrix.

    Raises :class:`NotHermitian`, :class:`TraceNotOne` or :class:`NotPositive`
    (the latter carries the offending eigenvalue).
    """
    m = as_square(m, "density matrix")
    w, _ = hermitian_eig(m, tol=herm_tol)
    rho = 0.5 * (m + m.conj().T)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > trace_tol:
        raise TraceNotOne(f"trace is {tr!r}, not 1")
    if w[-1] < -eig_tol:
        raise NotPositive(f"eigenvalue {w[-1]!r} is negative", eigenvalue=float(w[-1]))
    return rho


def eigenprobabilities(rho):
    """Descending eigenvalues, clamped to ``[0, 1]`` and renormalised."""
    w, _ = hermitian_eig(rho)
    return _clamp_spectrum(w)


def _clamp_spectrum(w):
    w = np.clip(np.asarray(w, dtype=float), 0.0, 1.0)
    return w / w.sum()


def von_neumann_entropy(rho):
    """``-Tr rho ln rho`` in nats."""
    return 0.0 - xlogx(eigenprobabilities(rho))  # not -xlogx: keeps pure states at +0.0


@dataclass(frozen=True)
class SpectralDecomposition:
    eigen_probs: np.ndarray
    basis: np.ndarray

    def reconstruct(self):
        return (self.basis * self.eigen_probs) @ self.basis.conj().T


def spectral_decompose(rho):
    w, v = hermitian_eig(rho)
    return SpectralDecomposition(_clamp_spectrum(w), v)


def _ginibre(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(dim, rank=None, seed=0):
    """``G G^dagger / Tr(G G^dagger)`` with ``G`` a ``dim x rank`` Ginibre matrix."""
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise BadRank(f"rank must lie in 1..{dim}, got {rank}")
    rng = np.random.default_rng(seed)
    g = _ginibre(rng, dim, rank)
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_unitary(dim, seed=0):
    """Haar-random unitary from the QR decomposition of a Ginibre matrix.

    The columns of ``Q`` are rephased so that ``R`` has a positive real
    diagonal. ``dim == 1`` returns ``[[1]]``.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if dim == 1:
        return np.ones((1, 1), dtype=complex)
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(_ginibre(rng, dim, dim))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def pure_state(psi):
    psi = np.asarray(psi, dtype=complex).ravel()
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def purity(rho):
    rho = np.asarray(rho)
    return float(np.real(np.vdot(rho, rho)))

"""Tomographic probability vectors ``w(u) = |u u0|^2 rho_vec`` of qudit states."""

from dataclasses import dataclass

import numpy as np

from .density_core import random_unitary, spectral_decompose, validate_density
from .errors import DimensionMismatch, EntroportraitError
from .linalg_core import as_square, entrywise_abs_squared, is_unitary, kron
from .prob_core import probability_vector
from .stochastic_portrait import subadditivity_report

ROUTE_TOL = 1e-10


class RouteMismatch(EntroportraitError):
    """The spectral and direct tomogram routes disagree."""


def spin_labels(n):
    """Spin projections ``m = j, j-1, ..., -j`` with ``j = (n-1)/2``."""
    j = (n - 1) / 2
    return [j - i for i in range(n)]


@dataclass(frozen=True)
class Tomogram:
    probabilities: np.ndarray
    measurement_basis: np.ndarray
    basis_labels: list
    route_gap: float = 0.0


def _unitary(u, n, name="u"):
    u = as_square(u, name)
    if u.shape[0] != n:
        raise DimensionMismatch(f"{name} is {u.shape[0]}x{u.shape[0]}, expected {n}x{n}")
    if not is_unitary(u):
        raise ValueError(f"{name} is not unitary")
    return u


def direct_tomogram(rho, u):
    """``diag(u rho u^dagger)``, normalised by ``Tr rho``."""
    rho = np.asarray(rho)
    w = np.einsum("ij,jk,ik->i", u, rho, u.conj()).real
    return w / np.trace(rho).real


def tomogram(rho, u, check=True):
    """Tomogram of ``rho`` in the basis rotated by ``u``.

    The spectral route ``|u u0|^2 rho_vec`` is returned; the direct route
    ``diag(u rho u^dagger)`` is computed alongside and their max deviation
    stored in ``route_gap``. With ``check`` a gap above ``1e-10`` raises.
    """
    rho = validate_density(rho)
    n = rho.shape[0]
    u = _unitary(u, n)
    sd = spectral_decompose(rho)
    w = entrywise_abs_squared(u @ sd.basis) @ sd.eigen_probs
    gap = float(np.max(np.abs(w - direct_tomogram(rho, u))))
    if check and gap > ROUTE_TOL:
        raise RouteMismatch(f"tomogram routes differ by {gap:.3e}")
    return Tomogram(probability_vector(w), u, spin_labels(n), gap)


def extend_orthostochastic(rho_vec, u0, s, u=None):
    """Append ``s`` zero components and an ``s x s`` identity block.

    Returns the padded spectrum and the block-diagonal doubly stochastic
    matrix ``diag(|u u0|^2, 1_s)``.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    rho_vec = probability_vector(rho_vec)
    n = rho_vec.size
    u0 = _unitary(u0, n, "u0")
    u = np.eye(n) if u is None else _unitary(u, n)
    block = np.zeros((n + s, n + s))
    block[:n, :n] = entrywise_abs_squared(u @ u0)
    block[n:, n:] = np.eye(s)
    return np.concatenate([rho_vec, np.zeros(s)]), block


def tomographic_subadditivity(rho, u, f):
    """Classical subadditivity report for the tomogram ``w(u)``.

    If ``f.n`` exceeds the dimension the tomogram is extended with zeros.
    """
    t = tomogram(rho, u)
    n = t.probabilities.size
    if f.n < n:
        raise DimensionMismatch(f"factorization covers {f.n} components, tomogram has {n}")
    if f.n > n:
        sd = spectral_decompose(rho)
        vec, block = extend_orthostochastic(sd.eigen_probs, sd.basis, f.n - n, u)
        w = block @ vec
    else:
        w = t.probabilities
    return subadditivity_report(w, f)


def tomographic_sweep(rho, f, trials, seed=0):
    """Information for ``trials`` Haar unitaries seeded ``seed + i``."""
    n = np.asarray(rho).shape[0]
    return [tomographic_subadditivity(rho, random_unitary(n, seed + i), f).information for i in range(trials)]


def separating_transform(u01, u02, u0):
    """``A = (u01 kron u02) u0^dagger``."""
    u01 = _unitary(u01, np.asarray(u01).shape[0], "u01")
    u02 = _unitary(u02, np.asarray(u02).shape[0], "u02")
    n = u01.shape[0] * u02.shape[0]
    u0 = _unitary(u0, n, "u0")
    return kron(u01, u02) @ u0.conj().T


def separable_tomogram(rho, u01, u02, u, check=True):
    """``w_A(u) = |u (u01 kron u02)|^2 rho_vec``.

    This is the tomogram of the product-basis state
    ``K diag(rho_vec) K^dagger`` with ``K = u01 kron u02``; that identity is
    re-checked against :func:`tomogram` when ``check`` is set.
    """
    rho = validate_density(rho)
    n = rho.shape[0]
    u01 = _unitary(u01, np.asarray(u01).shape[0], "u01")
    u02 = _unitary(u02, np.asarray(u02).shape[0], "u02")
    if u01.shape[0] * u02.shape[0] != n:
        raise DimensionMismatch(f"{u01.shape[0]} x {u02.shape[0]} local unitaries do not match dimension {n}")
    u = _unitary(u, n)
    k = kron(u01, u02)
    vec = spectral_decompose(rho).eigen_probs
    w = entrywise_abs_squared(u @ k) @ vec
    gap = 0.0
    if check:
        rho_sep = (k * vec) @ k.conj().T
        gap = float(np.max(np.abs(w - direct_tomogram(rho_sep, u))))
        if gap > ROUTE_TOL:
            raise RouteMismatch(f"separable tomogram routes differ by {gap:.3e}")
    return Tomogram(probability_vector(w), u, spin_labels(n), gap)

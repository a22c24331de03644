"""Probability vectors, cone vectors and Shannon entropy (in nats)."""

import numpy as np

from . import kernels
from .errors import (
    NegativeComponent,
    NotAPermutation,
    NotNormalized,
    TooShort,
    ZeroTotal,
)

CLAMP_TOL = 1e-12
NORM_TOL = 1e-9


def probability_vector(p, norm_tol=NORM_TOL):
    """Validate ``p`` as a probability vector and return a float copy.

    Components in ``[-1e-12, 0)`` are clamped to zero; anything more
    negative raises :class:`NegativeComponent` naming the (0-based) index.
    """
    p = np.array(p, dtype=float).ravel()
    if p.size == 0:
        raise NotNormalized("probability vector is empty")
    if not np.all(np.isfinite(p)):
        raise NotNormalized("probability vector has non-finite components")
    bad = np.flatnonzero(p < -CLAMP_TOL)
    if bad.size:
        i = int(bad[0])
        raise NegativeComponent(f"component {i} is negative ({p[i]!r})", index=i, value=float(p[i]))
    p[p < 0.0] = 0.0
    total = p.sum()
    if abs(total - 1.0) > norm_tol:
        raise NotNormalized(f"components sum to {total!r}, not 1")
    return p


def cone_vector(x):
    x = np.array(x, dtype=float).ravel()
    bad = np.flatnonzero(~(x >= 0.0))
    if bad.size:
        i = int(bad[0])
        raise NegativeComponent(f"cone component {i} is negative ({x[i]!r})", index=i, value=float(x[i]))
    return x


def xlogx(x):
    """``sum x ln x`` with ``0 ln 0 = 0``."""
    x = np.ascontiguousarray(x, dtype=float)
    return float(kernels.xlogx_rows(x.reshape(1, -1))[0])


def shannon_entropy(p):
    """Shannon entropy ``-sum p ln p`` of a probability vector.

    The vector is renormalised by its exact sum first, so the result stays
    in ``[0, ln n]`` even with round-off in the input.
    """
    p = probability_vector(p)
    return 0.0 - xlogx(p / p.sum())  # not -xlogx: keeps pure states at +0.0


def entropy_rows(P):
    """Row-wise Shannon entropy of a 2-d array of probability vectors."""
    P = np.ascontiguousarray(P, dtype=float)
    return -kernels.xlogx_rows(P)


def pad_to_length(p, length):
    p = probability_vector(p)
    if length < p.size:
        raise TooShort(f"cannot pad a {p.size}-vector to length {length}")
    out = np.zeros(length)
    out[: p.size] = p
    return out


def check_permutation(sigma, n):
    """Return ``sigma`` as an int array if it is a bijection on ``0..n-1``."""
    sigma = np.asarray(sigma)
    if sigma.ndim != 1 or sigma.size != n or not np.issubdtype(sigma.dtype, np.integer):
        raise NotAPermutation(f"expected {n} integer indices, got {sigma!r}")
    if not np.array_equal(np.sort(sigma), np.arange(n)):
        raise NotAPermutation(f"{sigma.tolist()} is not a permutation of 0..{n - 1}")
    return sigma.astype(int)


def permute(p, sigma):
    """``result[k] = p[sigma[k]]`` (0-based indices)."""
    p = probability_vector(p)
    return p[check_permutation(sigma, p.size)]


def normalize_cone(x):
    """Project a cone vector onto the simplex; returns ``(p, total)``."""
    x = cone_vector(x)
    total = float(x.sum())
    if not total > 0.0:
        raise ZeroTotal("cone vector has zero total")
    return x / total, total

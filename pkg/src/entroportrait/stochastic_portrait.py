"""Stochastic 0/1 matrices that marginalise an n-vector under a coding n = N*M.

The coding is row-major: component ``k*M + a`` (0-based) is the pair
``(k, a)``. ``M12`` sums over ``a`` and ``M21`` sums over ``k``; both return
length-``n`` vectors whose tails are zero.
"""

import itertools
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .errors import BadFactorization, LengthMismatch, TooLargeForExhaustive, ZeroTotal
from .prob_core import cone_vector, entropy_rows, probability_vector, shannon_entropy

INFO_TOL = 1e-10
EXHAUSTIVE_MAX_N = 8


@dataclass(frozen=True)
class Factorization:
    """A bipartite coding ``n = N * M`` of an index range.

    ``N <= M`` is the canonical orientation returned by :func:`factorizations`,
    but the swapped orientation is legal too (portraits use both).
    """

    N: int
    M: int

    def __post_init__(self):
        if int(self.N) != self.N or int(self.M) != self.M or self.N < 1 or self.M < 1:
            raise BadFactorization(f"N and M must be positive integers, got ({self.N}, {self.M})")

    @property
    def n(self):
        return self.N * self.M

    def swapped(self):
        return Factorization(self.M, self.N)

    def as_list(self):
        return [self.N, self.M]


def factorizations(n, include_trivial=False):
    """All ``(N, M)`` with ``N*M == n`` and ``N <= M``, ascending in ``N``."""
    if n < 2:
        raise BadFactorization(f"n must be >= 2, got {n}")
    start = 1 if include_trivial else 2
    return [Factorization(N, n // N) for N in range(start, math.isqrt(n) + 1) if n % N == 0]


def padded_length(n):
    """Smallest ``n' >= n`` that has a factorization with ``N >= 2``."""
    m = max(n, 4)
    while not factorizations(m):
        m += 1
    return m


def build_M12(f):
    n = f.n
    m = np.zeros((n, n))
    for k in range(f.N):
        m[k, k * f.M : (k + 1) * f.M] = 1.0
    return m


def build_M21(f):
    n = f.n
    m = np.zeros((n, n))
    for a in range(f.M):
        m[a, a :: f.M] = 1.0
    return m


def _check_length(p, f):
    if p.size != f.n:
        raise LengthMismatch(f"vector has length {p.size}, factorization needs {f.n}")


def marginals(p, f):
    """``(M12 @ p, M21 @ p)``, both of length ``n`` with zero tails."""
    p = probability_vector(p)
    _check_length(p, f)
    first, second = kernels.marginal_rows(np.ascontiguousarray(p.reshape(1, -1)), f.N, f.M)
    a = np.zeros(f.n)
    b = np.zeros(f.n)
    a[: f.N] = first[0]
    b[: f.M] = second[0]
    return a, b


@dataclass(frozen=True)
class SubadditivityReport:
    H_joint: float
    H_first: float
    H_second: float
    information: float
    factorization: Factorization

    def holds(self, tol=INFO_TOL):
        return self.information >= -tol

    def to_dict(self):
        d = asdict(self)
        d["factorization"] = self.factorization.as_list()
        return d


def subadditivity_report(p, f):
    p = probability_vector(p)
    _check_length(p, f)
    first, second = marginals(p, f)
    h12 = shannon_entropy(p)
    h1 = shannon_entropy(first)
    h2 = shannon_entropy(second)
    return SubadditivityReport(h12, h1, h2, h1 + h2 - h12, f)


def batch_information(P, f):
    """Mutual information of every row of ``P`` (rows need not be normalised).

    For rows on the simplex this is the Shannon mutual information; in
    general it is the cone information ``I_x``.
    """
    P = np.ascontiguousarray(P, dtype=float)
    if P.ndim != 2 or P.shape[1] != f.n:
        raise LengthMismatch(f"expected shape (rows, {f.n}), got {P.shape}")
    return kernels.information_rows(P, f.N, f.M)


def cone_information(x, f):
    """Information on the cone: ``I_x = total * I_p(x / total)``."""
    x = cone_vector(x)
    if x.size != f.n:
        raise LengthMismatch(f"vector has length {x.size}, factorization needs {f.n}")
    if not x.sum() > 0.0:
        raise ZeroTotal("cone vector has zero total")
    return float(batch_information(x.reshape(1, -1), f)[0])


@dataclass
class SweepSummary:
    count: int
    min: float
    max: float
    mean: float
    argmin: list
    argmax: list
    H_joint_spread: float
    violations: int

    def to_dict(self):
        return asdict(self)


def _all_permutations(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def permutation_sweep(p, f, mode="exhaustive", count=1000, seed=0, tol=INFO_TOL):
    """Information over relabelled copies ``p[sigma]`` of ``p``.

    ``mode`` is ``"exhaustive"`` (all ``n!`` permutations, ``n <= 8``) or
    ``"sampled"`` (``count`` uniform permutations from ``seed``).
    """
    p = probability_vector(p)
    _check_length(p, f)
    n = p.size
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise TooLargeForExhaustive(f"{n}! permutations is too many; use mode='sampled'")
        perms = _all_permutations(n)
    elif mode == "sampled":
        rng = np.random.default_rng(seed)
        perms = np.array([rng.permutation(n) for _ in range(count)], dtype=np.intp)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    P = p[perms]
    info = batch_information(P, f)
    hj = entropy_rows(P)
    lo, hi = int(np.argmin(info)), int(np.argmax(info))
    return SweepSummary(
        count=len(perms),
        min=float(info[lo]),
        max=float(info[hi]),
        mean=float(info.mean()),
        argmin=perms[lo].tolist(),
        argmax=perms[hi].tolist(),
        H_joint_spread=float(hj.max() - hj.min()),
        violations=int(np.sum(info < -tol)),
    )

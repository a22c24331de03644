"""Portrait maps of an n x n density matrix onto N x N and M x M matrices.

Under the row-major coding the two portraits coincide with the partial
traces of a bipartite state, so quantum subadditivity holds for them even
when the matrix describes a single qudit.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .density_core import validate_density, von_neumann_entropy
from .errors import DimensionMismatch, TooSmall
from .linalg_core import as_square, permutation_matrix
from .prob_core import check_permutation
from .stochastic_portrait import Factorization, build_M12

QUANTUM_INFO_TOL = 1e-9


def _checked(rho, f):
    rho = np.ascontiguousarray(as_square(rho, "density matrix"), dtype=np.complex128)
    if rho.shape[0] != f.n:
        raise DimensionMismatch(f"matrix is {rho.shape[0]}x{rho.shape[0]}, factorization needs {f.n}")
    return rho


def portrait_first(rho, f):
    """N x N portrait built column by column from the vectors ``R_j``.

    ``(R_j)[k*M + a] = rho[k*M + a, j*M + a]``; column ``j`` of the result is
    the first ``N`` entries of ``M12 @ R_j``.
    """
    rho = _checked(rho, f)
    return kernels.portrait_first_rj(rho, build_M12(f), f.N, f.M)


def portrait_second(rho, f):
    """M x M portrait: the sum of the ``N`` diagonal ``M x M`` blocks."""
    rho = _checked(rho, f)
    M = f.M
    out = np.zeros((M, M), dtype=complex)
    for k in range(f.N):
        out += rho[k * M : (k + 1) * M, k * M : (k + 1) * M]
    return out


def partial_trace_oracle(rho, f, which="first"):
    """Direct double-index sum; ``which`` names the factor that is kept."""
    if which not in ("first", "second"):
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    rho = _checked(rho, f)
    return kernels.partial_trace(rho, f.N, f.M, which == "first")


def embed_padded(small, n):
    """Place ``small`` in the leading block of an ``n x n`` zero matrix."""
    small = as_square(small)
    d = small.shape[0]
    if n < d:
        raise TooSmall(f"cannot embed a {d}x{d} matrix into {n}x{n}")
    out = np.zeros((n, n), dtype=complex)
    out[:d, :d] = small
    return out


@dataclass(frozen=True)
class PortraitPair:
    first: np.ndarray
    second: np.ndarray
    factorization: Factorization

    @property
    def first_padded(self):
        return embed_padded(self.first, self.factorization.n)

    @property
    def second_padded(self):
        return embed_padded(self.second, self.factorization.n)


def portraits(rho, f):
    return PortraitPair(portrait_first(rho, f), portrait_second(rho, f), f)


@dataclass(frozen=True)
class QuantumReport:
    S_joint: float
    S_first: float
    S_second: float
    information: float
    factorization: Factorization
    portraits: PortraitPair = field(repr=False, compare=False, default=None)

    def holds(self, tol=QUANTUM_INFO_TOL):
        return self.information >= -tol

    def to_dict(self):
        return {
            "S_joint": self.S_joint,
            "S_first": self.S_first,
            "S_second": self.S_second,
            "information": self.information,
            "factorization": self.factorization.as_list(),
        }


def quantum_subadditivity_report(rho, f, validate=True):
    rho = validate_density(rho) if validate else np.asarray(rho, dtype=complex)
    pair = portraits(rho, f)
    s12 = von_neumann_entropy(rho)
    s1 = von_neumann_entropy(pair.first)
    s2 = von_neumann_entropy(pair.second)
    return QuantumReport(s12, s1, s2, s1 + s2 - s12, f, pair)


def permute_basis(rho, sigma):
    """Relabel basis indices: ``out[i, j] = rho[sigma[i], sigma[j]]``."""
    rho = as_square(rho)
    p = permutation_matrix(check_permutation(sigma, rho.shape[0]))
    return p @ rho @ p.T


def permuted_portraits(rho, f, sigma):
    return quantum_subadditivity_report(permute_basis(rho, sigma), f)


def quantum_permutation_sweep(rho, f, perms=None):
    """Reports for every relabelling in ``perms`` (default: all ``n!``)."""
    rho = validate_density(rho)
    if perms is None:
        perms = itertools.permutations(range(rho.shape[0]))
    reports = []
    for sigma in perms:
        sigma = np.asarray(sigma)
        reports.append(quantum_subadditivity_report(rho[np.ix_(sigma, sigma)], f, validate=False))
    return reports


QUDIT_J2_FACTORIZATION = Factorization(3, 2)


def qudit_j2_example(rho5):
    """Pad a 5 x 5 state to 6 x 6 and report under the coding ``(N, M) = (3, 2)``."""
    rho5 = validate_density(rho5)
    if rho5.shape[0] != 5:
        raise DimensionMismatch(f"expected a 5x5 matrix, got {rho5.shape[0]}x{rho5.shape[0]}")
    return quantum_subadditivity_report(embed_padded(rho5, 6), QUDIT_J2_FACTORIZATION)

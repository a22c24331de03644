"""Nonlinear classical maps (escort, Bayes) and nonlinear quantum channels.

Indices are 0-based throughout: an escort window ``(start, stop)`` is a
half-open slice, and the Bayes column ``j`` runs over ``0..M-1``.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .density_core import von_neumann_entropy
from .errors import DimensionMismatch, ZeroColumn, ZeroDenominator, ZeroProbabilityBlock
from .linalg_core import as_square, hermitian_eig
from .prob_core import probability_vector, shannon_entropy
from .stochastic_portrait import Factorization

DENOM_TOL = 1e-12
PPT_TOL = 1e-10
NPT_HIT_TOL = 1e-8


@dataclass(frozen=True)
class EscortParams:
    s: float
    window: tuple = None

    def __post_init__(self):
        if not self.s >= 1:
            raise ValueError(f"escort order s must be >= 1, got {self.s}")
        if self.window is not None:
            start, stop = self.window
            if not 0 <= start < stop:
                raise ValueError(f"bad escort window {self.window}")


def _escort_weights(p, s):
    # p**s / sum(p**s) in the log domain; large s would underflow otherwise
    out = np.zeros_like(p)
    pos = p > 0.0
    logs = s * np.log(p[pos])
    out[pos] = np.exp(logs - logs.max())
    return out / out.sum()


def escort_map(p, params):
    """``p_k**s / sum(p**s)`` over the window (the full vector by default)."""
    if not isinstance(params, EscortParams):
        params = EscortParams(params)
    p = probability_vector(p)
    if params.window is not None:
        start, stop = params.window
        if stop > p.size:
            raise ValueError(f"escort window {params.window} exceeds length {p.size}")
        p = p[start:stop]
    if p.sum() <= DENOM_TOL:
        raise ZeroDenominator("every component in the escort window is zero")
    if params.s == 1:
        return p / p.sum()
    return _escort_weights(p, params.s)


def bayes_conditional(p, f, j):
    """``P(k | j)`` for column ``j`` of the row-major ``N x M`` table."""
    p = probability_vector(p)
    if p.size != f.n:
        raise DimensionMismatch(f"vector has length {p.size}, factorization needs {f.n}")
    if not 0 <= j < f.M:
        raise IndexError(f"column {j} outside 0..{f.M - 1}")
    col = p[j :: f.M]
    total = col.sum()
    if total <= DENOM_TOL:
        raise ZeroColumn(f"column {j} has zero probability")
    return col / total


def power_channel(rho, s):
    """``rho**s / Tr rho**s``, evaluated on the spectrum."""
    if not s >= 1:
        raise ValueError(f"s must be >= 1, got {s}")
    w, v = hermitian_eig(rho)
    w = np.clip(w, 0.0, None)
    lam = _escort_weights(w / w.sum(), s)
    return (v * lam) @ v.conj().T


def truncation_channel(rho, m):
    """Leading ``m x m`` block renormalised by its trace."""
    rho = as_square(rho)
    n = rho.shape[0]
    if not 1 <= m < n:
        raise ValueError(f"m must lie in 1..{n - 1}, got {m}")
    block = rho[:m, :m]
    mass = float(np.trace(block).real)
    if mass <= DENOM_TOL:
        raise ZeroProbabilityBlock(f"leading {m} levels carry no probability")
    return block / mass


def convex_power_channel(rho, weights):
    """``sum_s weights[s-1] * power_channel(rho, s)`` for ``s = 1..len(weights)``."""
    weights = probability_vector(weights)
    rho = as_square(rho)
    out = np.zeros_like(rho)
    for s, wt in enumerate(weights, start=1):
        if wt > 0.0:
            out += wt * power_channel(rho, s)
    return out


def escort_entropy_chain(p, s_max):
    if s_max < 2:
        raise ValueError(f"s_max must be >= 2, got {s_max}")
    return [shannon_entropy(escort_map(p, EscortParams(s))) for s in range(1, s_max + 1)]


def quantum_power_entropy_chain(rho, s_max):
    if s_max < 2:
        raise ValueError(f"s_max must be >= 2, got {s_max}")
    return [von_neumann_entropy(power_channel(rho, s)) for s in range(1, s_max + 1)]


def partial_transpose(rho, f):
    """Transpose on the second factor of the row-major ``(N, M)`` coding."""
    rho = np.ascontiguousarray(as_square(rho), dtype=np.complex128)
    if rho.shape[0] != f.n:
        raise DimensionMismatch(f"matrix is {rho.shape[0]}x{rho.shape[0]}, factorization needs {f.n}")
    return kernels.partial_transpose_second(rho, f.N, f.M)


def ppt_min_eigenvalue(rho, f):
    """Smallest eigenvalue of the partial transpose; negative means entangled."""
    pt = partial_transpose(rho, f)
    return float(np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))[0])


# ---------------------------------------------------------------- X-states

X_MASK = np.array(
    [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]],
    dtype=bool,
)


def is_x_state(rho, tol=1e-12):
    rho = np.asarray(rho)
    return rho.shape == (4, 4) and float(np.max(np.abs(rho[~X_MASK]), initial=0.0)) <= tol


def x_state(diag, z=0.0, w=0.0):
    """Two-qubit X-state with populations ``diag`` and coherences ``rho_14 = z``, ``rho_23 = w``."""
    a, b, c, d = diag
    return np.array(
        [
            [a, 0, 0, z],
            [0, b, w, 0],
            [0, np.conj(w), c, 0],
            [np.conj(z), 0, 0, d],
        ],
        dtype=complex,
    )


def sample_separable_x_state(seed, max_tries=100):
    """Seeded random X-state with a positive partial transpose.

    Coherence moduli are drawn below ``min(sqrt(ad), sqrt(bc))``, which makes
    the state and its partial transpose both positive; the PPT test then
    rejects any round-off casualties.
    """
    f = Factorization(2, 2)
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        a, b, c, d = rng.dirichlet(np.ones(4))
        bound = min(np.sqrt(a * d), np.sqrt(b * c))
        z = bound * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        w = bound * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        rho = x_state((a, b, c, d), z, w)
        if ppt_min_eigenvalue(rho, f) >= -PPT_TOL:
            return rho
    raise RuntimeError(f"no separable X-state after {max_tries} draws (seed {seed})")


@dataclass
class XSearchReport:
    trials: int
    seed: int
    s: float
    min_eig_before: float
    found: list = field(default_factory=list)

    def to_dict(self):
        return {
            "trials": self.trials,
            "seed": self.seed,
            "s": self.s,
            "min_eig_before": self.min_eig_before,
            "hits": len(self.found),
            "found": [list(hit) for hit in self.found],
        }


def xstate_entanglement_search(trials, seed, s):
    """Look for separable X-states that ``power_channel(., s)`` makes NPT.

    Trial ``i`` draws its state from seed ``seed + i``; every hit is recorded
    as ``(i, min_eig_before, min_eig_after)`` so it can be replayed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    f = Factorization(2, 2)
    found = []
    min_before = np.inf
    for i in range(trials):
        rho = sample_separable_x_state(seed + i)
        before = ppt_min_eigenvalue(rho, f)
        after = ppt_min_eigenvalue(power_channel(rho, s), f)
        min_before = min(min_before, before)
        if after < -NPT_HIT_TOL:
            found.append((i, before, after))
    return XSearchReport(trials, seed, float(s), float(min_before), found)


"""Independent reference computations used by the tests.

Nothing here imports the package's index arithmetic: marginals are double
loops over an explicit ``(k, a)`` table, partial traces go through basis
kets and ``np.kron``, and the swap matrix is read off from basis vectors.
"""

import numpy as np


def basis(d, i):
    e = np.zeros(d)
    e[i] = 1.0
    return e


def table_marginals(p, N, M):
    table = [[p[k * M + a] for a in range(M)] for k in range(N)]
    first = [sum(table[k][a] for a in range(M)) for k in range(N)]
    second = [sum(table[k][a] for k in range(N)) for a in range(M)]
    return np.array(first), np.array(second)


def entropy(p):
    return -sum(x * np.log(x) for x in np.asarray(p, dtype=float).ravel() if x > 0)


def mutual_information(p, N, M):
    first, second = table_marginals(p, N, M)
    return entropy(first) + entropy(second) - entropy(p)


def ket_partial_trace(rho, N, M, keep):
    """Trace out one factor as ``sum_i (<i| x 1) rho (|i> x 1)``."""
    out = 0
    if keep == "first":
        for a in range(M):
            op = np.kron(np.eye(N), basis(M, a).reshape(M, 1))
            out = out + op.T @ rho @ op
    else:
        for k in range(N):
            op = np.kron(basis(N, k).reshape(N, 1), np.eye(M))
            out = out + op.T @ rho @ op
    return out


def swap_from_basis(N, M):
    """Columns: S e = kron(a, b) where e = kron(b, a), over basis pairs."""
    n = N * M
    S = np.zeros((n, n))
    for k in range(N):
        for a in range(M):
            src = np.kron(basis(M, a), basis(N, k))
            dst = np.kron(basis(N, k), basis(M, a))
            S += np.outer(dst, src)
    return S


def eig_entropy(rho):
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    return entropy(np.clip(w, 0, None))


def bell_state():
    psi = np.zeros(4)
    psi[[0, 3]] = 1 / np.sqrt(2)
    return np.outer(psi, psi).astype(complex)


def product_vector(rng, N, M):
    return np.kron(rng.dirichlet(np.ones(N)), rng.dirichlet(np.ones(M)))


def pt_second_via_kets(rho, N, M):
    """Partial transpose on the second factor from operator basis expansion."""
    out = np.zeros_like(rho, dtype=complex)
    for a in range(M):
        for b in range(M):
            eab = np.outer(basis(M, a), basis(M, b))
            op = np.kron(np.eye(N), basis(M, a).reshape(M, 1))
            opb = np.kron(np.eye(N), basis(M, b).reshape(M, 1))
            block = op.T @ rho @ opb  # N x N block <a| rho |b>
            out += np.kron(block, eab.T)
    return out

"""Hot inner loops, each in two flavours.

``*_nb`` functions are explicit loops compiled with numba; ``*_np`` functions
are vectorised numpy. The unsuffixed names are bound to one or the other
according to :data:`entroportrait._accel.USE_NUMBA`. Both flavours are always
importable so tests and the benchmark can compare them.

All index maps use the row-major coding ``i = k*M + a`` (0-based) for a
pair ``(k, a)`` with ``k < N`` and ``a < M``.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# ---------------------------------------------------------------- x ln x


@njit
def xlogx_rows_nb(x):
    rows, cols = x.shape
    out = np.zeros(rows)
    for r in range(rows):
        acc = 0.0
        for c in range(cols):
            v = x[r, c]
            if v > 0.0:
                acc += v * np.log(v)
        out[r] = acc
    return out


def xlogx_rows_np(x):
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0.0, x, 1.0)
    return np.sum(np.where(x > 0.0, x * np.log(safe), 0.0), axis=1)


# ---------------------------------------------------------------- marginals


@njit
def marginal_rows_nb(x, N, M):
    rows = x.shape[0]
    first = np.zeros((rows, N))
    second = np.zeros((rows, M))
    for r in range(rows):
        for k in range(N):
            for a in range(M):
                v = x[r, k * M + a]
                first[r, k] += v
                second[r, a] += v
    return first, second


def marginal_rows_np(x, N, M):
    cube = np.asarray(x, dtype=float).reshape(-1, N, M)
    return cube.sum(axis=2), cube.sum(axis=1)


# ---------------------------------------------------------------- cone information


@njit
def information_rows_nb(x, N, M):
    """-f ln f - s ln s + x ln x + T ln T per row (f, s marginals, T total)."""
    rows = x.shape[0]
    out = np.zeros(rows)
    first = np.zeros(N)
    second = np.zeros(M)
    for r in range(rows):
        first[:] = 0.0
        second[:] = 0.0
        joint = 0.0
        total = 0.0
        for k in range(N):
            for a in range(M):
                v = x[r, k * M + a]
                first[k] += v
                second[a] += v
                total += v
                if v > 0.0:
                    joint += v * np.log(v)
        acc = joint
        for k in range(N):
            if first[k] > 0.0:
                acc -= first[k] * np.log(first[k])
        for a in range(M):
            if second[a] > 0.0:
                acc -= second[a] * np.log(second[a])
        if total > 0.0:
            acc += total * np.log(total)
        out[r] = acc
    return out


def information_rows_np(x, N, M):
    x = np.asarray(x, dtype=float)
    first, second = marginal_rows_np(x, N, M)
    total = x.sum(axis=1)
    return (
        xlogx_rows_np(x)
        - xlogx_rows_np(first)
        - xlogx_rows_np(second)
        + xlogx_rows_np(total[:, None])
    )


# ---------------------------------------------------------------- R_j portrait


@njit
def portrait_first_rj_nb(rho, m12, N, M):
    n = N * M
    out = np.zeros((N, N), dtype=np.complex128)
    rj = np.zeros(n, dtype=np.complex128)
    for j in range(N):
        for k in range(N):
            for a in range(M):
                rj[k * M + a] = rho[k * M + a, j * M + a]
        # only the first N rows of M12 @ R_j are read
        for row in range(N):
            acc = 0.0 + 0.0j
            for c in range(n):
                if m12[row, c] != 0.0:
                    acc += m12[row, c] * rj[c]
            out[row, j] = acc
    return out


def portrait_first_rj_np(rho, m12, N, M):
    rho = np.asarray(rho)
    k = np.repeat(np.arange(N), M)
    a = np.tile(np.arange(M), N)
    rows = k * M + a
    # column j of R holds R_j
    cols = a[:, None] + M * np.arange(N)[None, :]
    r = rho[rows[:, None], cols]
    return (m12 @ r)[:N, :]


# ---------------------------------------------------------------- partial traces


@njit
def partial_trace_nb(rho, N, M, keep_first):
    if keep_first:
        out = np.zeros((N, N), dtype=np.complex128)
        for k in range(N):
            for kp in range(N):
                acc = 0.0 + 0.0j
                for a in range(M):
                    acc += rho[k * M + a, kp * M + a]
                out[k, kp] = acc
    else:
        out = np.zeros((M, M), dtype=np.complex128)
        for a in range(M):
            for b in range(M):
                acc = 0.0 + 0.0j
                for k in range(N):
                    acc += rho[k * M + a, k * M + b]
                out[a, b] = acc
    return out


def partial_trace_np(rho, N, M, keep_first):
    t = np.asarray(rho, dtype=complex).reshape(N, M, N, M)
    if keep_first:
        return np.einsum("iaja->ij", t)
    return np.einsum("kakb->ab", t)


# ---------------------------------------------------------------- partial transpose


@njit
def partial_transpose_second_nb(rho, N, M):
    n = N * M
    out = np.zeros((n, n), dtype=np.complex128)
    for k in range(N):
        for kp in range(N):
            for a in range(M):
                for b in range(M):
                    out[k * M + a, kp * M + b] = rho[k * M + b, kp * M + a]
    return out


def partial_transpose_second_np(rho, N, M):
    t = np.asarray(rho, dtype=complex).reshape(N, M, N, M)
    return t.transpose(0, 3, 2, 1).reshape(N * M, N * M)


# ---------------------------------------------------------------- dispatch

if USE_NUMBA:
    xlogx_rows = xlogx_rows_nb
    marginal_rows = marginal_rows_nb
    information_rows = information_rows_nb
    portrait_first_rj = portrait_first_rj_nb
    partial_trace = partial_trace_nb
    partial_transpose_second = partial_transpose_second_nb
else:
    xlogx_rows = xlogx_rows_np
    marginal_rows = marginal_rows_np
    information_rows = information_rows_np
    portrait_first_rj = portrait_first_rj_np
    partial_trace = partial_trace_np
    partial_transpose_second = partial_transpose_second_np

BACKEND = "numba" if USE_NUMBA else "numpy"

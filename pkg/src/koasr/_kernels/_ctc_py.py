"""Numpy fallback implementations of the CTC kernels.

All functions take a (T, V) float64 matrix of per-frame log-probabilities.
Label sequences arrive blank-interleaved as ``ext`` (blank at even
positions, S = 2L+1). Impossible events hold values at or below the dead
bound (see koasr._numerics); exp() never sees an actual -inf.
"""

import numpy as np

from .._numerics import DEAD_BOUND, LOG_ZERO, log_add


def _skip_mask(ext, blank):
    """skip_ok[s]: transition s-2 -> s is legal (label state, no repeat)."""
    s = np.arange(len(ext))
    ok = (s >= 2) & (ext != blank)
    ok[2:] &= ext[2:] != ext[:-2]
    return ok


def forward_logprob(x, ext, blank):
    """Total log-probability of the blank-interleaved label sequence."""
    T = x.shape[0]
    S = len(ext)
    skip_ok = _skip_mask(ext, blank)
    prev = np.full(S, LOG_ZERO)
    prev[0] = x[0, ext[0]]
    if S > 1:
        prev[1] = x[0, ext[1]]
    for t in range(1, T):
        shifted1 = np.concatenate(([LOG_ZERO], prev[:-1]))
        shifted2 = np.concatenate(([LOG_ZERO, LOG_ZERO], prev[:-2]))
        cur = np.logaddexp(prev, shifted1)
        cur = np.where(skip_ok, np.logaddexp(cur, shifted2), cur)
        prev = cur + x[t, ext]
    total = prev[S - 1] if S == 1 else log_add(prev[S - 1], prev[S - 2])
    return float(total) if total > DEAD_BOUND else LOG_ZERO


def alpha_beta(x, ext, blank):
    """Forward/backward state matrices (emissions included) and the total.

    alpha[t, s] * beta[t, s] / x[t, ext[s]] is the mass of all paths through
    state s at frame t, which is what the gradient needs.
    """
    T = x.shape[0]
    S = len(ext)
    skip_ok = _skip_mask(ext, blank)

    alpha = np.full((T, S), LOG_ZERO)
    alpha[0, 0] = x[0, ext[0]]
    if S > 1:
        alpha[0, 1] = x[0, ext[1]]
    for t in range(1, T):
        prev = alpha[t - 1]
        shifted1 = np.concatenate(([LOG_ZERO], prev[:-1]))
        shifted2 = np.concatenate(([LOG_ZERO, LOG_ZERO], prev[:-2]))
        cur = np.logaddexp(prev, shifted1)
        cur = np.where(skip_ok, np.logaddexp(cur, shifted2), cur)
        alpha[t] = cur + x[t, ext]

    beta = np.full((T, S), LOG_ZERO)
    beta[T - 1, S - 1] = x[T - 1, ext[S - 1]]
    if S > 1:
        beta[T - 1, S - 2] = x[T - 1, ext[S - 2]]
    # arrival-side skip mask viewed from the source state: s -> s+2 is legal
    # exactly when skip_ok[s+2].
    skip_from = np.zeros(S, dtype=bool)
    skip_from[:-2] = skip_ok[2:]
    for t in range(T - 2, -1, -1):
        nxt = beta[t + 1]
        shifted1 = np.concatenate((nxt[1:], [LOG_ZERO]))
        shifted2 = np.concatenate((nxt[2:], [LOG_ZERO, LOG_ZERO]))
        cur = np.logaddexp(nxt, shifted1)
        cur = np.where(skip_from, np.logaddexp(cur, shifted2), cur)
        beta[t] = cur + x[t, ext]

    total = alpha[T - 1, S - 1] if S == 1 else log_add(alpha[T - 1, S - 1],
                                                       alpha[T - 1, S - 2])
    total = float(total) if total > DEAD_BOUND else LOG_ZERO
    return alpha, beta, total


def prefix_extend_one(x, blank, r_prev, last, length, label):
    """Extend a length-`length` prefix by one label.

    r_prev is the (T, 2) state of the current prefix, column 0 ending
    non-blank and column 1 ending blank; ``last`` is the prefix's final
    label or -1. Returns the new (T, 2) state and the log prefix
    probability of the extended prefix.
    """
    T = x.shape[0]
    r = np.full((T, 2), LOG_ZERO)
    if length >= T:
        return r, LOG_ZERO
    if length == 0:
        r[0, 0] = x[0, label]
        psi = r[0, 0]
        start = 1
    else:
        psi = LOG_ZERO
        start = length
    for t in range(start, T):
        if label == last:
            phi_prev = r_prev[t - 1, 1]
        else:
            phi_prev = log_add(r_prev[t - 1, 0], r_prev[t - 1, 1])
        r[t, 0] = log_add(r[t - 1, 0], phi_prev) + x[t, label]
        r[t, 1] = log_add(r[t - 1, 0], r[t - 1, 1]) + x[t, blank]
        psi = log_add(psi, phi_prev + x[t, label])
    if psi <= DEAD_BOUND:
        psi = LOG_ZERO
    return r, float(psi)


def prefix_extend_all(x, blank, r_prev, last, length):
    """prefix_extend_one for every label at once.

    Returns (T, 2, V) states and a (V,) psi vector. The blank column is
    meaningless (a prefix never extends by blank); callers mask it.
    """
    T, V = x.shape
    r = np.full((T, 2, V), LOG_ZERO)
    psi = np.full(V, LOG_ZERO)
    if length >= T:
        return r, psi
    r_sum_prev = np.logaddexp(r_prev[:, 0], r_prev[:, 1])
    phi = np.repeat(r_sum_prev[:, None], V, axis=1)
    if last >= 0:
        phi[:, last] = r_prev[:, 1]
    if length == 0:
        r[0, 0, :] = x[0]
        psi = x[0].copy()
        start = 1
    else:
        start = length
    for t in range(start, T):
        r[t, 0] = np.logaddexp(r[t - 1, 0], phi[t - 1]) + x[t]
        r[t, 1] = np.logaddexp(r[t - 1, 0], r[t - 1, 1]) + x[t, blank]
        psi = np.logaddexp(psi, phi[t - 1] + x[t])
    return r, psi

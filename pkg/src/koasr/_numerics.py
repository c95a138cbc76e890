"""Log-domain primitives shared by the CTC kernels and their callers.

All probability math runs in natural log. Impossible events use the
LOG_ZERO sentinel rather than -inf so that no exp() ever sees an actual
infinity; anything at or below DEAD_BOUND counts as "probability zero".
"""

import numpy as np

LOG_ZERO = -1.0e35
DEAD_BOUND = -1.0e30


def is_log_zero(x) -> bool:
    """True if x is the sentinel for an impossible event."""
    return x <= DEAD_BOUND


def log_add(a: float, b: float) -> float:
    """log(exp(a) + exp(b)) with sentinel-aware clamping."""
    if a <= DEAD_BOUND:
        return b if b > DEAD_BOUND else LOG_ZERO
    if b <= DEAD_BOUND:
        return a
    if a < b:
        a, b = b, a
    return a + np.log1p(np.exp(b - a))


def log_sum_exp(values, axis=None):
    """Stable log-sum-exp over a numpy array; sentinel-only slices stay dead."""
    arr = np.asarray(values, dtype=np.float64)
    m = np.max(arr, axis=axis, keepdims=True)
    dead = m <= DEAD_BOUND
    safe_m = np.where(dead, 0.0, m)
    out = safe_m + np.log(np.sum(np.exp(arr - safe_m), axis=axis, keepdims=True))
    out = np.where(dead, LOG_ZERO, out)
    if axis is None:
        return float(out)
    return np.squeeze(out, axis=axis)

"""CTC objective, gradient, and incremental prefix scoring.

The label-sequence probability sums over every frame path that collapses to
the labels (adjacent repeats removed, then blanks). The forward/backward
recursions run over the blank-interleaved state sequence. The prefix scorer
maintains, per frame, the probability that the path so far yields exactly
the prefix and ends in a blank / non-blank; extending is O(T) per label,
which is what makes label-synchronous joint decoding one-pass.

Impossible events are reported through the LOG_ZERO sentinel (checkable
with is_log_zero) instead of -inf; see koasr._numerics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._numerics import DEAD_BOUND, LOG_ZERO, is_log_zero, log_add
from .lattice import LogProbLattice

__all__ = [
    "LOG_ZERO", "is_log_zero", "collapse", "min_alignable_frames",
    "ctc_forward", "ctc_gradient", "CtcPrefixState", "ctc_prefix_init",
    "ctc_prefix_extend", "ctc_prefix_terminate",
]


def collapse(path, blank_id: int = 0) -> list[int]:
    """Map a frame path to labels: drop adjacent repeats, then blanks."""
    out = []
    prev = None
    for v in path:
        if v != prev:
            out.append(v)
        prev = v
    return [v for v in out if v != blank_id]


def min_alignable_frames(labels) -> int:
    """Fewest frames that can emit `labels` (repeats need a blank between)."""
    labels = list(labels)
    repeats = sum(1 for a, b in zip(labels, labels[1:]) if a == b)
    return len(labels) + repeats


def _checked_labels(lattice: LogProbLattice, labels) -> list[int]:
    out = list(labels)
    for v in out:
        if not 0 <= v < lattice.vocab_size:
            raise ValueError(f"label id {v} outside vocabulary "
                             f"of size {lattice.vocab_size}")
        if v == lattice.blank_id:
            raise ValueError("label sequences must not contain the blank id")
    return out


def _interleaved(labels, blank_id: int) -> np.ndarray:
    ext = np.full(2 * len(labels) + 1, blank_id, dtype=np.int64)
    ext[1::2] = labels
    return ext


def ctc_forward(lattice: LogProbLattice, labels) -> float:
    """log P(labels | lattice) summed over all collapsing paths.

    Returns the LOG_ZERO sentinel when the labels cannot be aligned in
    lattice.frames frames (checked up front, no -inf arithmetic).
    """
    labels = _checked_labels(lattice, labels)
    if min_alignable_frames(labels) > lattice.frames:
        return LOG_ZERO
    ext = _interleaved(labels, lattice.blank_id)
    return _kernels.forward_logprob(lattice.values, ext, lattice.blank_id)


def ctc_gradient(lattice: LogProbLattice, labels) -> np.ndarray:
    """d log P(labels) / d values[t, v], a (T, V) matrix.

    Entries are zero wherever symbol v cannot occur at frame t. For
    unalignable labels the objective is identically impossible and the
    matrix is all zero.
    """
    labels = _checked_labels(lattice, labels)
    T, V = lattice.frames, lattice.vocab_size
    if min_alignable_frames(labels) > T:
        return np.zeros((T, V))
    ext = _interleaved(labels, lattice.blank_id)
    alpha, beta, logp = _kernels.alpha_beta(lattice.values, ext,
                                            lattice.blank_id)
    if is_log_zero(logp):
        return np.zeros((T, V))
    # occupancy of state s at frame t, with the doubled emission divided out
    occ = alpha + beta - lattice.values[:, ext]
    acc = np.full((T, V), LOG_ZERO)
    for s, v in enumerate(ext):
        acc[:, v] = np.logaddexp(acc[:, v], occ[:, s])
    grad = np.zeros((T, V))
    live = acc > DEAD_BOUND
    grad[live] = np.exp(acc[live] - logp)
    return grad


@dataclass(frozen=True, eq=False)
class CtcPrefixState:
    """Immutable prefix-scorer state; extending returns a new state.

    ``r`` is (T, 2): column 0 holds the log-probability that frames 0..t
    emit exactly the prefix and end on its last label, column 1 the same
    ending on blank. ``log_psi`` is the log prefix probability, i.e. the
    probability that the prefix is a prefix of the collapsed output.
    """

    lattice: LogProbLattice
    r: np.ndarray
    last: int
    length: int
    log_psi: float


def ctc_prefix_init(lattice: LogProbLattice) -> CtcPrefixState:
    """State for the empty prefix (prefix probability 1)."""
    r = np.full((lattice.frames, 2), LOG_ZERO)
    r[:, 1] = np.cumsum(lattice.values[:, lattice.blank_id])
    r.setflags(write=False)
    return CtcPrefixState(lattice, r, -1, 0, 0.0)


def ctc_prefix_extend(state: CtcPrefixState,
                      label: int) -> tuple[CtcPrefixState, float]:
    """Extend the prefix by one non-blank label.

    Returns the new state and its log prefix probability, which is
    monotone non-increasing along any extension chain.
    """
    lat = state.lattice
    if not 0 <= label < lat.vocab_size:
        raise ValueError(f"label id {label} outside vocabulary")
    if label == lat.blank_id:
        raise ValueError("cannot extend a prefix with the blank id")
    r, psi = _kernels.prefix_extend_one(lat.values, lat.blank_id, state.r,
                                        state.last, state.length, label)
    r.setflags(write=False)
    return CtcPrefixState(lat, r, label, state.length + 1, psi), psi


def ctc_prefix_extend_all(state: CtcPrefixState):
    """Prefix scores for every label extension at once.

    Returns (psi, r_all) with psi of shape (V,) (blank masked to LOG_ZERO)
    and r_all of shape (T, 2, V). Used by the beam search hot loop;
    semantically identical to calling ctc_prefix_extend per label.
    """
    lat = state.lattice
    r_all, psi = _kernels.prefix_extend_all(lat.values, lat.blank_id, state.r,
                                            state.last, state.length)
    psi = np.asarray(psi, dtype=np.float64)
    psi[lat.blank_id] = LOG_ZERO
    return psi, r_all


def prefix_state_at(state: CtcPrefixState, r_all, psi, label: int) -> CtcPrefixState:
    """Materialize the child state for one label from extend-all output."""
    r = np.ascontiguousarray(r_all[:, :, label])
    r.setflags(write=False)
    return CtcPrefixState(state.lattice, r, label, state.length + 1,
                          float(psi[label]))


def ctc_prefix_terminate(state: CtcPrefixState) -> float:
    """Fully terminated probability: the prefix is the entire output."""
    total = log_add(float(state.r[-1, 0]), float(state.r[-1, 1]))
    return total if total > DEAD_BOUND else LOG_ZERO

"""Per-frame label posterior lattices and their text file format.

A lattice is a T x V matrix of log-probabilities, one row per frame, with a
designated blank id. Files are UTF-8 text: a header ``T=<int> V=<int>
blank=<int>`` followed by T rows of V space-separated decimals written with
round-trip-safe precision.
"""

from __future__ import annotations

import numpy as np

from ._numerics import log_sum_exp
from .errors import LatticeFormatError

ROW_NORM_TOL = 1e-6


class LogProbLattice:
    """Immutable (T, V) log-probability surface with a blank id."""

    def __init__(self, values, blank_id: int = 0, validate: bool = True):
        arr = np.ascontiguousarray(values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise LatticeFormatError(f"lattice must be 2-D, got shape {arr.shape}")
        if not 0 <= blank_id < arr.shape[1]:
            raise LatticeFormatError(f"blank id {blank_id} outside vocabulary "
                                     f"of size {arr.shape[1]}")
        if validate:
            norms = log_sum_exp(arr, axis=1)
            worst = float(np.max(np.abs(norms)))
            if worst > ROW_NORM_TOL:
                raise LatticeFormatError(
                    f"lattice rows must normalize: |logsumexp| up to {worst:.3g}")
        arr.setflags(write=False)
        self.values = arr
        self.blank_id = blank_id

    @property
    def frames(self) -> int:
        return self.values.shape[0]

    @property
    def vocab_size(self) -> int:
        return self.values.shape[1]

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"T={self.frames} V={self.vocab_size} blank={self.blank_id}\n")
            for row in self.values:
                fh.write(" ".join(f"{v:.17g}" for v in row) + "\n")

    @classmethod
    def load(cls, path) -> "LogProbLattice":
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().split()
            try:
                fields = dict(part.split("=", 1) for part in header)
                t = int(fields["T"])
                v = int(fields["V"])
                blank = int(fields["blank"])
            except (ValueError, KeyError) as exc:
                raise LatticeFormatError(f"bad lattice header: {header}") from exc
            rows = []
            for lineno, line in enumerate(fh, start=2):
                if not line.strip():
                    continue
                row = [float(tok) for tok in line.split()]
                if len(row) != v:
                    raise LatticeFormatError(
                        f"line {lineno}: expected {v} values, got {len(row)}")
                rows.append(row)
        if len(rows) != t:
            raise LatticeFormatError(f"expected {t} frames, got {len(rows)}")
        return cls(np.array(rows, dtype=np.float64), blank_id=blank)

"""CTC kernel backend selection.

The compiled Cython kernels are used when available; setting the
environment variable ``KOASR_PURE_PYTHON=1`` forces the numpy fallback.
Both backends expose the same functions with identical semantics:
``forward_logprob``, ``alpha_beta``, ``prefix_extend_one`` and
``prefix_extend_all``.
"""

import os

from . import _ctc_py

if os.environ.get("KOASR_PURE_PYTHON") == "1":
    _impl = _ctc_py
else:
    try:
        from . import _ctc_cy as _impl
    except ImportError:
        _impl = _ctc_py

forward_logprob = _impl.forward_logprob
alpha_beta = _impl.alpha_beta
prefix_extend_one = _impl.prefix_extend_one
prefix_extend_all = _impl.prefix_extend_all

COMPILED = _impl is not _ctc_py


def backend_name() -> str:
    return "cython" if COMPILED else "python"

"""Kernel backend selection.

The compiled extension handles the hot loops with fixed-width integers
and falls back to the pure-Python twin when a computation would
overflow or a sign cannot be settled in doubles.  Set COXTRACE_PURE=1
to force the pure backend (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import importlib
import os

from . import pure
from .pure import (OK, RETRY, FAULT, PARIKH_BIAS, stratum_offsets,
                   encode_word, decode_word, unpack_parikh)

_speed = None
if not os.environ.get("COXTRACE_PURE"):
    try:
        _speed = importlib.import_module("._speed", __name__)
    except ImportError:
        _speed = None

BACKEND = "compiled" if _speed is not None else "pure"


def backend_name() -> str:
    return BACKEND


def _dispatch(name, *args):
    if _speed is not None:
        result = getattr(_speed, name)(*args)
        if result[0] != RETRY:
            return result
    return getattr(pure, name)(*args)


def cox_scan_one(tables, word):
    return _dispatch("cox_scan_one", tables, list(word))


def racg_vector_one(n, dep, word, start):
    return _dispatch("racg_vector_one", n, dep, list(word), start)


def racg_shortlex_one(n, dep, word):
    return _dispatch("racg_shortlex_one", n, dep, list(word))


def graph_shortlex_one(n_sigma, indep, word):
    return _dispatch("graph_shortlex_one", n_sigma, indep, list(word))


def _bulk(name, *args):
    mod = _speed if _speed is not None else pure
    return getattr(mod, name)(*args)


def cox_sweep(tables, maxlen):
    status, length, alpha, parikh = _bulk("cox_sweep", tables, maxlen)
    if _speed is not None and (status == RETRY).any():
        # repair the rare words the fixed-width scan gave up on
        n_base = tables[0]
        offs = stratum_offsets(n_base, maxlen)
        for idx in (status == RETRY).nonzero()[0]:
            word = decode_word(n_base, offs, int(idx))
            st, ell, counts, mask = pure.cox_scan_one(tables, word)
            status[idx] = st
            length[idx] = ell
            alpha[idx] = mask
            parikh[idx] = pure._pack_parikh(counts)
    return status, length, alpha, parikh


def racg_sweep(n, dep, maxlen):
    return _bulk("racg_sweep", n, dep, maxlen)


def graph_sweep(n_sigma, indep, maxlen):
    return _bulk("graph_sweep", n_sigma, indep, maxlen)


def oracle_cox_table(n, mmat, maxlen):
    return _bulk("oracle_cox_table", n, mmat, maxlen)


def oracle_graph_table(n_sigma, indep, maxlen):
    return _bulk("oracle_graph_table", n_sigma, indep, maxlen)

"""Kernel dispatch: the compiled extension when importable, else pure Python.

The compiled kernels work on ``int64``; a call is routed to them only when
the worst-case bucket sum provably fits, otherwise the exact Python kernels
run instead.  :func:`set_backend` forces a backend (tests, benchmarks).
"""

from __future__ import annotations

import logging

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

log = logging.getLogger(__name__)

_INT64_LIMIT = 1 << 63
_backend = "compiled" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    return ["compiled", "python"] if _ckernels is not None else ["python"]


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    _backend = name


def _fits(table, terms: int) -> bool:
    peak = max(abs(min(table)), abs(max(table)))
    return 2 * peak * terms < _INT64_LIMIT


def shapley_sums(table: list[int], n: int):
    if _backend == "compiled" and _fits(table, 1 << max(n - 1, 0)):
        return _ckernels.shapley_sums(table, n)
    return _pykernels.shapley_sums(table, n)


def configuration_sums(table: list[int], n: int, blocks: tuple[int, ...]):
    if _backend == "compiled":
        m = len(blocks)
        terms = 0
        for i in range(n):
            own = [b for b in blocks if b >> i & 1]
            outside = m - len(own)
            for b in own:
                terms = max(terms, 1 << (outside + b.bit_count() - 1))
        if _fits(table, terms):
            return _ckernels.configuration_sums(table, n, blocks)
        log.debug("int64 bound exceeded; using the Python kernel")
    return _pykernels.configuration_sums(table, n, blocks)

"""Backend selection and parallel drivers for the exhaustive-scan kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` is used.  Setting ``HYPERRAMSEY_BACKEND=python``
forces the fallback.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from math import comb
from types import ModuleType

from . import _pykernels

log = logging.getLogger(__name__)


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()

if os.environ.get("HYPERRAMSEY_BACKEND", "").lower() == "python" or _compiled is None:
    impl: ModuleType = _pykernels
    BACKEND = "python"
else:
    impl = _compiled
    BACKEND = "cython"


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return impl
    try:
        return available_backends()[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available") from None


def class_table(N: int, k: int, backend: str | None = None) -> bytearray:
    return get_backend(backend).class_table(N, k)


def stepup_table(N: int, k: int, phi_red: bytes, strong: bool, backend: str | None = None) -> bytearray:
    return get_backend(backend).stepup_table(N, k, phi_red, strong)


def rank_table(N: int, k: int, phi_vals: bytes, backend: str | None = None) -> bytearray:
    return get_backend(backend).rank_table(N, k, phi_vals)


def claim1_scan(N: int, k: int, classes: bytes, backend: str | None = None):
    return get_backend(backend).claim1_scan(N, k, classes)


def _chunks(M: int, k: int, pieces: int) -> list[tuple[int, int]]:
    """Split top-element range [k, M) into contiguous pieces of similar work.

    Sets with largest element ``top`` are contiguous in colex order, so each
    piece is a contiguous stretch of the colex stream.
    """
    if M <= k:
        return [(k, k)]
    total = comb(M, k + 1)
    target = max(1, total // pieces)
    out = []
    lo = k
    acc = 0
    for top in range(k, M):
        acc += comb(top, k)
        if acc >= target and top + 1 < M:
            out.append((lo, top + 1))
            lo = top + 1
            acc = 0
    out.append((lo, M))
    return out


def _red_chunk(args):
    backend, M, k, table, t, lo, hi = args
    return get_backend(backend).red_scan(M, k, table, t, lo, hi)


def _case1_chunk(args):
    backend, N, k, lo, hi = args
    return get_backend(backend).case1_scan(N, k, lo, hi)


def _run(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(a) for a in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def red_scan(M: int, k: int, table: bytes, t: int, jobs: int = 1,
             backend: str | None = None):
    """Red-count histogram over all (k+1)-subsets of range(M).

    Returns ``(hist, witness)``; the witness is the colex-first set with at
    least ``t`` red edges regardless of ``jobs``.
    """
    name = backend or BACKEND
    pieces = _chunks(M, k, 4 * jobs) if jobs > 1 else [(0, M)]
    tasks = [(name, M, k, bytes(table), t, lo, hi) for lo, hi in pieces]
    hist = [0] * (k + 2)
    witness = None
    for h, w in _run(_red_chunk, tasks, jobs):  # chunk results arrive in colex order
        hist = [a + b for a, b in zip(hist, h)]
        if witness is None and w is not None:
            witness = w
    return hist, witness


def case1_scan(N: int, k: int, jobs: int = 1, backend: str | None = None):
    name = backend or BACKEND
    M = 1 << N
    pieces = _chunks(M, k, 4 * jobs) if jobs > 1 else [(0, M)]
    n_inc = n_dec = n_bad = 0
    first = None
    for a, b, c, f in _run(_case1_chunk, [(name, N, k, lo, hi) for lo, hi in pieces], jobs):
        n_inc += a
        n_dec += b
        n_bad += c
        if first is None and f is not None:
            first = f
    return n_inc, n_dec, n_bad, first

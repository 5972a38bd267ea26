"""Exhaustive resolving-set kernels over a dense distance matrix.

Two interchangeable backends:

* ``numba``: an ``@njit`` lexicographic combination walker that reuses the
  packed codes of the unchanged landmark prefix and stops at the first
  repeated code (stamped open-addressing set, no sorting).
* ``numpy``: chunked ``itertools.combinations`` blocks scored with array ops.

``THETADIM_DISABLE_JIT=1`` forces the numpy path; it is also used when numba
cannot be imported.  Both backends return identical results, witnesses in
lexicographic subset order.
"""

from __future__ import annotations

import os
from itertools import combinations, islice
from math import comb

import numpy as np

_CODE_LIMIT = 2**62
_CHUNK = 8192


def _jit_wanted() -> bool:
    return os.environ.get("THETADIM_DISABLE_JIT", "").strip().lower() not in ("1", "true", "yes", "on")


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    njit = None

HAVE_NUMBA = njit is not None
BACKEND = "numba" if HAVE_NUMBA and _jit_wanted() else "numpy"


def _check_codes(dist: np.ndarray, k: int) -> int:
    base = int(dist.max()) + 1
    if base ** max(k, 1) >= _CODE_LIMIT:
        raise ValueError(f"distance codes overflow int64 (base {base}, k {k})")
    return base


# ---------------------------------------------------------------------------
# numpy backend

def _resolves_block_np(dist: np.ndarray, subsets: np.ndarray, base: int) -> np.ndarray:
    # codes[c, x] packs the distance vector of vertex x under subset c
    codes = np.zeros((subsets.shape[0], dist.shape[0]), dtype=np.int64)
    for t in range(subsets.shape[1]):
        codes *= base
        codes += dist[subsets[:, t]]
    codes.sort(axis=1)
    return ~np.any(codes[:, 1:] == codes[:, :-1], axis=1)


def _scan_level_np(dist: np.ndarray, k: int, cap: int):
    n = dist.shape[0]
    base = _check_codes(dist, k)
    count = 0
    found: list[np.ndarray] = []
    it = combinations(range(n), k)
    while True:
        block = np.array(list(islice(it, _CHUNK)), dtype=np.int64).reshape(-1, k)
        if block.shape[0] == 0:
            break
        ok = _resolves_block_np(dist, block, base)
        hits = block[ok]
        if count < cap and hits.shape[0]:
            found.append(hits[: cap - count])
        count += int(hits.shape[0])
    wit = np.concatenate(found) if found else np.empty((0, k), dtype=np.int64)
    return count, wit, comb(n, k)


# ---------------------------------------------------------------------------
# numba backend

if HAVE_NUMBA:

    _GOLDEN = np.uint64(0x9E3779B97F4A7C15)

    @njit(cache=True, nogil=True, inline="always")
    def _slot(code, shift):
        return np.int64((np.uint64(code) * _GOLDEN) >> shift)

    @njit(cache=True, nogil=True)
    def _table_bits(n):
        bits = 2
        while (1 << bits) < 4 * n:
            bits += 1
        return bits

    @njit(cache=True, nogil=True)
    def _scan_level_jit(dist, k, cap, base):
        n = dist.shape[0]
        wit = np.empty((max(cap, 1), k), dtype=np.int64)
        count = 0
        examined = 0
        if k > n:
            return count, wit[:0], examined
        idx = np.arange(k)
        # partial[t, x]: packed distances of x to landmarks 0..t (t < k - 1)
        partial = np.zeros((max(k - 1, 1), n), dtype=np.int64)
        # open-addressing set; a slot is live only if its stamp is current
        bits = _table_bits(n)
        size = 1 << bits
        mask = size - 1
        shift = np.uint64(64 - bits)
        keys = np.empty(size, dtype=np.int64)
        stamps = np.zeros(size, dtype=np.int64)
        stamp = 0
        dirty = 0
        while True:
            for t in range(dirty, k - 1):
                w = idx[t]
                if t == 0:
                    for x in range(n):
                        partial[0, x] = dist[w, x]
                else:
                    for x in range(n):
                        partial[t, x] = partial[t - 1, x] * base + dist[w, x]
            examined += 1
            stamp += 1
            last = idx[k - 1]
            ok = True
            for x in range(n):
                code = dist[last, x]
                if k > 1:
                    code += partial[k - 2, x] * base
                h = _slot(code, shift)
                while stamps[h] == stamp:
                    if keys[h] == code:
                        ok = False
                        break
                    h = (h + 1) & mask
                if not ok:
                    break
                stamps[h] = stamp
                keys[h] = code
            if ok:
                if count < cap:
                    wit[count, :] = idx
                count += 1
            t = k - 1
            while t >= 0 and idx[t] == n - k + t:
                t -= 1
            if t < 0:
                break
            idx[t] += 1
            for u in range(t + 1, k):
                idx[u] = idx[u - 1] + 1
            dirty = min(t, k - 1)
        return count, wit[: min(count, cap)], examined

    @njit(cache=True, nogil=True)
    def _resolves_block_jit(dist, subsets, base):
        n = dist.shape[0]
        c, k = subsets.shape
        out = np.ones(c, dtype=np.bool_)
        bits = _table_bits(n)
        mask = (1 << bits) - 1
        shift = np.uint64(64 - bits)
        keys = np.empty(1 << bits, dtype=np.int64)
        stamps = np.zeros(1 << bits, dtype=np.int64)
        for r in range(c):
            for x in range(n):
                code = 0
                for t in range(k):
                    code = code * base + dist[subsets[r, t], x]
                h = _slot(code, shift)
                clash = False
                while stamps[h] == r + 1:
                    if keys[h] == code:
                        clash = True
                        break
                    h = (h + 1) & mask
                if clash:
                    out[r] = False
                    break
                stamps[h] = r + 1
                keys[h] = code
        return out


# ---------------------------------------------------------------------------
# public entry points

def scan_level(dist: np.ndarray, k: int, cap: int, backend: str | None = None):
    """Scan every ``k``-subset of ``range(n)`` in lexicographic order.

    Returns ``(count, witnesses, examined)``: the number of resolving subsets,
    the first ``cap`` of them as a ``(<=cap, k)`` int array, and the number of
    subsets looked at.
    """
    backend = backend or BACKEND
    dist = np.ascontiguousarray(dist, dtype=np.int64)
    n = dist.shape[0]
    if k < 1:
        raise ValueError("subset size must be >= 1")
    if k > n:
        return 0, np.empty((0, k), dtype=np.int64), 0
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        base = _check_codes(dist, k)
        count, wit, examined = _scan_level_jit(dist, k, cap, base)
        return int(count), np.asarray(wit), int(examined)
    if backend == "numpy":
        return _scan_level_np(dist, k, cap)
    raise ValueError(f"unknown backend {backend!r}")


def resolves_block(dist: np.ndarray, subsets: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Boolean mask: which rows of ``subsets`` (landmark index sets) resolve."""
    backend = backend or BACKEND
    dist = np.ascontiguousarray(dist, dtype=np.int64)
    subsets = np.ascontiguousarray(subsets, dtype=np.int64)
    if subsets.ndim != 2:
        raise ValueError("subsets must be a 2-D array")
    if subsets.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    base = _check_codes(dist, subsets.shape[1])
    if backend == "numba":
        return _resolves_block_jit(dist, subsets, base)
    return _resolves_block_np(dist, subsets, base)

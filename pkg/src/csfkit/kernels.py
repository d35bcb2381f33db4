"""Edge-subset enumeration kernel behind the power-sum expansion.

Every subset S of the edge set is visited, the component sizes of (V, S) are
reduced to a multiset hash, and the hash is mapped back to its partition's
index. Two backends compute the identical histogram:

* ``numba``: a compiled loop with a per-subset union-find.
* ``numpy``: chunked, vectorised label propagation.

Set ``CSF_DISABLE_NUMBA=1`` to force the numpy path. It is also used when
numba cannot be imported.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from csfkit.partitions import partitions_of

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

HASH_SEED = 0x5EED_C5F


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("CSF_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes")


@lru_cache(maxsize=None)
def size_hash_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-size hash weights plus the sorted partition hashes for degree ``n``.

    Returns ``(weights, sorted_hashes, order)`` where the hash of a partition
    is the wrapping uint64 sum of ``weights[part]`` and ``order[j]`` is the
    enumeration index of the partition whose hash is ``sorted_hashes[j]``.
    """
    rng = np.random.Generator(np.random.PCG64(HASH_SEED))
    weights = rng.integers(1, np.iinfo(np.uint64).max, size=n + 1, dtype=np.uint64, endpoint=True)
    weights[0] = 0
    hashes = np.array(
        [int(sum(int(weights[p]) for p in lam) % (1 << 64)) for lam in partitions_of(n)],
        dtype=np.uint64,
    )
    if len(np.unique(hashes)) != len(hashes):
        raise RuntimeError(f"partition hash collision at n={n}; change HASH_SEED")
    order = np.argsort(hashes, kind="stable")
    return weights, hashes[order], order.astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _histogram_numba(nv, eu, ev, start, stop, weights, sorted_hashes, order, out):
        ne = eu.shape[0]
        parent = np.empty(nv, np.int64)
        size = np.empty(nv, np.int64)
        misses = 0
        for mask in range(start, stop):
            for v in range(nv):
                parent[v] = v
                size[v] = 1
            kept = 0
            for e in range(ne):
                if (mask >> e) & 1:
                    kept += 1
                    a = eu[e]
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    b = ev[e]
                    while parent[b] != b:
                        parent[b] = parent[parent[b]]
                        b = parent[b]
                    if a != b:
                        if size[a] < size[b]:
                            a, b = b, a
                        parent[b] = a
                        size[a] += size[b]
            h = np.uint64(0)
            for v in range(nv):
                if parent[v] == v:
                    h += weights[size[v]]
            j = np.searchsorted(sorted_hashes, h)
            if j >= sorted_hashes.shape[0] or sorted_hashes[j] != h:
                misses += 1
                continue
            if kept % 2 == 0:
                out[order[j]] += 1
            else:
                out[order[j]] -= 1
        return misses


def _histogram_numpy(nv, eu, ev, start, stop, weights, sorted_hashes, order, out, chunk=1 << 13):
    ne = eu.shape[0]
    shifts = np.arange(ne, dtype=np.int64)
    for lo in range(start, stop, chunk):
        masks = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        rows = masks.shape[0]
        kept = ((masks[:, None] >> shifts) & 1).astype(bool)
        labels = np.tile(np.arange(nv, dtype=np.int64), (rows, 1))
        while True:
            before = labels
            labels = labels.copy()
            for e in range(ne):
                a, b = eu[e], ev[e]
                m = np.minimum(labels[:, a], labels[:, b])
                sel = kept[:, e]
                labels[sel, a] = m[sel]
                labels[sel, b] = m[sel]
            labels = np.take_along_axis(labels, labels, axis=1)
            if np.array_equal(labels, before):
                break
        flat = labels + (np.arange(rows, dtype=np.int64) * nv)[:, None]
        sizes = np.bincount(flat.ravel(), minlength=rows * nv).reshape(rows, nv)
        h = weights[sizes].sum(axis=1, dtype=np.uint64)
        j = np.searchsorted(sorted_hashes, h)
        if np.any(j >= len(sorted_hashes)) or np.any(sorted_hashes[np.minimum(j, len(sorted_hashes) - 1)] != h):
            raise RuntimeError("component multiset did not hash to a partition")
        idx = order[j]
        odd = kept.sum(axis=1) % 2 == 1
        out += np.bincount(idx[~odd], minlength=len(out)) - np.bincount(idx[odd], minlength=len(out))


def edge_subset_histogram(nv: int, edges, *, backend: str | None = None) -> np.ndarray:
    """Signed counts sum_S (-1)^|S| per component-size partition.

    The result is indexed like ``partitions_of(nv)``.
    """
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    eu = np.ascontiguousarray(edges[:, 0])
    ev = np.ascontiguousarray(edges[:, 1])
    weights, sorted_hashes, order = size_hash_table(nv)
    out = np.zeros(len(order), dtype=np.int64)
    stop = 1 << len(edges)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        misses = _histogram_numba(nv, eu, ev, 0, stop, weights, sorted_hashes, order, out)
        if misses:
            raise RuntimeError("component multiset did not hash to a partition")
    elif backend == "numpy":
        _histogram_numpy(nv, eu, ev, 0, stop, weights, sorted_hashes, order, out)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return out

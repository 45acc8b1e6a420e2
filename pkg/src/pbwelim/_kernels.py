"""Integer kernels for staircase counting, compiled with numba when available.

Backend selection: ``PBWELIM_BACKEND=numba`` (default when numba imports)
or ``PBWELIM_BACKEND=numpy`` for the pure-numpy path. Both paths return
identical arrays; the benchmark in ``benchmarks/`` compares them.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

BACKEND = os.environ.get("PBWELIM_BACKEND", "numba" if HAVE_NUMBA else "numpy").lower()
if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"PBWELIM_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")
if BACKEND == "numba" and not HAVE_NUMBA:
    BACKEND = "numpy"


# --- standard-monomial histogram ------------------------------------------------


def _histogram_numpy(gens, weights, Q):
    n = weights.shape[0]
    hist = np.zeros(Q + 1, dtype=np.int64)
    w0 = int(weights[0])
    for e0 in range(Q // w0 + 1):
        # all exponent vectors of the remaining variables with degree <= Q - e0*w0
        budget = Q - e0 * w0
        rest = np.zeros((1, n - 1), dtype=np.int64)
        deg = np.zeros(1, dtype=np.int64)
        for k in range(1, n):
            w = int(weights[k])
            steps = np.arange(budget // w + 1, dtype=np.int64)
            new_deg = (deg[:, None] + w * steps[None, :]).ravel()
            keep = new_deg <= budget
            rest = np.repeat(rest, steps.size, axis=0)
            rest[:, k - 1] = np.tile(steps, deg.size)
            rest, deg = rest[keep], new_deg[keep]
        standard = np.ones(deg.size, dtype=np.bool_)
        for g in gens:
            if e0 >= g[0]:
                standard &= ~np.all(rest >= g[1:], axis=1)
        hist += np.bincount(deg[standard] + e0 * w0, minlength=Q + 1)[:Q + 1]
    return hist


def _histogram_loop(gens, weights, Q):
    n = weights.shape[0]
    k = gens.shape[0]
    hist = np.zeros(Q + 1, dtype=np.int64)
    e = np.zeros(n, dtype=np.int64)
    deg = 0
    while True:
        standard = True
        for g in range(k):
            inside = True
            for i in range(n):
                if e[i] < gens[g, i]:
                    inside = False
                    break
            if inside:
                standard = False
                break
        if standard:
            hist[deg] += 1
        # odometer step: bump the last coordinate that still fits
        i = n - 1
        while i >= 0:
            if deg + weights[i] <= Q:
                e[i] += 1
                deg += weights[i]
                break
            deg -= e[i] * weights[i]
            e[i] = 0
            i -= 1
        if i < 0:
            break
    return hist


# --- largest generator subset avoiding every staircase support -----------------


def _free_subset_numpy(masks, n):
    allm = np.arange(1 << n, dtype=np.int64)
    free = np.ones(allm.size, dtype=np.bool_)
    for g in masks:
        free &= (allm & g) != g
    if not free.any():
        return -1, 0
    pop = np.zeros(allm.size, dtype=np.int64)
    rev = np.zeros(allm.size, dtype=np.int64)
    for i in range(n):
        bit = (allm >> i) & 1
        pop += bit
        rev |= bit << (n - 1 - i)
    score = np.where(free, pop * (1 << n) + rev, -1)
    best = int(np.argmax(score))
    return int(pop[best]), best


def _free_subset_loop(masks, n):
    best_size = -1
    best_rev = -1
    best_mask = 0
    for m in range(1 << n):
        ok = True
        for g in masks:
            if (m & g) == g:
                ok = False
                break
        if not ok:
            continue
        pop = 0
        rev = 0
        for i in range(n):
            if (m >> i) & 1:
                pop += 1
                rev |= 1 << (n - 1 - i)
        if pop > best_size or (pop == best_size and rev > best_rev):
            best_size = pop
            best_rev = rev
            best_mask = m
    return best_size, best_mask


if HAVE_NUMBA:
    _histogram_jit = njit(cache=True)(_histogram_loop)
    _free_subset_jit = njit(cache=True)(_free_subset_loop)


def standard_histogram(gens, weights, Q: int, backend: str | None = None) -> np.ndarray:
    """Number of exponent vectors outside the staircase, per weighted degree 0..Q."""
    backend = backend or BACKEND
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    n = weights.shape[0]
    gens = np.ascontiguousarray(np.asarray(gens, dtype=np.int64).reshape(-1, n))
    if backend == "numba" and HAVE_NUMBA:
        return _histogram_jit(gens, weights, int(Q))
    if n == 1:
        return _histogram_loop(gens, weights, int(Q))
    return _histogram_numpy(gens, weights, int(Q))


def max_free_subset(masks, n: int, backend: str | None = None) -> tuple[int, int]:
    """``(size, mask)`` of the largest index set containing no mask of ``masks``.

    Ties go to the lexicographically smallest sorted index tuple. Size is -1
    when every set (including the empty one) contains some mask.
    """
    backend = backend or BACKEND
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if backend == "numba" and HAVE_NUMBA:
        size, mask = _free_subset_jit(masks, n)
        return int(size), int(mask)
    return _free_subset_numpy(masks, n)

"""Pure-Python (numpy) implementations of the hot kernels.

Selected at import when the compiled ``_ckernels`` extension is missing or
``RAMONOID_PURE_PYTHON`` is set.  Signatures and results match the compiled
module exactly.
"""

from __future__ import annotations

import numpy as np


def _inv(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(a, p: int) -> np.ndarray:
    """Reduced row-echelon form of ``a`` over Z/p with zero rows dropped."""
    m = np.array(a, dtype=np.int64, copy=True, ndmin=2) % p
    nr, nc = m.shape
    row = 0
    for col in range(nc):
        if row == nr:
            break
        nz = np.flatnonzero(m[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            m[[row, piv]] = m[[piv, row]]
        lead = int(m[row, col])
        if lead != 1:
            m[row] = (m[row] * _inv(lead, p)) % p
        f = m[:, col].copy()
        f[row] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            m[hit] = (m[hit] - np.outer(f[hit], m[row])) % p
        row += 1
    return m[:row].copy()


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (rows, in RREF) of ``{v : a @ v = 0}`` over Z/p."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim == 2 and a.shape[0] > 0:
        ncols = a.shape[1]
    elif ncols is None:
        ncols = a.shape[-1]
    if a.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r = rref(a, p)
    pivots = [int(np.flatnonzero(row)[0]) for row in r]
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = (-r[i, fc]) % p
    return rref(out, p) if len(free) else out


def containment_matrix(rows: np.ndarray, offsets: np.ndarray, pivots: np.ndarray, p: int) -> np.ndarray:
    """``C[i, j]`` is true iff subspace i lies inside subspace j.

    All subspaces are given in RREF, stacked in ``rows``; subspace i occupies
    ``rows[offsets[i]:offsets[i+1]]`` and ``pivots`` holds the pivot column of
    every stacked row.
    """
    n = len(offsets) - 1
    dims = np.diff(offsets)
    out = np.zeros((n, n), dtype=bool)
    if rows.shape[0] == 0:
        return np.ones((n, n), dtype=bool)
    owner = np.repeat(np.arange(n), dims)
    for j in range(n):
        lo, hi = offsets[j], offsets[j + 1]
        basis = rows[lo:hi]
        piv = pivots[lo:hi]
        if hi > lo:
            resid = (rows - rows[:, piv] @ basis) % p
        else:
            resid = rows
        bad = np.zeros(n, dtype=bool)
        bad_rows = resid.any(axis=1)
        np.logical_or.at(bad, owner[bad_rows], True)
        ok = ~bad
        # a subspace of larger dimension can never fit
        ok &= dims <= (hi - lo)
        out[:, j] = ok
    return out


def subgroup_closure(mask, gens, coords, moduli, weights) -> np.ndarray:
    """Smallest subgroup containing the subgroup ``mask`` and elements ``gens``.

    Elements are indices into ``coords`` (mixed-radix coordinates with the
    given ``moduli``); ``weights`` turns coordinates back into indices.
    """
    out = np.array(mask, dtype=np.uint8, copy=True)
    for g in gens:
        g = int(g)
        if out[g]:
            continue
        base = coords[np.flatnonzero(out)]
        step = coords[g]
        x = step.copy()
        while not out[int(x @ weights)]:
            idx = ((base + x) % moduli) @ weights
            out[idx] = 1
            x = (x + step) % moduli
    return out

# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: modular row reduction, subspace containment and
subgroup closure.  Mirrors ``_pykernels`` call for call."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()


cdef inline int64_t _mod(int64_t x, int64_t p) nogil:
    x = x % p
    if x < 0:
        x += p
    return x


cdef inline int64_t _inv(int64_t x, int64_t p) nogil:
    cdef int64_t r = 1, b = _mod(x, p), e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef Py_ssize_t _rref_inplace(int64_t[:, ::1] a, int64_t p) nogil:
    cdef Py_ssize_t nr = a.shape[0], nc = a.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, piv
    cdef int64_t f, inv, t
    for i in range(nr):
        for j in range(nc):
            a[i, j] = _mod(a[i, j], p)
    for col in range(nc):
        if row == nr:
            break
        piv = -1
        for i in range(row, nr):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(nc):
                t = a[row, j]
                a[row, j] = a[piv, j]
                a[piv, j] = t
        if a[row, col] != 1:
            inv = _inv(a[row, col], p)
            for j in range(col, nc):
                a[row, j] = (a[row, j] * inv) % p
        for i in range(nr):
            if i != row and a[i, col] != 0:
                f = a[i, col]
                for j in range(col, nc):
                    if a[row, j] != 0:
                        a[i, j] = _mod(a[i, j] - f * a[row, j], p)
        row += 1
    return row


def rref(a, p):
    cdef cnp.ndarray arr = np.array(a, dtype=np.int64, copy=True, ndmin=2, order="C")
    cdef int64_t[:, ::1] m = arr
    cdef Py_ssize_t r = _rref_inplace(m, p)
    return arr[:r].copy()


def nullspace(a, p, ncols=None):
    a = np.asarray(a, dtype=np.int64)
    if a.ndim == 2 and a.shape[0] > 0:
        ncols = a.shape[1]
    elif ncols is None:
        ncols = a.shape[-1]
    if a.size == 0:
        return np.eye(ncols, dtype=np.int64)
    cdef cnp.ndarray r = rref(a, p)
    cdef int64_t[:, ::1] rv = r
    cdef Py_ssize_t rank = r.shape[0], nc = ncols, i, j, k, c
    cdef cnp.ndarray is_piv = np.zeros(nc, dtype=np.uint8)
    cdef cnp.ndarray pivots = np.zeros(rank, dtype=np.int64)
    cdef int64_t[::1] pv = pivots
    cdef uint8_t[::1] ip = is_piv
    for i in range(rank):
        for j in range(nc):
            if rv[i, j] != 0:
                pv[i] = j
                ip[j] = 1
                break
    cdef Py_ssize_t nfree = nc - rank
    cdef cnp.ndarray out = np.zeros((nfree, nc), dtype=np.int64)
    cdef int64_t[:, ::1] ov = out
    k = 0
    for c in range(nc):
        if ip[c]:
            continue
        ov[k, c] = 1
        for i in range(rank):
            ov[k, pv[i]] = _mod(-rv[i, c], p)
        k += 1
    if nfree:
        return rref(out, p)
    return out


def containment_matrix(rows, offsets, pivots, p):
    cdef cnp.ndarray R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef cnp.ndarray O = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef cnp.ndarray P = np.ascontiguousarray(pivots, dtype=np.int64)
    cdef Py_ssize_t n = O.shape[0] - 1
    cdef cnp.ndarray out = np.zeros((n, n), dtype=np.uint8)
    if R.shape[0] == 0:
        return np.ones((n, n), dtype=bool)
    cdef int64_t[:, ::1] rv = R
    cdef int64_t[::1] ov = O
    cdef int64_t[::1] pvv = P
    cdef uint8_t[:, ::1] res = out
    cdef Py_ssize_t nc = R.shape[1]
    cdef int64_t pp = p
    cdef Py_ssize_t i, j, a, b, c, dj
    cdef int64_t coef
    cdef bint ok
    cdef cnp.ndarray buf = np.zeros(nc, dtype=np.int64)
    cdef int64_t[::1] v = buf
    with nogil:
        for j in range(n):
            dj = ov[j + 1] - ov[j]
            for i in range(n):
                if ov[i + 1] - ov[i] > dj:
                    continue
                ok = True
                for a in range(ov[i], ov[i + 1]):
                    for c in range(nc):
                        v[c] = rv[a, c]
                    for b in range(ov[j], ov[j + 1]):
                        coef = v[pvv[b]]
                        if coef != 0:
                            for c in range(nc):
                                if rv[b, c] != 0:
                                    v[c] = _mod(v[c] - coef * rv[b, c], pp)
                    for c in range(nc):
                        if v[c] != 0:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    res[i, j] = 1
    return out.astype(bool)


def subgroup_closure(mask, gens, coords, moduli, weights):
    cdef cnp.ndarray out = np.array(mask, dtype=np.uint8, copy=True, order="C")
    cdef uint8_t[::1] m = out
    cdef int64_t[:, ::1] cv = np.ascontiguousarray(coords, dtype=np.int64)
    cdef int64_t[::1] mv = np.ascontiguousarray(moduli, dtype=np.int64)
    cdef int64_t[::1] wv = np.ascontiguousarray(weights, dtype=np.int64)
    cdef int64_t[::1] gv = np.ascontiguousarray(np.atleast_1d(gens), dtype=np.int64)
    cdef Py_ssize_t n = m.shape[0], k = mv.shape[0]
    cdef cnp.ndarray base_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] base = base_arr
    cdef cnp.ndarray x_arr = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] x = x_arr
    cdef Py_ssize_t gi, nb, t, c, h
    cdef int64_t g, idx, xi
    with nogil:
        for gi in range(gv.shape[0]):
            g = gv[gi]
            if m[g]:
                continue
            nb = 0
            for t in range(n):
                if m[t]:
                    base[nb] = t
                    nb += 1
            for c in range(k):
                x[c] = cv[g, c]
            while True:
                xi = 0
                for c in range(k):
                    xi += x[c] * wv[c]
                if m[xi]:
                    break
                for t in range(nb):
                    h = base[t]
                    idx = 0
                    for c in range(k):
                        idx += ((cv[h, c] + x[c]) % mv[c]) * wv[c]
                    m[idx] = 1
                for c in range(k):
                    x[c] = (x[c] + cv[g, c]) % mv[c]
    return out

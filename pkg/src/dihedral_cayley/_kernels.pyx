# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Mirrors ``_pykernels`` exactly, including search order."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline long long _prod_index(long long k, const long long* orders,
                                  const long long* weights, long long n,
                                  const long long* xd, int xs,
                                  const long long* yd, int ys) noexcept nogil:
    cdef long long idx = 0, j, v
    for j in range(k):
        v = (xd[j] + xs * yd[j]) % orders[j]
        if v < 0:
            v += orders[j]
        idx += v * weights[j]
    if xs * ys < 0:
        idx += n
    return idx


cdef void _weights(long long k, const long long* orders, long long* weights) noexcept nogil:
    cdef long long acc = 1, j
    for j in range(k - 1, -1, -1):
        weights[j] = acc
        acc *= orders[j]


def product_cover(cnp.int64_t[::1] orders, long long n,
                  cnp.int64_t[:, ::1] s_digits, cnp.int8_t[::1] s_sign):
    """Mark identity, S and every product s*t; returns uint8[2n]."""
    cdef long long k = orders.shape[0], m = s_sign.shape[0], i, j, idx
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(2 * n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] cov = out
    cdef long long* w = <long long*> malloc((k + 1) * sizeof(long long))
    cdef long long* zero = <long long*> malloc((k + 1) * sizeof(long long))
    cdef const long long* od = <const long long*> &orders[0] if k else NULL
    cdef const long long* sd = <const long long*> &s_digits[0, 0] if (k and m) else NULL
    try:
        for j in range(k):
            zero[j] = 0
        _weights(k, od, w)
        with nogil:
            cov[0] = 1
            for i in range(m):
                idx = _prod_index(k, od, w, n, zero, 1, sd + i * k, s_sign[i])
                cov[idx] = 1
                for j in range(m):
                    idx = _prod_index(k, od, w, n, sd + i * k, s_sign[i],
                                      sd + j * k, s_sign[j])
                    cov[idx] = 1
    finally:
        free(w)
        free(zero)
    return out


def bfs_distances(cnp.int64_t[::1] orders, long long n,
                  cnp.int64_t[:, ::1] s_digits, cnp.int8_t[::1] s_sign):
    """Distances from the identity under right multiplication; -1 if unreached."""
    cdef long long k = orders.shape[0], m = s_sign.shape[0], order = 2 * n
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out = np.full(order, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = out
    cdef long long* w = <long long*> malloc((k + 1) * sizeof(long long))
    cdef long long* xd = <long long*> malloc((k + 1) * sizeof(long long))
    cdef long long* queue = <long long*> malloc(order * sizeof(long long))
    cdef const long long* od = <const long long*> &orders[0] if k else NULL
    cdef const long long* sd = <const long long*> &s_digits[0, 0] if (k and m) else NULL
    cdef long long head = 0, tail = 0, x, rem, j, i, y
    cdef int xs
    try:
        _weights(k, od, w)
        with nogil:
            dist[0] = 0
            queue[tail] = 0
            tail += 1
            while head < tail:
                x = queue[head]
                head += 1
                xs = 1
                rem = x
                if rem >= n:
                    xs = -1
                    rem -= n
                for j in range(k):
                    xd[j] = rem // w[j]
                    rem = rem % w[j]
                for i in range(m):
                    y = _prod_index(k, od, w, n, xd, xs, sd + i * k, s_sign[i])
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue[tail] = y
                        tail += 1
    finally:
        free(w)
        free(xd)
        free(queue)
    return out


def cyclic_distances(long long n, cnp.int64_t[::1] residues):
    """BFS distances from 0 in Cay(Z_n, residues); -1 if unreached."""
    cdef long long m = residues.shape[0], head = 0, tail = 0, x, y, i
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out = np.full(n, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = out
    cdef long long* queue = <long long*> malloc(n * sizeof(long long))
    try:
        with nogil:
            dist[0] = 0
            queue[tail] = 0
            tail += 1
            while head < tail:
                x = queue[head]
                head += 1
                for i in range(m):
                    y = (x + residues[i]) % n
                    if y < 0:
                        y += n
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue[tail] = y
                        tail += 1
    finally:
        free(queue)
    return out


cdef struct SearchState:
    int order
    int n_atoms
    const int* table
    const int* atom_a
    const int* atom_b
    const int* atom_size
    const int* suffix
    int* cnt
    int* elems
    int* chosen
    int n_elems
    int n_chosen
    int covered
    long long examined


cdef inline void _inc(SearchState* st, int y) noexcept nogil:
    if st.cnt[y] == 0:
        st.covered += 1
    st.cnt[y] += 1


cdef inline void _dec(SearchState* st, int y) noexcept nogil:
    st.cnt[y] -= 1
    if st.cnt[y] == 0:
        st.covered -= 1


cdef void _push(SearchState* st, int x) noexcept nogil:
    cdef int j, e, o = st.order
    _inc(st, x)
    _inc(st, st.table[x * o + x])
    for j in range(st.n_elems):
        e = st.elems[j]
        _inc(st, st.table[x * o + e])
        _inc(st, st.table[e * o + x])
    st.elems[st.n_elems] = x
    st.n_elems += 1


cdef void _pop(SearchState* st) noexcept nogil:
    cdef int j, e, x, o = st.order
    st.n_elems -= 1
    x = st.elems[st.n_elems]
    for j in range(st.n_elems):
        e = st.elems[j]
        _dec(st, st.table[x * o + e])
        _dec(st, st.table[e * o + x])
    _dec(st, st.table[x * o + x])
    _dec(st, x)


cdef bint _dfs(SearchState* st, int start, int remaining) noexcept nogil:
    cdef int a, k
    cdef long long gain
    if remaining == 0:
        st.examined += 1
        return st.covered == st.order
    if start >= st.n_atoms or st.suffix[start] < remaining:
        return False
    # each new element x adds at most x, x*x and x*e, e*x for current e
    k = st.n_elems
    gain = <long long> remaining * (2 * k + remaining + 1)
    if st.covered + gain < st.order:
        return False
    for a in range(start, st.n_atoms):
        if st.atom_size[a] > remaining:
            continue
        if st.suffix[a] < remaining:
            break
        _push(st, st.atom_a[a])
        if st.atom_b[a] >= 0:
            _push(st, st.atom_b[a])
        st.chosen[st.n_chosen] = a
        st.n_chosen += 1
        if _dfs(st, a + 1, remaining - st.atom_size[a]):
            return True
        st.n_chosen -= 1
        if st.atom_b[a] >= 0:
            _pop(st)
        _pop(st)
    return False


def atom_search(cnp.int32_t[:, ::1] table, cnp.int32_t[:, ::1] atoms, int target):
    """First set of atoms (canonical order) of total size ``target`` covering the group.

    ``atoms[i] = (x, x_inverse)`` with ``x_inverse = -1`` for involutions.
    Returns ``(atom indices or None, leaves examined)``.
    """
    cdef int order = table.shape[0], n_atoms = atoms.shape[0], i
    cdef cnp.ndarray[cnp.int32_t, ndim=1] a_arr = np.ascontiguousarray(atoms[:, 0]) if n_atoms else np.zeros(1, np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] b_arr = np.ascontiguousarray(atoms[:, 1]) if n_atoms else np.zeros(1, np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] size = np.where(b_arr >= 0, 2, 1).astype(np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] suffix = np.zeros(n_atoms + 1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cnt = np.zeros(order, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] elems = np.zeros(max(target, 1) + 2, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] chosen = np.zeros(max(target, 1) + 2, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] flat = np.ascontiguousarray(table).reshape(-1)
    cdef SearchState st
    cdef bint found
    for i in range(n_atoms - 1, -1, -1):
        suffix[i] = suffix[i + 1] + size[i]
    st.order = order
    st.n_atoms = n_atoms
    st.table = <const int*> flat.data
    st.atom_a = <const int*> a_arr.data
    st.atom_b = <const int*> b_arr.data
    st.atom_size = <const int*> size.data
    st.suffix = <const int*> suffix.data
    st.cnt = <int*> cnt.data
    st.elems = <int*> elems.data
    st.chosen = <int*> chosen.data
    st.n_elems = 0
    st.n_chosen = 0
    st.covered = 0
    st.examined = 0
    _inc(&st, 0)
    with nogil:
        found = _dfs(&st, 0, target)
    if found:
        return [int(chosen[i]) for i in range(st.n_chosen)], int(st.examined)
    return None, int(st.examined)

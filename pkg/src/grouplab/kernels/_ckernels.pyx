# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def prepare_table(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def closure(const int[:, ::1] table, gens, start=()):
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] mask = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] seen = mask
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    cdef const int[::1] g = np.asarray(list(gens), dtype=np.int32)
    cdef Py_ssize_t ng = g.shape[0]
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef int x, y, s
    seen[0] = 1
    queue[tail] = 0
    tail += 1
    for s in start:
        if not seen[s]:
            seen[s] = 1
            queue[tail] = s
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(ng):
            y = table[x, g[k]]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    return mask


def conjugation_orbits(const int[:, ::1] table, inv, gens):
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out = np.full(n, -1, dtype=np.int32)
    cdef int[::1] label = out
    cdef const int[::1] inv_v = np.asarray(inv, dtype=np.int32)
    cdef const int[::1] g = np.asarray(list(gens), dtype=np.int32)
    cdef Py_ssize_t ng = g.shape[0]
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t head, tail, k
    cdef int start, x, y
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        head = 0
        tail = 1
        queue[0] = start
        while head < tail:
            x = queue[head]
            head += 1
            for k in range(ng):
                y = table[table[inv_v[g[k]], x], g[k]]
                if label[y] < 0:
                    label[y] = start
                    queue[tail] = y
                    tail += 1
    return out


def product_mask(const int[:, ::1] table, a, b):
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] mask = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] seen = mask
    cdef const int[::1] av = np.asarray(a, dtype=np.int32)
    cdef const int[::1] bv = np.asarray(b, dtype=np.int32)
    cdef Py_ssize_t i, j
    for i in range(av.shape[0]):
        for j in range(bv.shape[0]):
            seen[table[av[i], bv[j]]] = 1
    return mask


cdef int _gcd(int a, int b):
    cdef int t
    while b:
        t = a % b
        a = b
        b = t
    return a


def element_orders(const int[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] res = np.zeros(n, dtype=np.int32)
    cdef int[::1] out = res
    cdef int[::1] powers = np.empty(n + 1, dtype=np.int32)
    cdef int x, y, k, e, p
    for x in range(n):
        if out[x]:
            continue
        k = 1
        powers[0] = 0
        y = x
        while y != 0:
            powers[k] = y
            k += 1
            y = table[y, x]
        out[x] = k
        for e in range(1, k):
            p = powers[e]
            if not out[p]:
                out[p] = k // _gcd(e, k)
    out[0] = 1
    return res

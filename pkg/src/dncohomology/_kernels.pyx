# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rank kernels.  Mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def bareiss_rank(rows):
    cdef list A = [list(row) for row in rows]
    cdef Py_ssize_t m = len(A)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(A[0])
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list Ar, Ai
    cdef object prev = 1, a, b
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if (<list>A[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        Ar = <list>A[r]
        a = Ar[c]
        for i in range(r + 1, m):
            Ai = <list>A[i]
            b = Ai[c]
            if b:
                for j in range(c + 1, n):
                    Ai[j] = (a * Ai[j] - b * Ar[j]) // prev
            elif a != prev:
                for j in range(c + 1, n):
                    if Ai[j]:
                        Ai[j] = (a * Ai[j]) // prev
            Ai[c] = 0
        prev = a
        r += 1
    return r


cdef int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, rr = p, newr = a, q, tmp
    while newr:
        q = rr // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, long long p):
    # p < 2**31 so that products fit in int64
    if p >= 2147483648:
        raise ValueError("modulus must be < 2**31")
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(rows[0])
    cdef int64_t *A = <int64_t *> malloc(m * n * sizeof(int64_t))
    if A == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r = 0, piv
    cdef int64_t x, inv, f, tmp
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                A[i * n + j] = <int64_t>(row[j] % p)
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if A[i * n + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(n):
                    tmp = A[r * n + j]
                    A[r * n + j] = A[piv * n + j]
                    A[piv * n + j] = tmp
            inv = _inv_mod(A[r * n + c], p)
            for j in range(c, n):
                A[r * n + j] = A[r * n + j] * inv % p
            for i in range(r + 1, m):
                f = A[i * n + c]
                if f:
                    for j in range(c, n):
                        x = A[r * n + j]
                        if x:
                            A[i * n + j] = (A[i * n + j] - f * x) % p
                            if A[i * n + j] < 0:
                                A[i * n + j] += p
            r += 1
    finally:
        free(A)
    return r

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure search over candidate first cocharacters."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def closure_hits(i64[:, ::1] beta, i64[:, ::1] cands, i64 m):
    cdef Py_ssize_t d = beta.shape[0]
    cdef Py_ssize_t n = cands.shape[1]
    cdef Py_ssize_t N = cands.shape[0]
    cdef i64[::1] lam = np.empty(n, dtype=np.int64)
    cdef i64[::1] target = np.empty(n, dtype=np.int64)
    cdef i64[::1] order = np.empty(n, dtype=np.int64)
    cdef i64[::1] keys = np.empty(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] hit = np.zeros(N, dtype=np.uint8)
    cdef Py_ssize_t c, l, i, j, r
    cdef i64 key, idx, code
    cdef bint ok
    with nogil:
        for c in range(N):
            for i in range(n):
                lam[i] = cands[c, i]
                code = i + n * cands[c, i] + m
                r = code - n * floordiv(code, n)
                target[r] = floordiv(code, n)
            for l in range(d):
                # order: positions by (value, index) descending, via key = index + n*value
                for i in range(n):
                    key = i + n * lam[i]
                    j = i
                    while j > 0 and keys[j - 1] < key:
                        keys[j] = keys[j - 1]
                        order[j] = order[j - 1]
                        j -= 1
                    keys[j] = key
                    order[j] = i
                for i in range(n):
                    lam[order[i]] += beta[l, i]
            ok = True
            for i in range(n):
                if lam[i] != target[i]:
                    ok = False
                    break
            hit[c] = ok
    return np.flatnonzero(np.asarray(hit))

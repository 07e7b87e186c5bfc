# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p elimination kernel.

Gauss-Jordan over F_p on int64 buffers.  Semantics are identical to
modp_fallback.rref_mod (asserted by tests on random matrices).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1
    cdef long long r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(a, long long p):
    """Reduced row echelon form of ``a`` over F_p -> (R, pivots)."""
    R_arr = np.array(a, dtype=np.int64, copy=True) % p
    cdef long long[:, ::1] R = np.ascontiguousarray(R_arr)
    cdef Py_ssize_t m = R.shape[0]
    cdef Py_ssize_t n = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, factor, tmp
    pivots = []
    for c in range(n):
        if r == m:
            break
        i = -1
        for k in range(r, m):
            if R[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(n):
                tmp = R[r, j]
                R[r, j] = R[i, j]
                R[i, j] = tmp
        inv = _inv_mod(R[r, c], p)
        if inv != 1:
            for j in range(c, n):
                R[r, j] = (R[r, j] * inv) % p
        for k in range(m):
            if k == r:
                continue
            factor = R[k, c]
            if factor != 0:
                for j in range(c, n):
                    R[k, j] = (R[k, j] - factor * R[r, j]) % p
                    if R[k, j] < 0:
                        R[k, j] += p
        pivots.append(c)
        r += 1
    return np.asarray(R), pivots

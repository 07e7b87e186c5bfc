"""Pure-Python mod-p elimination kernel (numpy row operations).

Same contract as the compiled kernel in _modp.pyx; used when the
extension is unavailable.  Entries must be int64 in [0, p) with p small
enough that p*p*rows fits in int64 (enforced by fields.MAX_PRIME).
"""

from __future__ import annotations

import numpy as np


def rref_mod(a: np.ndarray, p: int):
    """Reduced row echelon form of ``a`` over F_p.

    Returns (R, pivots): R a fresh int64 array, pivots the list of pivot
    column indices (len(pivots) is the rank).
    """
    R = np.array(a, dtype=np.int64, copy=True) % p
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        rows = np.nonzero(R[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            R[rows] = (R[rows] - np.outer(R[rows, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots

"""Dense linear algebra over the prime field F_p on small numpy matrices.

All matrices are int64 arrays with entries already reduced mod p.  Shapes
stay desk-scale (tens of columns), so plain Gaussian elimination is fine.
"""

from __future__ import annotations

import numpy as np


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form over F_p.

    Returns the nonzero rows (a canonical basis of the row space: the RREF
    of a row space is unique) together with the pivot columns.
    """
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        pivot = r + int(hits[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


def rank(mat: np.ndarray, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (RREF rows) of the right kernel {v : mat @ v = 0}."""
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in zip(red, pivots):
            basis[i, pc] = (-row[f]) % p
    out, _ = rref(basis, p)
    return out


def intersect_rowspaces(b1: np.ndarray, b2: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of rowspace(b1) intersected with rowspace(b2)."""
    r1 = b1.shape[0]
    if r1 == 0 or b2.shape[0] == 0:
        return np.zeros((0, b1.shape[1]), dtype=np.int64)
    stacked = np.vstack([b1, b2]) % p
    # Kernel rows (x | y) satisfy x @ b1 + y @ b2 = 0, so x @ b1 runs over
    # the intersection as (x | y) runs over the kernel.
    kernel = nullspace(stacked.T, p)
    if kernel.shape[0] == 0:
        return np.zeros((0, b1.shape[1]), dtype=np.int64)
    vectors = (kernel[:, :r1] @ b1) % p
    out, _ = rref(vectors, p)
    return out


def in_rowspan(basis_rref: np.ndarray, vec: np.ndarray, p: int) -> bool:
    """Membership of a single vector in a row space given by RREF rows."""
    v = np.array(vec, dtype=np.int64) % p
    for row in basis_rref:
        lead = int(np.argmax(row != 0)) if row.any() else -1
        if lead >= 0 and v[lead]:
            v = (v - v[lead] * row) % p
    return not v.any()

"""Exact linear algebra over GF(p) on small dense matrices.

Matrices are lists of rows (lists of ints in [0, p)).  Everything here is
plain Gaussian elimination; sizes in this package stay in the hundreds.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

Vector = tuple[int, ...]


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        row = [x * inv % p for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                m[i] = [(a - f * b) % p for a, b in zip(mi, row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[Vector]:
    """Basis of {x : M x = 0} where M has the given rows and ncols columns."""
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(red, pivots):
            x[pc] = (-row[fc]) % p
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], ncols: int, p: int):
    """One solution of M x = rhs, or None when the system is inconsistent."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, p) if aug else ([], [])
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def matvec(mat: Sequence[Sequence[int]], v: Sequence[int], p: int) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in mat)


def batch_nonsingular(mats: np.ndarray, p: int) -> np.ndarray:
    """For a stack of square matrices (B, n, n), which are invertible mod p."""
    m = np.array(mats, dtype=np.int64) % p
    bsz, n, _ = m.shape
    ok = np.ones(bsz, dtype=bool)
    inv_table = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    idx = np.arange(bsz)
    for c in range(n):
        col = m[:, c:, c]
        nz = col != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + np.argmax(nz, axis=1)
        rows_c = m[idx, c, :].copy()
        m[idx, c, :] = m[idx, piv, :]
        m[idx, piv, :] = rows_c
        inv = inv_table[m[idx, c, c]]
        m[:, c, :] = (m[:, c, :] * inv[:, None]) % p
        factors = m[:, :, c].copy()
        factors[:, c] = 0
        m = (m - factors[:, :, None] * m[:, c, :][:, None, :]) % p
    return ok

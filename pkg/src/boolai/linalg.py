"""Gaussian elimination over F_2 and over GF(2^n).

F_2 matrices are lists of Python ints, one per row, with bit ``j`` holding
column ``j``.  GF(2^n) matrices are 2-D numpy integer arrays of element
indices; row operations go through the field's log/antilog tables.
"""

from __future__ import annotations

import numpy as np

from .gf2n import FieldSpec

# ---------- F_2, bit-sliced rows


def gf2_rref(rows, ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [r for r in rows if r]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        sel = next((k for k in range(rank, len(rows)) if rows[k] & bit), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        p = rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & bit:
                rows[k] ^= p
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def gf2_rank(rows) -> int:
    ncols = max((r.bit_length() for r in rows), default=0)
    return len(gf2_rref(list(rows), ncols)[1])


def gf2_nullspace(rows, ncols: int) -> list[int]:
    """Kernel basis: one vector per free column (in column order), that column set to 1."""
    red, pivots = gf2_rref(list(rows), ncols)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = 1 << free
        for r, p in zip(red, pivots):
            if r >> free & 1:
                v |= 1 << p
        out.append(v)
    return out


def gf2_inverse(rows, n: int) -> list[int]:
    """Inverse of an invertible n x n matrix; raises ValueError if singular."""
    aug = [(r & ((1 << n) - 1)) | (1 << (n + i)) for i, r in enumerate(rows)]
    red, pivots = gf2_rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular over F_2")
    return [r >> n for r in red]


def lex_smallest_nonzero(space: list[int], ncols: int) -> int:
    """Lexicographically smallest nonzero vector of a subspace.

    Vectors are compared as coefficient sequences in column order, column 0
    most significant.  That vector is the last row of the standard reduced
    echelon form of any spanning set: every combination involving an earlier
    row has an earlier leading 1.
    """
    red, _ = gf2_rref(list(space), ncols)
    if not red:
        raise ValueError("zero subspace has no nonzero vector")
    return red[-1]


# ---------- GF(2^n), numpy rows


def ext_rref(matrix, spec: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2^n) with pivots scaled to 1."""
    m = np.array(matrix, dtype=np.int64, copy=True)
    if m.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    nrows, ncols = m.shape
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        column = m[rank:, col]
        ones = np.flatnonzero(column == 1)
        nz = ones if ones.size else np.flatnonzero(column)
        if nz.size == 0:
            continue
        sel = rank + int(nz[0])
        if sel != rank:
            m[[rank, sel]] = m[[sel, rank]]
        piv = int(m[rank, col])
        if piv != 1:
            m[rank] = spec.mul_array(m[rank], spec.inv_int(piv))
        factors = m[:, col].copy()
        factors[rank] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            m[hit] ^= spec.mul_array(factors[hit, None], m[rank][None, :])
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def ext_nullspace(matrix, spec: FieldSpec, ncols: int | None = None) -> np.ndarray:
    """Kernel basis over GF(2^n), one row per free column with that entry 1."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim == 2:
        ncols = matrix.shape[1]
    if ncols is None:
        raise ValueError("ncols required for an empty matrix")
    if matrix.size == 0:
        return np.eye(ncols, dtype=np.int64)
    red, pivots = ext_rref(matrix, spec)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
        # x_p + red[r, c] = 0 for the pivot p of row r (characteristic 2)
        out[k, pivots] = red[:, c]
    return out


def ext_rank(matrix, spec: FieldSpec) -> int:
    return len(ext_rref(matrix, spec)[1])

"""Arithmetic over the finite fields GF(2), GF(3), and GF(4).

Field elements are plain integers 0..q-1.  For GF(4) the symbols 0,1,2,3
stand for 0, 1, w, w^2 where w^2 = w + 1; addition is then XOR of the 2-bit
symbol encodings and multiplication is a fixed 4x4 table.  This keeps matrix
text I/O to single digits for every supported field.

Only q in {2, 3, 4} is supported.  All tables are precomputed numpy arrays,
so the scalar operations below also accept numpy arrays and broadcast.
"""

from __future__ import annotations

import numpy as np

SUPPORTED_FIELDS = (2, 3, 4)

_ADD: dict[int, np.ndarray] = {}
_MUL: dict[int, np.ndarray] = {}
_INV: dict[int, np.ndarray] = {}
_NEG: dict[int, np.ndarray] = {}


def _build_tables() -> None:
    for q in (2, 3):
        a = np.arange(q)
        _ADD[q] = (a[:, None] + a[None, :]) % q
        _MUL[q] = (a[:, None] * a[None, :]) % q
    # GF(4): addition is bitwise XOR of the symbol encodings
    a = np.arange(4)
    _ADD[4] = a[:, None] ^ a[None, :]
    _MUL[4] = np.array(
        [[0, 0, 0, 0],
         [0, 1, 2, 3],
         [0, 2, 3, 1],   # w*w = w^2, w*w^2 = 1
         [0, 3, 1, 2]],
        dtype=np.int64,
    )
    for q in SUPPORTED_FIELDS:
        inv = np.zeros(q, dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            inv[x] = next(y for y in range(1, q) if _MUL[q][x, y] == 1)
            neg[x] = next(y for y in range(q) if _ADD[q][x, y] == 0)
        _INV[q] = inv
        _NEG[q] = neg


_build_tables()


def _check_field(q: int) -> None:
    if q not in SUPPORTED_FIELDS:
        raise ValueError(f"unsupported field size q={q}; supported: {SUPPORTED_FIELDS}")


def _check_symbol(x, q: int) -> None:
    arr = np.asarray(x)
    if arr.size and (np.any(arr < 0) or np.any(arr >= q)):
        raise ValueError(f"invalid symbol for GF({q}): {x}")


def gf_add(a, b, q: int):
    """Field sum of symbols a and b (scalars or arrays)."""
    _check_field(q)
    _check_symbol(a, q)
    _check_symbol(b, q)
    out = _ADD[q][a, b]
    return int(out) if np.isscalar(a) and np.isscalar(b) else out


def gf_mul(a, b, q: int):
    """Field product of symbols a and b (scalars or arrays)."""
    _check_field(q)
    _check_symbol(a, q)
    _check_symbol(b, q)
    out = _MUL[q][a, b]
    return int(out) if np.isscalar(a) and np.isscalar(b) else out


def gf_inv(a: int, q: int) -> int:
    """Multiplicative inverse of a nonzero symbol."""
    _check_field(q)
    _check_symbol(a, q)
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return int(_INV[q][a])


def gf_neg(a, q: int):
    """Additive inverse (identity for q=2,4; 3-a mod 3 for q=3)."""
    _check_field(q)
    _check_symbol(a, q)
    out = _NEG[q][a]
    return int(out) if np.isscalar(a) else out


def add_tables(q: int) -> np.ndarray:
    """Read-only q x q addition table."""
    _check_field(q)
    return _ADD[q]


def mul_tables(q: int) -> np.ndarray:
    """Read-only q x q multiplication table."""
    _check_field(q)
    return _MUL[q]


# ---------------------------------------------------------------------------
# Small-matrix linear algebra over GF(q).  Matrices are 2-d numpy arrays of
# symbols; all sizes here are desk scale (k <= 24, n <= a few hundred), so a
# straightforward elimination is plenty.
# ---------------------------------------------------------------------------

def row_reduce(matrix: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(q).

    Returns (rref, pivot_columns).  Zero rows are dropped, so the number of
    returned rows equals the rank.
    """
    _check_field(q)
    mat = np.array(matrix, dtype=np.int64, copy=True)
    if mat.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = mat.shape
    add, mul = _ADD[q], _MUL[q]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for i in range(r, rows):
            if mat[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        if mat[r, c] != 1:
            mat[r] = mul[gf_inv(int(mat[r, c]), q), mat[r]]
        for i in range(rows):
            if i != r and mat[i, c]:
                factor = _NEG[q][int(mat[i, c])]
                mat[i] = add[mat[i], mul[factor, mat[r]]]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank(matrix: np.ndarray, q: int) -> int:
    """Rank of a matrix over GF(q)."""
    return row_reduce(matrix, q)[0].shape[0]


def nullspace(matrix: np.ndarray, q: int) -> np.ndarray:
    """Basis of the right null space over GF(q), one vector per row.

    Returns an array of shape (n - rank, n); empty (0, n) if the kernel is
    trivial.
    """
    _check_field(q)
    mat = np.asarray(matrix)
    n = mat.shape[1]
    rref, pivots = row_reduce(mat, q)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for row, p in zip(rref, pivots):
            if row[f]:
                basis[bi, p] = _NEG[q][int(row[f])]
    return basis

"""Dense exact linear algebra over a Field, on plain row lists.

Matrices here are lists (or tuples) of equal-length rows of int-encoded
elements; there are no labels at this layer.  Pivoting is always on the
first nonzero entry scanning rows top-down within a column, so every result
(rank, RREF, particular solutions, nullspace bases) is deterministic.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import SingularMatrix
from .field import Field

Rows = Sequence[Sequence[int]]


def rref(field: Field, rows: Rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form. Returns (rows without zero rows, pivot columns)."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        if inv != 1:
            work[r] = [field.mul(inv, v) for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [row for row in work[:r]], pivots


def rank(field: Field, rows: Rows) -> int:
    return len(rref(field, rows)[1])


def det(field: Field, rows: Rows) -> int:
    """Determinant of a square matrix; the empty matrix has determinant 1."""
    n = len(rows)
    if n == 0:
        return 1
    assert all(len(r) == n for r in rows), "determinant needs a square matrix"
    work = [list(r) for r in rows]
    result = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pr is None:
            return 0
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            result = field.neg(result)
        piv = work[c][c]
        result = field.mul(result, piv)
        inv = field.inv(piv)
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = field.mul(work[i][c], inv)
                work[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(work[i], work[c])]
    return result


def inverse(field: Field, rows: Rows) -> list[list[int]]:
    n = len(rows)
    work = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(field, work)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in red]


def matmul(field: Field, a: Rows, b: Rows) -> list[list[int]]:
    if not a or not b:
        return [[] for _ in a]
    n, m, l = len(a), len(b), len(b[0])
    assert all(len(r) == m for r in a)
    out = [[0] * l for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for kk in range(m):
            v = ai[kk]
            if v:
                bk = b[kk]
                for j in range(l):
                    if bk[j]:
                        oi[j] = field.add(oi[j], field.mul(v, bk[j]))
    return out


def solve(field: Field, a: Rows, b: Sequence[int]) -> Optional[list[int]]:
    """One solution of A x = b with free variables set to 0, or None."""
    if not a:
        return [] if not any(b) else None
    aug = [list(r) + [bv] for r, bv in zip(a, b)]
    red, pivots = rref(field, aug)
    ncols = len(a[0])
    x = [0] * ncols
    for row, c in zip(red, pivots):
        if c == ncols:
            return None  # a pivot in the constant column: inconsistent
        x[c] = row[-1]
    # rows below the pivot rows are zero by construction of rref
    return x


def nullspace(field: Field, a: Rows, ncols: Optional[int] = None) -> list[list[int]]:
    """Basis of the right kernel, in RREF of its own span (deterministic).

    ncols must be given when a has no rows (kernel of an empty constraint
    system is the full space).
    """
    if not a:
        assert ncols is not None, "ncols required for an empty constraint system"
        return identity(ncols)
    ncols = len(a[0])
    red, pivots = rref(field, a)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for row, pc in zip(red, pivots):
            if row[fc] != 0:
                vec[pc] = field.neg(row[fc])
        basis.append(vec)
    return rref(field, basis)[0] if basis else []


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

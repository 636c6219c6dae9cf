"""Exact integer matrix routines: Hermite form, integer kernels, Smith form.

Matrices are plain ``list[list[int]]`` in row-major order. Python ints are
arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

from math import gcd
from typing import List, Sequence, Tuple

IntegerMatrix = List[List[int]]


def as_matrix(m: Sequence[Sequence[int]]) -> IntegerMatrix:
    rows = [[int(x) for x in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> IntegerMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntegerMatrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntegerMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = as_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _echelon(rows: IntegerMatrix, width: int) -> Tuple[IntegerMatrix, List[int]]:
    """Unimodular row reduction on the first ``width`` columns.

    Columns past ``width`` are carried along (used for the transformation
    matrix). Returns the reduced rows and the pivot column of each leading row;
    pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    p = 0
    for col in range(width):
        if p == len(rows):
            break
        while True:
            nonzero = [i for i in range(p, len(rows)) if rows[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[p], rows[best] = rows[best], rows[p]
            piv = rows[p][col]
            clean = True
            for i in range(p + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // piv
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[p])]
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if rows[p][col] == 0:
            continue
        if rows[p][col] < 0:
            rows[p] = [-a for a in rows[p]]
        piv = rows[p][col]
        for i in range(p):
            q = rows[i][col] // piv
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[p])]
        pivots.append(col)
        p += 1
    return rows, pivots


def hermite_normal_form(m: Sequence[Sequence[int]]) -> IntegerMatrix:
    """Row-style Hermite normal form; zero rows are dropped."""
    rows = as_matrix(m)
    if not rows:
        return []
    reduced, pivots = _echelon(rows, len(rows[0]))
    return reduced[: len(pivots)]


def hermite_kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntegerMatrix:
    """Basis of the integer kernel ``{x in Z^n : m x = 0}``.

    The result is an ``n x k`` matrix whose columns are the basis vectors. The
    basis comes from a unimodular transformation, so it spans a saturated
    lattice; it is then put in Hermite form so the output is canonical.
    ``ncols`` is only needed when ``m`` has no rows.
    """
    rows = as_matrix(m)
    n = len(rows[0]) if rows else ncols
    if n is None:
        raise ValueError("ncols is required for a matrix with no rows")
    if not rows:
        return identity(n)
    # column operations on m are row operations on m^T; carry the identity along
    aug = [col + ident for col, ident in zip(transpose(rows), identity(n))]
    reduced, pivots = _echelon(aug, len(rows))
    kernel_rows = [r[len(rows):] for r in reduced[len(pivots):]]
    basis = hermite_normal_form(kernel_rows) if kernel_rows else []
    return transpose(basis, ncols=n)


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Invariant factors ``d1 | d2 | ...`` of an integer matrix.

    One factor per diagonal position (``min(rows, cols)`` of them), zeros
    last for rank-deficient input.
    """
    a = as_matrix(m)
    if not a or not a[0]:
        return ()
    nr, nc = len(a), len(a[0])
    for t in range(min(nr, nc)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not entries:
                break
            _, i0, j0 = min(entries)
            a[t], a[i0] = a[i0], a[t]
            for row in a:
                row[t], row[j0] = row[j0], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                dirty = dirty or a[t][j] != 0
            if not dirty:
                break
    diag = [abs(a[i][i]) for i in range(min(nr, nc))]
    # diag(a, b) ~ diag(gcd, lcm): repair the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            x, y = diag[i], diag[j]
            if x == 0 and y == 0:
                continue
            gg = gcd(x, y)
            diag[i], diag[j] = gg, (x * y // gg if gg else 0)
    nonzero = [d for d in diag if d]
    return tuple(nonzero + [0] * (len(diag) - len(nonzero)))


def discriminant_group(gram: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Orders of the cyclic factors of ``L^* / L`` for a nondegenerate Gram matrix."""
    factors = smith_normal_form(gram)
    if 0 in factors:
        raise ValueError("degenerate Gram matrix has no finite discriminant group")
    return tuple(d for d in factors if d != 1)

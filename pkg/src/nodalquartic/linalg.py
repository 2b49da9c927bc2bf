"""Exact dense linear algebra over Q.

Matrices are plain lists of rows whose entries are ``int`` or
``fractions.Fraction``.  Rank and determinant go through fraction-free
(Bareiss) elimination on integer-scaled rows; everything that needs an
explicit basis (kernels, column spaces, coordinates) uses reduced row
echelon form over ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list  # list[list[int | Fraction]]

_ZERO = Fraction(0)


def to_fraction_matrix(M: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in M]


def shape(M: Sequence[Sequence], ncols: int | None = None) -> tuple[int, int]:
    if len(M) == 0:
        return 0, (ncols or 0)
    return len(M), len(M[0])


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    m, n = shape(M, ncols)
    return [[M[i][j] for i in range(m)] for j in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if len(A) == 0:
        return []
    inner = len(A[0])
    if inner != len(B):
        raise ValueError(f"cannot multiply {len(A)}x{inner} by {len(B)}x?")
    if inner == 0:
        return [[] for _ in A]
    n = len(B[0])
    Bt = [[B[k][j] for k in range(inner)] for j in range(n)]
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        if not nz:
            out.append([_ZERO] * n)
            continue
        out.append([_ZERO + sum(a * col[k] for k, a in nz if col[k]) for col in Bt])
    return out


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum((a * x for a, x in zip(row, v) if a), Fraction(0)) for row in A]


def is_zero(M: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in M for x in row)


def integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; row rank is unchanged."""
    out = []
    for row in M:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * scale) for x in fr])
    return out


def _bareiss(A: list[list[int]]) -> tuple[int, int]:
    """In-place fraction-free elimination; returns (rank, sign * last pivot).

    The second value is the determinant when ``A`` is square and nonsingular.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, n):
                # exact: Bareiss guarantees divisibility by the previous pivot
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def rank(M: Sequence[Sequence]) -> int:
    if len(M) == 0 or len(M[0]) == 0:
        return 0
    return _bareiss(integer_rows(M))[0]


def det(M: Sequence[Sequence]) -> Fraction:
    n = len(M)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    scales = []
    A = []
    for row in M:
        fr = [Fraction(x) for x in row]
        s = lcm(*(x.denominator for x in fr))
        scales.append(s)
        A.append([int(x * s) for x in fr])
    r, d = _bareiss(A)
    if r < n:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot column indices."""
    R = to_fraction_matrix(M)
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}; ``ncols`` is needed when M has no rows."""
    m, n = shape(M, ncols)
    if m == 0:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, pivots = rref(M)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def column_basis(M: Sequence[Sequence], nrows: int | None = None) -> Matrix:
    """Independent columns of M spanning its column space, as an n x k matrix."""
    m, n = shape(M)
    if m == 0:
        return [[] for _ in range(nrows or 0)]
    _, pivots = rref(M)
    return [[Fraction(M[i][j]) for j in pivots] for i in range(m)]


def vectors_to_columns(vectors: Sequence[Sequence], nrows: int) -> Matrix:
    if not vectors:
        return [[] for _ in range(nrows)]
    return [[Fraction(v[i]) for v in vectors] for i in range(nrows)]


def left_inverse(B: Sequence[Sequence]) -> tuple[list[int], Matrix]:
    """For B (n x k) of full column rank, rows I and (B[I])^-1 with B[I] square.

    Coordinates of y in the column space of B are then (B[I])^-1 y[I].
    """
    k = len(B[0]) if B else 0
    if k == 0:
        return [], []
    _, rows = rref(transpose(B))
    if len(rows) != k:
        raise ValueError("basis matrix does not have full column rank")
    sub = [[Fraction(B[i][j]) for j in range(k)] for i in rows]
    aug = [row + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(sub)]
    R, _ = rref(aug)
    return rows, [row[k:] for row in R]


def coordinates(B: Sequence[Sequence], Y: Sequence[Sequence], inverse=None) -> Matrix:
    """Solve B X = Y exactly for X; B must have full column rank.

    Raises ValueError when some column of Y is outside the column space of B.
    """
    n = len(B)
    k = len(B[0]) if n else 0
    ycols = len(Y[0]) if Y else 0
    if k == 0:
        if not is_zero(Y):
            raise ValueError("vector outside the (zero) column space")
        return []
    rows, inv = inverse if inverse is not None else left_inverse(B)
    X = matmul(inv, [Y[i] for i in rows]) if ycols else [[] for _ in range(k)]
    if ycols and matmul(B, X) != to_fraction_matrix(Y):
        raise ValueError("vector outside the column space")
    return X


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]

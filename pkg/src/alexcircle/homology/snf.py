"""Smith normal form over the integers with unimodular transforms.

Matrices are plain lists of rows of Python ints, so there is no overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


@dataclass(frozen=True)
class SNFResult:
    U: Matrix
    S: Matrix
    V: Matrix

    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]

    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries, in divisibility order."""
        return [d for d in self.diagonal() if d]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors())


def smith_normal_form(A: Matrix, cols: int | None = None, transforms: bool = True) -> SNFResult:
    """Return U, S, V with ``U @ A @ V == S``.

    S is diagonal with non-negative entries ``d_1 | d_2 | ...`` followed by
    zeros. ``cols`` is needed only for matrices with no rows. With
    ``transforms=False`` U and V are left empty, which is faster for
    homology where only S matters.
    """
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    S = [list(map(int, row)) for row in A]
    U = identity(m) if transforms else []
    V = identity(n) if transforms else []

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        if transforms:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        S[dst] = [x + q * y for x, y in zip(S[dst], S[src])]
        if transforms:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in S:
            row[dst] += q * row[src]
        if transforms:
            for row in V:
                row[dst] += q * row[src]

    def negate_row(i):
        S[i] = [-x for x in S[i]]
        if transforms:
            U[i] = [-x for x in U[i]]

    for k in range(min(m, n)):
        while True:
            # pivot: smallest nonzero absolute value in the trailing block
            best = None
            for i in range(k, m):
                row = S[i]
                for j in range(k, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                return SNFResult(U, S, V)
            _, pi, pj = best
            if pi != k:
                swap_rows(pi, k)
            if pj != k:
                swap_cols(pj, k)
            p = S[k][k]
            done = True
            for i in range(k + 1, m):
                if S[i][k]:
                    add_row(k, i, -(S[i][k] // p))
                    if S[i][k]:
                        done = False
            for j in range(k + 1, n):
                if S[k][j]:
                    add_col(k, j, -(S[k][j] // p))
                    if S[k][j]:
                        done = False
            if not done:
                continue
            # row and column cleared; enforce divisibility on the rest
            bad = next(
                (i for i in range(k + 1, m) if any(S[i][j] % p for j in range(k + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(bad, k, 1)
        if S[k][k] < 0:
            negate_row(k)
    return SNFResult(U, S, V)


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]

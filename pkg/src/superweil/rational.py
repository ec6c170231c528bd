"""Small exact linear algebra over Fraction, used for body checks and ranks.

Rows are lists of Fractions.  Everything here is plain fraction-free-of-float
Gaussian elimination; sizes stay tiny (at most 17 columns), so no pivoting
strategy beyond "first nonzero" is needed.
"""

from fractions import Fraction


def rat_det(rows) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square table")
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def rat_rank(rows) -> int:
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    n_cols = len(a[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        for r in range(row + 1, len(a)):
            if a[r][col]:
                f = a[r][col] * inv
                for c in range(col, n_cols):
                    a[r][c] -= f * a[row][c]
        rank += 1
        row += 1
        if row == len(a):
            break
    return rank


def rat_inv(rows):
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular rational matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [r[n:] for r in a]


def rat_matmul(a, b):
    if not a or not b:
        return [[] for _ in a]
    return [
        [sum((x * b[k][j] for k, x in enumerate(row)), Fraction(0))
         for j in range(len(b[0]))]
        for row in a
    ]


def rat_transpose(a):
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]

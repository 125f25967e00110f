"""Exact rational linear algebra on small matrices.

Everything is tuples of ``fractions.Fraction`` (or plain ints where the
result is known to be integral).  Ranks never exceed 8 here, so naive
Gauss-Jordan is entirely adequate and keeps the arithmetic exact.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def frac_vec(xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def dot(x, y) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(rows, x):
    return tuple(dot(row, x) for row in rows)


def mat_mul(a, b) -> Mat:
    n, m = len(a), len(b[0])
    k = len(b)
    return tuple(
        tuple(sum((Fraction(a[i][t]) * b[t][j] for t in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def mat_inverse(rows) -> Mat:
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve(rows, b) -> Vec:
    """Solve rows @ x = b exactly."""
    return mat_vec(mat_inverse(rows), b)

"""Small exact linear algebra over the rationals.

Matrices are tuples of tuples of Fraction; vectors are tuples of Fraction.
Everything here is immutable and deterministic (fixed pivot order), which the
report layer relies on for byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def vec(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def mat(rows) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int, m: int) -> Matrix:
    zero = Fraction(0)
    return tuple((zero,) * m for _ in range(n))


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols))
        for i in range(len(a))
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _echelon(rows: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def invert(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + list(identity(n)[i]) for i in range(n)]
    rows, pivots = _echelon(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def solve(m: Matrix, rhs: Vector) -> Vector:
    """One exact solution of m @ x = rhs (free variables set to zero)."""
    height, width = len(m), len(m[0])
    aug = [list(m[i]) + [rhs[i]] for i in range(height)]
    rows, pivots = _echelon(aug, width)
    for i in range(len(pivots), height):
        if rows[i][width] != 0:
            raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * width
    for i, c in enumerate(pivots):
        x[c] = rows[i][width]
    return tuple(x)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Deterministic basis of the null space of m."""
    height, width = len(m), len(m[0])
    rows = [list(r) for r in m]
    rows, pivots = _echelon(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * width
        v[c] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][c]
        basis.append(tuple(v))
    return basis


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, s: Fraction) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def block_diag(blocks: list[Matrix]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(row) for row in out)

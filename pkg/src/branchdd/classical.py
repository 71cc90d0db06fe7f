"""Epsilon-coordinate models for the classical component types.

Involutions adapted to a maximally split torus are signed permutations in the
standard epsilon coordinates of A/B/C/D components.  This module holds those
models and the exact change of basis to fundamental-weight coordinates.
Only pairing ratios matter, so the unnormalized standard dot product is fine.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, Vector, dot, mat_mul, solve

EpsilonModel = tuple[int, list[Vector]]  # (ambient dimension, simple roots)


def epsilon_model(series: str, rank: int) -> EpsilonModel:
    """Simple roots of the component in standard epsilon coordinates.

    A_{n-1} uses ambient n (rank = n-1); B/C/D_m use ambient m (rank = m).
    """
    f0, f1, f2 = Fraction(0), Fraction(1), Fraction(2)

    def unit(n, i, s=f1):
        v = [f0] * n
        v[i] = s
        return tuple(v)

    def diff(n, i, j):
        v = [f0] * n
        v[i], v[j] = f1, -f1
        return tuple(v)

    if series == "A":
        n = rank + 1
        return n, [diff(n, i, i + 1) for i in range(rank)]
    if series == "B":
        m = rank
        roots = [diff(m, i, i + 1) for i in range(m - 1)] + [unit(m, m - 1)]
        return m, roots
    if series == "C":
        m = rank
        roots = [diff(m, i, i + 1) for i in range(m - 1)] + [unit(m, m - 1, f2)]
        return m, roots
    if series == "D":
        m = rank
        roots = [diff(m, i, i + 1) for i in range(m - 1)]
        v = [f0] * m
        v[m - 2], v[m - 1] = f1, f1
        roots.append(tuple(v))
        return m, roots
    raise ValueError(f"no epsilon model for series {series!r}")


def fund_coords(model: EpsilonModel, v: Vector) -> Vector:
    """Fundamental coordinates <v, alpha_i^vee> of an epsilon vector."""
    _, simples = model
    return tuple(2 * dot(v, a) / dot(a, a) for a in simples)


def epsilon_to_fund_matrix(model: EpsilonModel) -> Matrix:
    n, simples = model
    return tuple(
        tuple(2 * a[j] / dot(a, a) for j in range(n))
        for a in simples
    )


def sigma_fund_from_epsilon(model: EpsilonModel, s_eps: Matrix) -> Matrix:
    """Conjugate an epsilon-coordinate involution into fundamental coordinates.

    Any preimage section works because the involution preserves both the root
    span and its orthocomplement; the result is validated as an involution.
    """
    n, _ = model
    t = epsilon_to_fund_matrix(model)
    rank = len(t)
    cols = []
    for i in range(rank):
        rhs = tuple(Fraction(1 if j == i else 0) for j in range(rank))
        cols.append(solve(t, rhs))
    section = tuple(tuple(cols[j][i] for j in range(rank)) for i in range(n))
    out = mat_mul(mat_mul(t, s_eps), section)
    check = mat_mul(out, out)
    for i in range(rank):
        for j in range(rank):
            assert check[i][j] == (1 if i == j else 0), "epsilon involution does not descend"
    return out


def _signed_perm(n: int, images: dict[int, tuple[int, int]]) -> Matrix:
    """Matrix with column j mapped to sign * e_row per images; identity elsewhere."""
    m = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        row, sign = images.get(j, (j, 1))
        m[row][j] = Fraction(sign)
    return tuple(tuple(r) for r in m)


def su_sigma_epsilon(p: int, q: int) -> Matrix:
    """Conjugation of su(p,q) on the diagonal torus of su(p+q): the outer
    min(p,q) coordinate pairs are exchanged."""
    n = p + q
    k = min(p, q)
    images = {}
    for i in range(k):
        images[i] = (n - 1 - i, 1)
        images[n - 1 - i] = (i, 1)
    return _signed_perm(n, images)


def su_star_sigma_epsilon(n2: int) -> Matrix:
    """su*(2n) on A_{2n-1}: e_i -> -e_{n+i} (indices mod 2n)."""
    assert n2 % 2 == 0
    n = n2 // 2
    images = {}
    for i in range(n):
        images[i] = (n + i, -1)
        images[n + i] = (i, -1)
    return _signed_perm(n2, images)


def so_sigma_epsilon(p: int, q: int) -> Matrix:
    """so(p,q) on the torus of so(p+q): sign flip on min(p,q) coordinates."""
    m = (p + q) // 2
    k = min(p, q)
    return _signed_perm(m, {i: (i, -1) for i in range(k)})


def so_star_sigma_epsilon(n: int) -> Matrix:
    """so*(2n) on D_n: consecutive pairs are exchanged with a sign."""
    images = {}
    for i in range(n // 2):
        images[2 * i] = (2 * i + 1, -1)
        images[2 * i + 1] = (2 * i, -1)
    return _signed_perm(n, images)


def sp_sigma_epsilon(p: int, q: int) -> Matrix:
    """sp(p,q) on C_{p+q}: the first min(p,q) coordinates pair with the next
    min(p,q), exchanged with a sign."""
    n = p + q
    k = min(p, q)
    images = {}
    for i in range(k):
        images[i] = (k + i, -1)
        images[k + i] = (i, -1)
    return _signed_perm(n, images)

"""Adapted involution blocks on simple components of k.

An involution sigma of t* adapted to a symmetric pair must have its
(-1)-eigenspace maximal among abelian subspaces of the (-1)-part of k.  Per
simple component of k this is classical data: the conjugation matrix of a real
form of the component's complexification, restricted to a maximally split
torus.  Classical components get explicit signed permutations in epsilon
coordinates; equal-rank exceptional blocks are products of reflections in a
maximal strongly orthogonal family of noncompact roots; the two outer
exceptional blocks have closed forms.

Every block is validated on construction: involution, root-set preservation,
and the dimension of the (-1)-eigenspace against the stored split rank.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import classical
from .linalg import Matrix, identity, mat_mul, mat_scale
from .positive import InvolutionError, eigenspace_bases, validate_involution
from .roots import RootDatum, Weight, build_root_datum, cartan_matrix

BlockSpec = tuple  # ("compact",) | ("split",) | ("su", p, q) | ... see component_block


def real_rank(spec: BlockSpec, component_rank: int) -> int:
    """Split rank of the compact symmetric pair encoded by a block spec."""
    kind = spec[0]
    if kind == "compact":
        return 0
    if kind == "split":
        return component_rank
    if kind == "su":
        return min(spec[1], spec[2])
    if kind == "su_star":
        return spec[1] // 2 - 1
    if kind == "so":
        return min(spec[1], spec[2])
    if kind == "so_star":
        return (spec[1] // 2) // 2
    if kind == "sp":
        return min(spec[1], spec[2])
    if kind == "cascade":
        return spec[2]
    if kind == "neg_diagram":
        return None  # computed from the diagram involution
    if kind == "black_complement":
        return component_rank - len(spec[1])
    raise ValueError(f"unknown block spec {spec!r}")


def _series_of(label: str) -> tuple[str, int]:
    return label[0], int(label[1:])


@lru_cache(maxsize=None)
def _component_datum(series: str, rank: int) -> RootDatum:
    return build_root_datum(cartan_matrix(series, rank))


def _cascade_matrix(datum: RootDatum, node: int) -> tuple[Matrix, int]:
    """Product of reflections in a maximal strongly orthogonal family of
    noncompact roots for the grading by the given simple-root coefficient."""
    all_roots = set(datum.positive_roots) | {-a for a in datum.positive_roots}
    noncompact = [
        a for a in datum.positive_roots
        if datum._root_coefficients(a)[node].numerator % 2 == 1
    ]

    def height(a: Weight) -> Fraction:
        return sum(datum._root_coefficients(a))

    gammas: list[Weight] = []
    candidates = sorted(noncompact, key=lambda a: (height(a), a.coords), reverse=True)
    while candidates:
        gamma = candidates[0]
        gammas.append(gamma)
        kept = []
        for d in candidates[1:]:
            if datum.inner(gamma, d) != 0:
                continue
            if (gamma + d) in all_roots or (gamma - d) in all_roots:
                continue
            kept.append(d)
        candidates = kept

    n = datum.dim
    cols = []
    for j in range(n):
        v = datum.fundamental_weight(j)
        for g in gammas:
            v = datum.reflect_root(v, g)
        cols.append(v.coords)
    matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return matrix, len(gammas)


def _black_complement_matrix(datum: RootDatum, black: tuple[int, ...]) -> Matrix:
    """sigma = 2 P - 1 for the orthogonal projection P onto the span of the
    named black simple roots."""
    from .linalg import solve

    basis = [datum.simple_roots[i] for i in black]
    gram = tuple(tuple(datum.inner(a, b) for b in basis) for a in basis)
    n = datum.dim
    cols = []
    for j in range(n):
        e = datum.fundamental_weight(j)
        rhs = tuple(datum.inner(b, e) for b in basis)
        coeffs = solve(gram, rhs)
        proj = Weight.zero(n)
        for c, b in zip(coeffs, basis):
            proj = proj + b.scale(c)
        cols.append((proj.scale(2) - e).coords)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _neg_diagram_matrix(datum: RootDatum) -> Matrix:
    """-psi for the opposition diagram involution (equals the w0 action)."""
    n = datum.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        m[datum.nu[j]][j] = Fraction(-1)
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def component_block(label: str, spec: BlockSpec) -> Matrix:
    """Adapted involution on the fundamental coordinates of one component.

    ``label`` is the component type ("A5", "D6", "E7", ...); classical specs
    are realized through the epsilon models of the matching construction
    series, so the caller passes the construction label (e.g. "D3" for so(6)),
    not the isomorphism-classified one.
    """
    series, rank = _series_of(label)
    datum = _component_datum(series, rank)
    kind = spec[0]

    if kind == "compact":
        out = identity(rank)
    elif kind == "split":
        out = mat_scale(identity(rank), Fraction(-1))
    elif kind == "su":
        p, q = spec[1], spec[2]
        assert series == "A" and p + q == rank + 1
        model = classical.epsilon_model(series, rank)
        out = classical.sigma_fund_from_epsilon(model, classical.su_sigma_epsilon(p, q))
    elif kind == "su_star":
        n2 = spec[1]
        assert series == "A" and n2 == rank + 1 and n2 % 2 == 0
        model = classical.epsilon_model(series, rank)
        out = classical.sigma_fund_from_epsilon(model, classical.su_star_sigma_epsilon(n2))
    elif kind == "so":
        p, q = spec[1], spec[2]
        assert series in ("B", "D") and (p + q) // 2 == rank
        model = classical.epsilon_model(series, rank)
        out = classical.sigma_fund_from_epsilon(model, classical.so_sigma_epsilon(p, q))
    elif kind == "so_star":
        n2 = spec[1]
        assert series == "D" and n2 == 2 * rank
        model = classical.epsilon_model(series, rank)
        out = classical.sigma_fund_from_epsilon(model, classical.so_star_sigma_epsilon(rank))
    elif kind == "sp":
        p, q = spec[1], spec[2]
        assert series == "C" and p + q == rank
        model = classical.epsilon_model(series, rank)
        out = classical.sigma_fund_from_epsilon(model, classical.sp_sigma_epsilon(p, q))
    elif kind == "cascade":
        node, expected = spec[1], spec[2]
        out, found = _cascade_matrix(datum, node)
        if found != expected:
            raise InvolutionError(
                f"cascade on {label} node {node} found {found} strongly orthogonal roots, expected {expected}"
            )
    elif kind == "neg_diagram":
        out = _neg_diagram_matrix(datum)
    elif kind == "black_complement":
        out = _black_complement_matrix(datum, spec[1])
    else:
        raise ValueError(f"unknown block spec {spec!r}")

    validate_involution(datum, out)
    expected_r = real_rank(spec, rank)
    if expected_r is not None:
        v_minus, _ = eigenspace_bases(out)
        if len(v_minus) != expected_r:
            raise InvolutionError(
                f"block {spec!r} on {label}: (-1)-eigenspace has dim {len(v_minus)}, expected {expected_r}"
            )
    return out


def restricted_multiplicities(label: str, spec: BlockSpec) -> dict[tuple, int]:
    """Fingerprint of the restricted root system: multiplicity per restricted
    root, keyed by coordinates in the (-1)-eigenspace. Diagnostic helper."""
    series, rank = _series_of(label)
    datum = _component_datum(series, rank)
    sigma = component_block(label, spec)
    from .positive import minus_component

    counts: dict[tuple, int] = {}
    for a in list(datum.positive_roots) + [-a for a in datum.positive_roots]:
        r = minus_component(datum, sigma, a)
        if not r.is_zero():
            counts[r.coords] = counts.get(r.coords, 0) + 1
    return counts

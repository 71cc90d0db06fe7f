"""Positive systems cut out by exact ordering functionals.

A positive system is represented by a rational functional (an element of t*
paired through the invariant form) that is non-vanishing on every root.  The
construction of a system compatible with an involution sigma follows the
two-scale recipe: a functional generic on the (-1)-eigenspace dominates, a
generic functional on the (+1)-eigenspace breaks the remaining ties, and the
mixing coefficient is bounded exactly so the dominant part always wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .linalg import Matrix, identity, kernel_basis, mat_mul, mat_vec, solve
from .roots import RootDatum, Weight


class InvolutionError(ValueError):
    """Raised when a purported involution fails validation."""


@dataclass(frozen=True, eq=False)
class PositiveSystem:
    """A positive system {alpha : <functional, alpha> > 0} of a root datum."""

    datum: RootDatum
    functional: Weight
    positive_set: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    _caches: dict = field(default_factory=dict, repr=False)

    def is_positive(self, alpha: Weight) -> bool:
        return self.datum.inner(self.functional, alpha) > 0

    def pairing(self, w: Weight) -> Fraction:
        return self.datum.inner(self.functional, w)

    def coroot_pairing(self, w: Weight, i: int) -> Fraction:
        alpha = self.simple_roots[i]
        return 2 * self.datum.inner(w, alpha) / self.datum.inner(alpha, alpha)

    def is_dominant(self, w: Weight) -> bool:
        return all(self.coroot_pairing(w, i) >= 0 for i in range(len(self.simple_roots)))

    def dominant_with_word(self, w: Weight) -> tuple[Weight, list[int]]:
        word: list[int] = []
        cur = w
        while True:
            i = next(
                (j for j in range(len(self.simple_roots)) if self.coroot_pairing(cur, j) < 0),
                None,
            )
            if i is None:
                return cur, word
            cur = self.datum.reflect_root(cur, self.simple_roots[i])
            word.append(i)

    def dominant_representative(self, w: Weight) -> tuple[Weight, int]:
        d, word = self.dominant_with_word(w)
        return d, len(word)

    def _fundamental_dual(self, i: int) -> Weight:
        """x in the root span with <x, alpha_j^vee> = delta_ij for system simples."""
        cache = self._caches.setdefault("fund", {})
        if i not in cache:
            n = len(self.simple_roots)
            m = tuple(
                tuple(
                    2 * self.datum.inner(self.simple_roots[k], self.simple_roots[j])
                    / self.datum.inner(self.simple_roots[j], self.simple_roots[j])
                    for k in range(n)
                )
                for j in range(n)
            )
            rhs = tuple(Fraction(1 if j == i else 0) for j in range(n))
            coeffs = solve(m, rhs)
            x = Weight.zero(self.datum.dim)
            for k, c in enumerate(coeffs):
                x = x + self.simple_roots[k].scale(c)
            cache[i] = x
        return cache[i]

    def _nu(self) -> tuple[int, ...]:
        cached = self._caches.get("nu")
        if cached is None:
            n = len(self.simple_roots)
            nu = []
            for i in range(n):
                dom, _ = self.dominant_with_word(-self._fundamental_dual(i))
                hits = [j for j in range(n) if dom == self._fundamental_dual(j)]
                assert len(hits) == 1
                nu.append(hits[0])
            cached = tuple(nu)
            self._caches["nu"] = cached
        return cached

    def longest_element_action(self, w: Weight) -> Weight:
        """w0 . w for the longest element relative to this system."""
        d, word = self.dominant_with_word(w)
        anti, _ = self.dominant_with_word(-d)
        cur = -anti
        nu = self._nu()
        for i in reversed(word):
            cur = self.datum.reflect_root(cur, self.simple_roots[nu[i]])
        return cur

    def highest_weight_of(self, weights) -> Weight:
        """The functional-maximal element; unique for an irreducible weight set."""
        best = None
        best_val = None
        tie = False
        for w in weights:
            val = self.pairing(w)
            if best_val is None or val > best_val:
                best, best_val, tie = w, val, False
            elif val == best_val and w != best:
                tie = True
        assert best is not None, "empty weight set"
        assert not tie, "ordering functional does not separate the extreme weights"
        return best

    def fingerprint(self) -> str:
        return "functional=" + str(self.functional)


def _simples_of(datum: RootDatum, positive: list[Weight]) -> tuple[Weight, ...]:
    pos = set(positive)
    sums = {a + b for a in positive for b in positive}
    simples = tuple(a for a in positive if a not in sums and a in pos)
    assert len(simples) == datum.rank, "indecomposable count must equal the rank"
    return simples


def positive_system_from_functional(datum: RootDatum, functional: Weight) -> PositiveSystem:
    values = [(datum.inner(functional, a), a) for a in datum.positive_roots]
    if any(v == 0 for v, _ in values):
        bad = next(a for v, a in values if v == 0)
        raise ValueError(f"functional vanishes on root {bad}")
    positive = [a if v > 0 else -a for v, a in values]
    positive.sort(key=lambda a: (datum.inner(functional, a), a.coords))
    return PositiveSystem(
        datum=datum,
        functional=functional,
        positive_set=tuple(positive),
        simple_roots=_simples_of(datum, positive),
    )


def standard_positive_system(datum: RootDatum) -> PositiveSystem:
    return positive_system_from_functional(datum, datum.rho)


def apply_involution(sigma: Matrix, w: Weight) -> Weight:
    return Weight(mat_vec(sigma, w.coords))


def validate_involution(datum: RootDatum, sigma: Matrix) -> None:
    """Check sigma is an involution of t* preserving the root set."""
    n = datum.dim
    if len(sigma) != n or any(len(row) != n for row in sigma):
        raise InvolutionError(f"involution matrix must be {n}x{n}")
    if mat_mul(sigma, sigma) != identity(n):
        raise InvolutionError("matrix is not an involution")
    roots = set(datum.positive_roots) | {-a for a in datum.positive_roots}
    for alpha in datum.positive_roots:
        img = apply_involution(sigma, alpha)
        if img not in roots:
            raise InvolutionError(f"involution does not preserve the root set: image of {alpha} is {img}")


def _lex_generic_functional(datum: RootDatum, basis: list, probes: list[Weight]) -> Weight:
    """Sum basis vectors with spread powers so no probe with a nonzero
    component along the basis span pairs to zero."""
    if not basis:
        return Weight.zero(datum.dim)
    vectors = [Weight(b) for b in basis]
    pairings = [[datum.inner(v, p) for p in probes] for v in vectors]
    denoms = [x.denominator for row in pairings for x in row]
    d = lcm(*denoms) if denoms else 1
    big = max((abs(x * d) for row in pairings for x in row), default=Fraction(0))
    m = int(big) + 2
    out = Weight.zero(datum.dim)
    power = Fraction(1)
    for v in reversed(vectors):
        out = out + v.scale(power)
        power *= m
    return out


def eigenspace_bases(sigma: Matrix) -> tuple[list, list]:
    """Deterministic bases of the (-1) and (+1) eigenspaces of an involution."""
    n = len(sigma)
    plus = [tuple(sigma[i][j] + (1 if i == j else 0) for j in range(n)) for i in range(n)]
    minus = [tuple(sigma[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)]
    v_minus = kernel_basis(tuple(plus))
    v_plus = kernel_basis(tuple(minus))
    assert len(v_minus) + len(v_plus) == n
    return v_minus, v_plus


def minus_component(datum: RootDatum, sigma: Matrix, w: Weight) -> Weight:
    """Projection of w onto the (-1)-eigenspace: (w - sigma w) / 2."""
    return (w - apply_involution(sigma, w)).scale(Fraction(1, 2))


def compatible_positive_system(datum: RootDatum, sigma: Matrix) -> PositiveSystem:
    """A positive system compatible with the involution, deterministically.

    The ordering functional is a_minus + eps * a_plus where a_minus is generic
    on the (-1)-eigenspace of sigma, a_plus generic on the (+1)-eigenspace,
    and eps small enough (exactly computed) that every root with non-vanishing
    restriction to the (-1)-eigenspace gets its sign from a_minus.
    """
    validate_involution(datum, sigma)
    v_minus, v_plus = eigenspace_bases(sigma)
    roots = list(datum.positive_roots)
    probes = roots + [-a for a in roots]
    a_minus = _lex_generic_functional(datum, v_minus, probes)
    a_plus = _lex_generic_functional(datum, v_plus, probes)

    minus_vals = [datum.inner(a_minus, a) for a in roots]
    plus_vals = [datum.inner(a_plus, a) for a in roots]
    nonzero = [abs(v) for v in minus_vals if v != 0]
    if not nonzero:
        functional = a_plus
    else:
        low = min(nonzero)
        high = max((abs(v) for v in plus_vals), default=Fraction(0))
        eps = low / (2 * (high + 1))
        functional = a_minus + a_plus.scale(eps)
        for a, mv in zip(roots, minus_vals):
            if mv != 0:
                lv = datum.inner(functional, a)
                assert (lv > 0) == (mv > 0), "dominant-scale sign rule violated"

    system = positive_system_from_functional(datum, functional)
    assert is_compatible(system, sigma), "constructed system fails the compatibility check"
    return system


def is_compatible(system: PositiveSystem, sigma: Matrix) -> bool:
    """Do the nonzero restrictions of the system to the (-1)-eigenspace form
    a positive system of the restricted root system?"""
    datum = system.datum
    restricted = []
    for a in system.positive_set:
        r = minus_component(datum, sigma, a)
        if not r.is_zero():
            restricted.append(r)
    s = {r.coords for r in restricted}
    if any(tuple(-x for x in c) in s for c in s):
        return False
    full = s | {tuple(-x for x in c) for c in s}
    for u in restricted:
        for v in restricted:
            w = u + v
            if w.coords in full and w.coords not in s:
                return False
    return True


def enumerate_positive_systems(datum: RootDatum) -> list[PositiveSystem]:
    """All positive systems (the Weyl orbit of the standard one).

    Only intended for small rank; the orbit of rho has |W| elements.
    """
    return [positive_system_from_functional(datum, w) for w in sorted(datum.weyl_orbit(datum.rho), key=lambda w: w.coords)]

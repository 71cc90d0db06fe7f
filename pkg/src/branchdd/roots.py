"""Exact root-system and weight arithmetic.

Weights live on the dual of a Cartan subalgebra t of a compact reductive
algebra k.  Coordinates are fundamental-weight coordinates per simple
component of k, followed by one rational coordinate per central torus
direction.  In these coordinates

* the pairing of a weight w with the i-th simple coroot is w.coords[i],
* simple reflections and dominance are integer/sign manipulations,
* roots have zero central coordinates, so Weyl operations never touch the
  central block.

All arithmetic is in Fraction; nothing here uses floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, Vector, invert

CartanMatrix = tuple[tuple[int, ...], ...]

# dim of the compact simple algebra per type label; |R+| = (dim - rank) / 2
_DIM_BY_TYPE = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": {6: 78, 7: 133, 8: 248},
    "F": {4: 52},
    "G": {2: 14},
}


class NotFiniteTypeError(ValueError):
    """Raised when a Cartan matrix is not of finite type."""


@dataclass(frozen=True)
class Weight:
    """Exact weight vector: fundamental coordinates + central coordinates."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values) -> "Weight":
        return Weight(tuple(Fraction(v) for v in values))

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight((Fraction(0),) * n)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, s) -> "Weight":
        s = Fraction(s)
        return Weight(tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def cartan_matrix(series: str, rank: int) -> CartanMatrix:
    """Cartan matrix in Bourbaki numbering.

    Convention: column j holds the fundamental coordinates of the simple
    root alpha_j, i.e. A[i][j] = <alpha_j, alpha_i^vee>.
    """
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if series == "A":
        for i in range(rank - 1):
            chain(i, i + 1)
    elif series == "B":
        # alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2
        for i in range(rank - 1):
            chain(i, i + 1)
        if rank >= 2:
            a[rank - 1][rank - 2] = -2
    elif series == "C":
        # alpha_rank long: <alpha_n, alpha_{n-1}^vee> = -2
        for i in range(rank - 1):
            chain(i, i + 1)
        if rank >= 2:
            a[rank - 2][rank - 1] = -2
    elif series == "D":
        if rank < 2:
            raise ValueError("D requires rank >= 2")
        for i in range(rank - 2):
            chain(i, i + 1)
        if rank >= 3:
            chain(rank - 3, rank - 1)
        # rank 2 gives A1 x A1 (no chain), which is intended
    elif series == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E requires rank 6, 7 or 8")
        # Bourbaki: chain 1-3-4-5-...-rank, node 2 attached to 4
        chain(0, 2)
        for i in range(2, rank - 1):
            chain(i, i + 1)
        chain(1, 3)
    elif series == "F":
        if rank != 4:
            raise ValueError("F requires rank 4")
        chain(0, 1)
        chain(1, 2)
        chain(2, 3)
        # alpha_3, alpha_4 short: <alpha_2, alpha_3^vee> = -2
        a[2][1] = -2
    elif series == "G":
        if rank != 2:
            raise ValueError("G requires rank 2")
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
    else:
        raise ValueError(f"unknown series {series!r}")
    return tuple(tuple(row) for row in a)


def _validate_cartan(a: CartanMatrix) -> None:
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise NotFiniteTypeError("Cartan matrix must be square")
        if a[i][i] != 2:
            raise NotFiniteTypeError(f"diagonal entry ({i},{i}) is {a[i][i]}, expected 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise NotFiniteTypeError(f"off-diagonal entry ({i},{j}) is positive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise NotFiniteTypeError(f"zero pattern of entries ({i},{j})/({j},{i}) is asymmetric")


def _symmetrizer(a: CartanMatrix, comps: list[list[int]]) -> tuple[Fraction, ...]:
    """d_i with d_i * a[i][j] symmetric, normalized so max d = 1 per component."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for comp in comps:
        d[comp[0]] = Fraction(1)
        queue = [comp[0]]
        while queue:
            i = queue.pop()
            for j in range(n):
                if a[i][j] != 0 and i != j:
                    val = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = val
                        queue.append(j)
                    elif d[j] != val:
                        raise NotFiniteTypeError("Cartan matrix is not symmetrizable")
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / top
    return tuple(d)


def _check_positive_definite(a: CartanMatrix, d: tuple[Fraction, ...]) -> None:
    """Sylvester criterion on the symmetrized matrix; names the bad minor."""
    n = len(a)
    s = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    # exact fraction-free-ish determinant of leading minors via Gaussian elimination
    for k in range(1, n + 1):
        m = [row[:k] for row in s[:k]]
        det = Fraction(1)
        for c in range(k):
            pivot = next((r for r in range(c, k) if m[r][c] != 0), None)
            if pivot is None:
                det = Fraction(0)
                break
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, k):
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        if det <= 0:
            raise NotFiniteTypeError(
                f"not finite type: principal minor on rows 1..{k} is {det} (must be positive)"
            )


def _components(a: CartanMatrix) -> list[list[int]]:
    n = len(a)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if a[i][j] != 0 and i != j and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_component(a: CartanMatrix, comp: list[int], d: tuple[Fraction, ...]) -> str:
    rank = len(comp)
    if rank == 1:
        return "A1"
    edges = []
    for x in range(rank):
        for y in range(x + 1, rank):
            i, j = comp[x], comp[y]
            if a[i][j] != 0:
                edges.append((i, j, a[i][j] * a[j][i]))
    orders = sorted(e[2] for e in edges)
    if any(o == 3 for o in orders):
        return "G2"
    deg = {i: sum(1 for e in edges if i in e[:2]) for i in comp}
    if any(o == 2 for o in orders):
        if rank == 2:
            return "B2"
        if rank == 4 and all(deg[i] <= 2 for i in comp):
            double = [e for e in edges if e[2] == 2]
            if len(double) == 1 and deg[double[0][0]] == 2 and deg[double[0][1]] == 2:
                return "F4"
        # path with the double edge at an end: B if the lone extreme-length
        # root is short, C if it is long
        shorts = [i for i in comp if d[i] < 1]
        if len(shorts) == 1:
            return f"B{rank}"
        if len(shorts) == rank - 1:
            return f"C{rank}"
        raise NotFiniteTypeError("unrecognizable multiply-laced component")
    # simply laced
    branch = [i for i in comp if deg[i] == 3]
    if not branch:
        return f"A{rank}"
    if len(branch) > 1:
        raise NotFiniteTypeError("more than one branch node in a component")
    b = branch[0]
    adj = {i: [j for j in comp if j != i and a[i][j] != 0] for i in comp}
    legs = []
    for first in adj[b]:
        length, prev, cur = 1, b, first
        while True:
            nxt = [j for j in adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return f"D{rank}"
    if legs == [1, 2, 2]:
        return "E6"
    if legs == [1, 2, 3]:
        return "E7"
    if legs == [1, 2, 4]:
        return "E8"
    raise NotFiniteTypeError("unrecognizable simply-laced component")


def _expected_positive_count(label: str) -> int:
    series, rank = label[0], int(label[1:])
    dim = _DIM_BY_TYPE[series](rank) if callable(_DIM_BY_TYPE[series]) else _DIM_BY_TYPE[series][rank]
    return (dim - rank) // 2


def component_dimension(label: str) -> int:
    series, rank = label[0], int(label[1:])
    return _DIM_BY_TYPE[series](rank) if callable(_DIM_BY_TYPE[series]) else _DIM_BY_TYPE[series][rank]


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Finite root system with exact inner product on t*.

    ``rank`` counts semisimple coordinates, ``torus`` central ones; weights
    carry rank + torus coordinates.  ``gram`` covers only the semisimple
    block; central directions are orthonormal and orthogonal to it.
    """

    cartan: CartanMatrix
    torus: int
    rank: int
    components: tuple[tuple[str, tuple[int, ...]], ...]
    symmetrizer: tuple[Fraction, ...]
    gram: Matrix
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    nu: tuple[int, ...]  # index permutation with w0(alpha_i) = -alpha_nu(i)
    _caches: dict = field(default_factory=dict, repr=False)

    # -- basic coordinate operations -------------------------------------

    @property
    def dim(self) -> int:
        return self.rank + self.torus

    def weight(self, values) -> Weight:
        w = Weight.of(values)
        if len(w.coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(w.coords)}")
        return w

    def fundamental_weight(self, i: int) -> Weight:
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Weight(tuple(coords))

    def inner(self, u: Weight, v: Weight) -> Fraction:
        total = Fraction(0)
        g = self.gram
        for i in range(self.rank):
            ui = u.coords[i]
            if ui:
                row = g[i]
                for j in range(self.rank):
                    if v.coords[j]:
                        total += ui * row[j] * v.coords[j]
        for i in range(self.rank, self.dim):
            total += u.coords[i] * v.coords[i]
        return total

    def coroot_pairing(self, w: Weight, i: int) -> Fraction:
        """<w, alpha_i^vee>; a fundamental coordinate by construction."""
        return w.coords[i]

    def reflect(self, w: Weight, i: int) -> Weight:
        c = w.coords[i]
        if c == 0:
            return w
        return w - self.simple_roots[i].scale(c)

    def reflect_root(self, w: Weight, alpha: Weight) -> Weight:
        c = 2 * self.inner(w, alpha) / self.inner(alpha, alpha)
        return w - alpha.scale(c)

    def is_dominant(self, w: Weight) -> bool:
        return all(w.coords[i] >= 0 for i in range(self.rank))

    def is_integral(self, w: Weight) -> bool:
        return all(w.coords[i].denominator == 1 for i in range(self.rank))

    # -- Weyl-group operations -------------------------------------------

    def dominant_representative(self, w: Weight) -> tuple[Weight, int]:
        d, word = self.dominant_with_word(w)
        return d, len(word)

    def dominant_with_word(self, w: Weight) -> tuple[Weight, list[int]]:
        """Reflect at the first negative coordinate until dominant.

        Returns (d, [i1, i2, ...]) with d = s_{ik} ... s_{i1} w.
        """
        word: list[int] = []
        cur = w
        while True:
            i = next((j for j in range(self.rank) if cur.coords[j] < 0), None)
            if i is None:
                return cur, word
            cur = self.reflect(cur, i)
            word.append(i)

    def longest_element_action(self, w: Weight) -> Weight:
        """w0 . w for the longest Weyl element of the standard positive system."""
        d, word = self.dominant_with_word(w)
        anti, _ = self.dominant_with_word(-d)
        cur = -anti  # w0 . d
        for i in reversed(word):
            cur = self.reflect(cur, self.nu[i])
        return cur

    def weyl_orbit(self, w: Weight) -> set[Weight]:
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for u in frontier:
                for i in range(self.rank):
                    v = self.reflect(u, i)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return seen

    def highest_root(self) -> Weight:
        """The height-maximal root; requires a single simple component."""
        if len(self.components) != 1:
            raise ValueError("highest_root needs exactly one simple component")
        by_height = sorted(
            self.positive_roots, key=lambda a: (sum(self._root_coefficients(a)), a.coords)
        )
        top = by_height[-1]
        assert self.is_dominant(top)
        assert sum(self._root_coefficients(top)) > sum(self._root_coefficients(by_height[-2]))
        return top

    # -- representation theory --------------------------------------------

    def weyl_dimension(self, hw: Weight) -> int:
        """Weyl dimension formula; independent of the Freudenthal recursion."""
        self._require_dominant_integral(hw)
        num = den = Fraction(1)
        lam_rho = hw + self.rho
        for alpha in self.positive_roots:
            num *= self.inner(lam_rho, alpha)
            den *= self.inner(self.rho, alpha)
        val = num / den
        assert val.denominator == 1 and val > 0
        return int(val)

    def weight_system(self, hw: Weight) -> dict[Weight, int]:
        """All weights of the irreducible module with highest weight hw.

        Multiplicities come from the Freudenthal recursion on dominant
        representatives; the full system is grown by subtracting simple
        roots, which reaches every weight of an irreducible module.
        """
        self._require_dominant_integral(hw)
        mult_dom: dict[Weight, int] = {}

        def mult(mu: Weight) -> int:
            dom, _ = self.dominant_with_word(mu)
            if dom in mult_dom:
                return mult_dom[dom]
            if dom == hw:
                mult_dom[dom] = 1
                return 1
            diff = hw - dom
            if any(c < 0 or c.denominator != 1 for c in self._root_coefficients(diff)):
                mult_dom[dom] = 0
                return 0
            denom = self.inner(hw + self.rho, hw + self.rho) - self.inner(dom + self.rho, dom + self.rho)
            if denom <= 0:
                mult_dom[dom] = 0
                return 0
            acc = Fraction(0)
            for alpha in self.positive_roots:
                k = 1
                while True:
                    nu_w = dom + alpha.scale(k)
                    m = mult(nu_w)
                    if m == 0:
                        break
                    acc += m * self.inner(nu_w, alpha)
                    k += 1
            val = 2 * acc / denom
            assert val.denominator == 1, "Freudenthal produced a non-integer"
            mult_dom[dom] = int(val)
            return mult_dom[dom]

        system: dict[Weight, int] = {}
        frontier = [hw]
        system[hw] = 1
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(self.rank):
                    lower = mu - self.simple_roots[i]
                    if lower in system:
                        continue
                    m = mult(lower)
                    if m > 0:
                        system[lower] = m
                        nxt.append(lower)
            frontier = nxt
        return system

    # -- helpers -----------------------------------------------------------

    def _root_coefficients(self, w: Weight) -> Vector:
        """Coefficients of w in the simple-root basis (central part ignored)."""
        inv = self._caches.get("cartan_inv")
        if inv is None:
            inv = invert(tuple(tuple(Fraction(x) for x in row) for row in self.cartan))
            self._caches["cartan_inv"] = inv
        return tuple(
            sum((inv[i][j] * w.coords[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def _require_dominant_integral(self, hw: Weight) -> None:
        if len(hw.coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(hw.coords)}")
        if not self.is_dominant(hw):
            raise ValueError(f"highest weight {hw} is not dominant")
        if not self.is_integral(hw):
            raise ValueError(f"highest weight {hw} is not integral")

    def to_json(self) -> dict:
        """Debug dump: components, Cartan matrix, positive roots as integer arrays."""
        return {
            "components": [label for label, _ in self.components] + [f"T{self.torus}"] * (1 if self.torus else 0),
            "cartan_matrix": [list(row) for row in self.cartan],
            "positive_roots": [[int(c) for c in a.coords] for a in self.positive_roots],
        }


def _generate_positive_roots(a: CartanMatrix, torus: int) -> list[Weight]:
    n = len(a)
    dim = n + torus
    simples = []
    for j in range(n):
        coords = [Fraction(a[i][j]) for i in range(n)] + [Fraction(0)] * torus
        simples.append(Weight(tuple(coords)))
    roots = {s: 1 for s in simples}  # value = height
    frontier = list(simples)
    while frontier:
        nxt = []
        for alpha in frontier:
            h = roots[alpha]
            for i in range(n):
                # p = how far the alpha_i-string extends below alpha
                p = 0
                probe = alpha - simples[i]
                while probe in roots:
                    p += 1
                    probe = probe - simples[i]
                if p - alpha.coords[i] >= 1:
                    new = alpha + simples[i]
                    if new not in roots:
                        roots[new] = h + 1
                        nxt.append(new)
        frontier = nxt
    ordered = sorted(roots, key=lambda r: (roots[r], r.coords))
    assert len({r for r in ordered}) == len(ordered)
    _ = dim
    return ordered


@lru_cache(maxsize=None)
def build_root_datum(cartan: CartanMatrix, torus: int = 0) -> RootDatum:
    """Generate the full root datum for a finite-type Cartan matrix.

    Rejects non-finite-type input with a diagnostic naming the violating
    principal minor.  Idempotent: equal input yields the identical object.
    """
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    _validate_cartan(cartan)
    comps = _components(cartan)
    d = _symmetrizer(cartan, comps)
    _check_positive_definite(cartan, d)
    labels = tuple((_classify_component(cartan, comp, d), tuple(comp)) for comp in comps)

    n = len(cartan)
    positive = _generate_positive_roots(cartan, torus)
    expected = sum(_expected_positive_count(label) for label, _ in labels)
    assert len(positive) == expected, f"generated {len(positive)} positive roots, expected {expected}"

    half = Fraction(1, 2)
    rho = Weight(tuple(sum(a.coords[i] for a in positive) * half for i in range(n)) + (Fraction(0),) * torus)
    # rho = sum of fundamental weights; cheap sanity check of the generation
    assert all(rho.coords[i] == 1 for i in range(n))

    inv = invert(tuple(tuple(Fraction(x) for x in row) for row in cartan))
    gram = tuple(tuple(inv[j][i] * d[j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert gram[i][j] == gram[j][i]

    simples = tuple(
        Weight(tuple(Fraction(cartan[i][j]) for i in range(n)) + (Fraction(0),) * torus)
        for j in range(n)
    )

    datum = RootDatum(
        cartan=cartan,
        torus=torus,
        rank=n,
        components=labels,
        symmetrizer=d,
        gram=gram,
        simple_roots=simples,
        positive_roots=tuple(positive),
        rho=rho,
        nu=(),
    )
    # opposition involution: dom(-w_i) is a fundamental weight
    nu = []
    for i in range(n):
        dom, _ = datum.dominant_with_word(-datum.fundamental_weight(i))
        hits = [j for j in range(n) if dom == datum.fundamental_weight(j)]
        assert len(hits) == 1, "w0 image of a fundamental weight must be a fundamental weight"
        nu.append(hits[0])
    object.__setattr__(datum, "nu", tuple(nu))
    return datum


def generate_roots(cartan, torus: int = 0) -> RootDatum:
    """Public entry point; accepts any nested integer sequence."""
    return build_root_datum(tuple(tuple(int(x) for x in row) for row in cartan), torus)

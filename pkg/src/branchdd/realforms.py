"""Catalog of non-compact real simple Lie algebras.

Each descriptor records the complexified maximal compact subalgebra k as a
root datum (fundamental coordinates per simple component plus one coordinate
per central direction), the K-module p as highest weights of its irreducible
constituents, and stored structure facts: dimensions, Hermitian type, the
minimal K-orbit dimension, the orbit-intersection trichotomy, and whether a
minimal representation exists.

Hermitian forms carry the two constituents of p with +/- labels; the central
coordinate is normalized so the +-constituent sits at central coordinate +1.
Small-rank isomorphic coincidences are resolved by canonical-name
normalization in :func:`canonicalize`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import classical
from .positive import PositiveSystem, standard_positive_system
from .roots import RootDatum, Weight, build_root_datum, cartan_matrix


class CatalogError(ValueError):
    """Raised for invalid or unsupported real-form requests."""


@dataclass(frozen=True, eq=False)
class RealFormDescriptor:
    name: str
    family: str
    params: tuple[int, ...]
    k_datum: RootDatum
    component_models: tuple[tuple[str, int], ...]  # construction (series, rank) per block
    center_rank: int
    p_module: tuple[tuple[str | None, Weight], ...]
    dim_g: int
    dim_k: int
    is_complex_as_real: bool
    has_min_rep: bool | None
    notes: str = ""

    @property
    def hermitian(self) -> bool:
        return self.center_rank == 1

    def component_offsets(self) -> list[tuple[str, int, int]]:
        """(series+rank label, offset, rank) per component block, slice order."""
        out = []
        off = 0
        for series, rank in self.component_models:
            out.append((f"{series}{rank}", off, rank))
            off += rank
        return out

    def constituent(self, label: str | None) -> Weight:
        for lab, hw in self.p_module:
            if lab == label:
                return hw
        raise CatalogError(f"{self.name}: no p-constituent labeled {label!r}")

    def p_weights(self) -> dict[Weight, int]:
        """Weight multiset of the full module p."""
        out: dict[Weight, int] = {}
        for _, hw in self.p_module:
            for w, m in self.k_datum.weight_system(hw).items():
                out[w] = out.get(w, 0) + m
        return out


def _block_diag_cartan(cartans) -> tuple[tuple[int, ...], ...]:
    n = sum(len(c) for c in cartans)
    out = [[0] * n for _ in range(n)]
    off = 0
    for c in cartans:
        for i, row in enumerate(c):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(c)
    return tuple(tuple(row) for row in out)


def _assemble(models: list[tuple[str, int]], center: int) -> RootDatum:
    cartans = [cartan_matrix(s, r) for s, r in models]
    return build_root_datum(_block_diag_cartan(cartans), torus=center)


def _embed(models, block_coords: dict[int, tuple], center_vals: tuple, total_rank: int) -> Weight:
    coords: list[Fraction] = []
    for idx, (series, rank) in enumerate(models):
        part = block_coords.get(idx)
        if part is None:
            coords.extend([Fraction(0)] * rank)
        else:
            assert len(part) == rank
            coords.extend(Fraction(x) for x in part)
    coords.extend(Fraction(x) for x in center_vals)
    assert len(coords) == total_rank
    return Weight(tuple(coords))


def _so_model(n: int) -> tuple[str, int]:
    return ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)


def _so_vector(n: int) -> tuple:
    model = classical.epsilon_model(*_so_model(n))
    e1 = tuple(Fraction(1 if i == 0 else 0) for i in range(model[0]))
    return classical.fund_coords(model, e1)


def _so_sym2(n: int) -> tuple:
    model = classical.epsilon_model(*_so_model(n))
    e1 = tuple(Fraction(2 if i == 0 else 0) for i in range(model[0]))
    return classical.fund_coords(model, e1)


def _fund(rank: int, *indices: int) -> tuple:
    coords = [0] * rank
    for i in indices:
        coords[i] += 1
    return tuple(coords)


def canonicalize(family: str, params: tuple[int, ...]) -> tuple[str, tuple[int, ...]]:
    """Resolve small-rank isomorphic coincidences to one canonical name."""
    if family in ("su", "so", "sp"):
        p, q = params
        params = (max(p, q), min(p, q))
    if family == "su":
        if params == (1, 1):
            return ("sp_r", (1,))
    if family == "sl_r" and params == (2,):
        return ("sp_r", (1,))
    if family == "so":
        table = {
            (2, 1): ("sp_r", (1,)),
            (3, 1): ("sl_c", (2,)),
            (2, 2): None,
            (3, 2): ("sp_r", (2,)),
            (4, 1): ("sp", (1, 1)),
            (3, 3): ("sl_r", (4,)),
            (4, 2): ("su", (2, 2)),
            (5, 1): ("su_star", (4,)),
        }
        if params in table:
            tgt = table[params]
            if tgt is None:
                raise CatalogError("so(2,2) is not simple")
            return tgt
    if family == "su_star" and params == (2,):
        raise CatalogError("su*(2) is compact")
    if family == "so_star":
        n2 = params[0]
        if n2 <= 4:
            raise CatalogError(f"so*({n2}) is not simple non-compact of this family")
        if n2 == 6:
            return ("su", (3, 1))
        if n2 == 8:
            return ("so", (6, 2))
    if family == "sp_c" and params == (1,):
        return ("sl_c", (2,))
    if family == "so_c":
        if params[0] < 5:
            raise CatalogError(f"so({params[0]},C): need n >= 5")
    return (family, params)


def _min_rep_so(m: int, n: int) -> bool:
    """Existence rule for so(m,n) (order-insensitive)."""
    if (m + n) % 2 == 0 and m >= 2 and n >= 2 and m + n >= 8:
        return True
    a, b = max(m, n), min(m, n)
    if b == 3 and a >= 4 and a % 2 == 0:
        return True
    if b == 2 and a >= 3 and a % 2 == 1:
        return True
    return False


_EXCEPTIONAL = {
    # family: (name, models, center, p-parts, dims (g, k), has_min_rep)
    "g2_2": ("g2(2)", [("A", 1), ("A", 1)], 0, {0: (3,), 1: (1,)}, (14, 6), None),
    "f4_4": ("f4(4)", [("C", 3), ("A", 1)], 0, {0: (0, 0, 1), 1: (1,)}, (52, 24), True),
    "f4_-20": ("f4(-20)", [("B", 4)], 0, {0: (0, 0, 0, 1)}, (52, 36), False),
    "e6_6": ("e6(6)", [("C", 4)], 0, {0: (0, 0, 0, 1)}, (78, 36), True),
    "e6_2": ("e6(2)", [("A", 5), ("A", 1)], 0, {0: (0, 0, 1, 0, 0), 1: (1,)}, (78, 38), True),
    "e6_-14": ("e6(-14)", [("D", 5)], 1, {0: (0, 0, 0, 0, 1)}, (78, 46), True),
    "e6_-26": ("e6(-26)", [("F", 4)], 0, {0: (0, 0, 0, 1)}, (78, 52), False),
    "e7_7": ("e7(7)", [("A", 7)], 0, {0: (0, 0, 0, 1, 0, 0, 0)}, (133, 63), True),
    "e7_-5": ("e7(-5)", [("D", 6), ("A", 1)], 0, {0: (0, 0, 0, 0, 0, 1), 1: (1,)}, (133, 69), True),
    "e7_-25": ("e7(-25)", [("E", 6)], 1, {0: (1, 0, 0, 0, 0, 0)}, (133, 79), None),
    "e8_8": ("e8(8)", [("D", 8)], 0, {0: (0, 0, 0, 0, 0, 0, 0, 1)}, (248, 120), True),
    "e8_-24": ("e8(-24)", [("E", 7), ("A", 1)], 0, {0: (0, 0, 0, 0, 0, 0, 1), 1: (1,)}, (248, 136), True),
}

_COMPLEX_TYPES = {
    "sl_c": lambda n: ("A", n - 1),
    "so_c": lambda n: _so_model(n),
    "sp_c": lambda n: ("C", n),
    "g2_c": lambda _: ("G", 2),
    "f4_c": lambda _: ("F", 4),
    "e6_c": lambda _: ("E", 6),
    "e7_c": lambda _: ("E", 7),
    "e8_c": lambda _: ("E", 8),
}


def _complex_name(family: str, params: tuple[int, ...]) -> str:
    if family == "sl_c":
        return f"sl({params[0]},C)"
    if family == "so_c":
        return f"so({params[0]},C)"
    if family == "sp_c":
        return f"sp({params[0]},C)"
    return family.split("_")[0] + "(C)"


@lru_cache(maxsize=None)
def build_form(family: str, params: tuple[int, ...]) -> RealFormDescriptor:
    """Construct (and validate) the descriptor for one real form."""
    family, params = canonicalize(family, params)

    if family == "su":
        p, q = params
        if p + q < 3 or q < 1:
            raise CatalogError(f"su({p},{q}) out of catalog range")
        models = ([("A", p - 1)] if p >= 2 else []) + ([("A", q - 1)] if q >= 2 else [])
        datum = _assemble(models, 1)
        rank = datum.dim
        parts_plus: dict[int, tuple] = {}
        idx = 0
        if p >= 2:
            parts_plus[idx] = _fund(p - 1, 0)
            idx += 1
        if q >= 2:
            parts_plus[idx] = _fund(q - 1, q - 2)
        hw_plus = _embed(models, parts_plus, (1,), rank)
        desc = RealFormDescriptor(
            name=f"su({p},{q})", family="su", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=1,
            p_module=_hermitian_pair(datum, hw_plus),
            dim_g=(p + q) ** 2 - 1, dim_k=p * p + q * q - 1,
            is_complex_as_real=False, has_min_rep=False,
            notes="type A: no Joseph ideal",
        )
    elif family == "sl_r":
        n = params[0]
        if n < 3:
            raise CatalogError(f"sl({n},R) out of catalog range")
        model = _so_model(n)
        datum = _assemble([model], 0)
        hw = _embed([model], {0: _so_sym2(n)}, (), datum.dim)
        desc = RealFormDescriptor(
            name=f"sl({n},R)", family="sl_r", params=params, k_datum=datum,
            component_models=(model,), center_rank=0,
            p_module=((None, hw),),
            dim_g=n * n - 1, dim_k=n * (n - 1) // 2,
            is_complex_as_real=False, has_min_rep=False,
            notes="type A: no Joseph ideal",
        )
    elif family == "su_star":
        n2 = params[0]
        n = n2 // 2
        if n2 % 2 or n < 2:
            raise CatalogError(f"su*({n2}) out of catalog range")
        models = [("C", n)]
        datum = _assemble(models, 0)
        hw = _embed(models, {0: _fund(n, 1)}, (), datum.dim)
        desc = RealFormDescriptor(
            name=f"su*({n2})", family="su_star", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=0,
            p_module=((None, hw),),
            dim_g=n2 * n2 - 1, dim_k=n * (2 * n + 1),
            is_complex_as_real=False, has_min_rep=False,
            notes="type A: no Joseph ideal",
        )
    elif family == "so":
        p, q = params
        if p + q < 5 or q < 1:
            raise CatalogError(f"so({p},{q}) out of catalog range")
        models = ([_so_model(p)] if p >= 3 else []) + ([_so_model(q)] if q >= 3 else [])
        center = (1 if p == 2 else 0) + (1 if q == 2 else 0)
        assert center <= 1
        datum = _assemble(models, center)
        parts: dict[int, tuple] = {}
        idx = 0
        if p >= 3:
            parts[idx] = _so_vector(p)
            idx += 1
        if q >= 3:
            parts[idx] = _so_vector(q)
        hw = _embed(models, parts, (1,) * center, datum.dim)
        p_mod = _hermitian_pair(datum, hw) if center else ((None, hw),)
        desc = RealFormDescriptor(
            name=f"so({p},{q})", family="so", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=center,
            p_module=p_mod,
            dim_g=(p + q) * (p + q - 1) // 2,
            dim_k=p * (p - 1) // 2 + q * (q - 1) // 2,
            is_complex_as_real=False, has_min_rep=_min_rep_so(p, q),
        )
    elif family == "so_star":
        n2 = params[0]
        n = n2 // 2
        models = [("A", n - 1)]
        datum = _assemble(models, 1)
        hw = _embed(models, {0: _fund(n - 1, 1)}, (1,), datum.dim)
        desc = RealFormDescriptor(
            name=f"so*({n2})", family="so_star", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=1,
            p_module=_hermitian_pair(datum, hw),
            dim_g=n * (2 * n - 1), dim_k=n * n,
            is_complex_as_real=False, has_min_rep=None,
            notes="minimal-representation existence not ruled here",
        )
    elif family == "sp_r":
        n = params[0]
        if n < 1:
            raise CatalogError("sp(n,R) needs n >= 1")
        models = [("A", n - 1)] if n >= 2 else []
        datum = _assemble(models, 1)
        parts = {0: _fund(n - 1, 0, 0)} if n >= 2 else {}
        hw = _embed(models, parts, (1,), datum.dim)
        if n == 1:
            mr: bool | None = False
            note = "sl(2,R): type A complexification"
        elif n % 2 == 0:
            mr, note = True, ""
        else:
            mr, note = None, "minimal-representation existence not ruled here"
        desc = RealFormDescriptor(
            name=f"sp({n},R)", family="sp_r", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=1,
            p_module=_hermitian_pair(datum, hw),
            dim_g=n * (2 * n + 1), dim_k=n * n,
            is_complex_as_real=False, has_min_rep=mr, notes=note,
        )
    elif family == "sp":
        p, q = params
        if q < 1:
            raise CatalogError(f"sp({p},{q}) out of catalog range")
        models = [("C", p), ("C", q)]
        datum = _assemble(models, 0)
        hw = _embed(models, {0: _fund(p, 0), 1: _fund(q, 0)}, (), datum.dim)
        desc = RealFormDescriptor(
            name=f"sp({p},{q})", family="sp", params=params, k_datum=datum,
            component_models=tuple(models), center_rank=0,
            p_module=((None, hw),),
            dim_g=(p + q) * (2 * (p + q) + 1),
            dim_k=p * (2 * p + 1) + q * (2 * q + 1),
            is_complex_as_real=False, has_min_rep=False,
            notes="no minimal representation (minimal complex orbit misses p)",
        )
    elif family in _COMPLEX_TYPES:
        model = _COMPLEX_TYPES[family](params[0] if params else 0)
        if family == "sl_c" and params[0] < 2:
            raise CatalogError("sl(n,C) needs n >= 2")
        if family == "sp_c" and params[0] < 2:
            raise CatalogError("sp(n,C) needs n >= 2 (sp(1,C) = sl(2,C))")
        datum = _assemble([model], 0)
        hw = datum.highest_root()
        dim_c = datum.rank + 2 * len(datum.positive_roots)
        desc = RealFormDescriptor(
            name=_complex_name(family, params), family=family, params=params,
            k_datum=datum, component_models=(model,), center_rank=0,
            p_module=((None, hw),),
            dim_g=2 * dim_c, dim_k=dim_c,
            is_complex_as_real=True, has_min_rep=None,
            notes="complex simple algebra viewed as a real algebra",
        )
    elif family in _EXCEPTIONAL:
        name, models, center, parts, (dim_g, dim_k), mr = _EXCEPTIONAL[family]
        datum = _assemble(models, center)
        hw = _embed(models, parts, (1,) * center, datum.dim)
        p_mod = _hermitian_pair(datum, hw) if center else ((None, hw),)
        desc = RealFormDescriptor(
            name=name, family=family, params=(), k_datum=datum,
            component_models=tuple(models), center_rank=center,
            p_module=p_mod, dim_g=dim_g, dim_k=dim_k,
            is_complex_as_real=False, has_min_rep=mr,
            notes="" if mr is not None else "minimal-representation existence not ruled here",
        )
    else:
        raise CatalogError(f"unknown family {family!r}")

    validate_form(desc)
    return desc


def _hermitian_pair(datum: RootDatum, hw_plus: Weight) -> tuple[tuple[str, Weight], ...]:
    """The two constituents of p for a Hermitian form: the minus side is the
    dual of the plus side with flipped central coordinate."""
    coords = list(hw_plus.coords)
    dual = [Fraction(0)] * len(coords)
    for i in range(datum.rank):
        dual[datum.nu[i]] = coords[i]
    for i in range(datum.rank, datum.dim):
        dual[i] = -coords[i]
    return (("+", hw_plus), ("-", Weight(tuple(dual))))


def validate_form(form: RealFormDescriptor) -> None:
    """Load-time invariants of one catalog entry."""
    datum = form.k_datum
    total = 0
    for _, hw in form.p_module:
        datum._require_dominant_integral(hw)
        total += datum.weyl_dimension(hw)
    if total != form.dim_g - form.dim_k:
        raise CatalogError(
            f"{form.name}: p-module dimension {total} != dim g - dim k = {form.dim_g - form.dim_k}"
        )
    if form.center_rank not in (0, 1):
        raise CatalogError(f"{form.name}: center rank must be 0 or 1")
    if form.center_rank == 1:
        labels = sorted(lab for lab, _ in form.p_module)
        if labels != ["+", "-"][::-1] and labels != ["+", "-"]:
            raise CatalogError(f"{form.name}: Hermitian form needs +/- constituents")
        plus = datum.weight_system(form.constituent("+"))
        minus = datum.weight_system(form.constituent("-"))
        if {(-w): m for w, m in plus.items()} != minus:
            raise CatalogError(f"{form.name}: minus constituent is not the negative of plus")
        for w in plus:
            if w.coords[-1] != 1:
                raise CatalogError(f"{form.name}: plus constituent must sit at central coordinate +1")
    else:
        if len(form.p_module) != 1 or form.p_module[0][0] is not None:
            raise CatalogError(f"{form.name}: non-Hermitian form needs one unlabeled constituent")
        ws = form.p_weights()
        if {(-w) for w in ws} != set(ws):
            raise CatalogError(f"{form.name}: p-weights are not symmetric under negation")
    if form.is_complex_as_real:
        roots = set(datum.positive_roots) | {-a for a in datum.positive_roots}
        ws = datum.weight_system(form.p_module[0][1])
        zero = Weight.zero(datum.dim)
        if set(ws) != roots | {zero} or ws[zero] != datum.rank:
            raise CatalogError(f"{form.name}: p-module of a complex form must be the adjoint module")


def beta(form: RealFormDescriptor, labeling: str | None = None,
         system: PositiveSystem | None = None) -> Weight:
    """Highest weight of the dual of the designated p-constituent.

    Non-Hermitian forms take no labeling; Hermitian forms require
    labeling "plus" or "minus".  The maximum is taken with respect to the
    given positive system (standard if omitted).
    """
    if form.hermitian:
        if labeling not in ("plus", "minus"):
            raise CatalogError(f"{form.name} is Hermitian: labeling 'plus' or 'minus' required")
        hw = form.constituent("+") if labeling == "plus" else form.constituent("-")
    else:
        if labeling is not None:
            raise CatalogError(f"{form.name} is not Hermitian: no labeling allowed")
        hw = form.p_module[0][1]
    if system is None:
        system = standard_positive_system(form.k_datum)
    weights = form.k_datum.weight_system(hw)
    dual = {-w: m for w, m in weights.items()}
    top = system.highest_weight_of(dual.keys())
    assert dual[top] == 1, "highest non-compact weight space must be one-dimensional"
    return top


_CASE1_SECOND_TABLE_GAP = "minimal complex orbit misses p"

_TYPE_M_VALUE = {
    "A": lambda n: n,
    "B": lambda n: 2 * n - 2,
    "C": lambda n: n,
    "D": lambda n: 2 * n - 3,
    "G": lambda n: 3,
    "F": lambda n: 8,
    "E": lambda n: {6: 11, 7: 17, 8: 29}[n],
}


def _complexified_type(form: RealFormDescriptor) -> tuple[str, int]:
    fam, par = form.family, form.params
    if fam == "su" or fam == "sl_r":
        n = par[0] + par[1] if fam == "su" else par[0]
        return ("A", n - 1)
    if fam == "su_star":
        return ("A", par[0] - 1)
    if fam == "so":
        n = par[0] + par[1]
        return ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
    if fam == "so_star":
        return ("D", par[0] // 2)
    if fam in ("sp_r", "sp"):
        return ("C", par[0] if fam == "sp_r" else par[0] + par[1])
    if fam in _COMPLEX_TYPES:
        return _COMPLEX_TYPES[fam](par[0] if par else 0)
    series = fam[0].upper()
    rank = int(fam[1]) if fam[1].isdigit() else 0
    return (series, rank)


def is_case1(form: RealFormDescriptor) -> bool:
    """Families whose minimal complex nilpotent orbit misses p entirely."""
    if form.family == "su_star":
        return True
    if form.family == "so" and min(form.params) == 1:
        return True
    if form.family == "sp":
        return True
    return form.family in ("f4_-20", "e6_-26")


def m_of_g(form: RealFormDescriptor) -> int:
    """Dimension of the minimal nontrivial K-orbit in the nilpotent cone of p*."""
    if is_case1(form):
        if form.family == "su_star":
            n = form.params[0] // 2
            return 4 * n - 4
        if form.family == "so":
            return form.params[0] + form.params[1] - 2
        if form.family == "sp":
            return 2 * (form.params[0] + form.params[1]) - 1
        if form.family == "f4_-20":
            return 11
        if form.family == "e6_-26":
            return 16
    series, rank = _complexified_type(form)
    value = _TYPE_M_VALUE[series](rank)
    return 2 * value if form.is_complex_as_real else value


ORBIT_NO_INTERSECTION = "NoIntersection"
ORBIT_UNIQUE_MINIMAL = "UniqueMinimal"
ORBIT_TWO_MINIMAL = "TwoMinimal"


def orbit_case(form: RealFormDescriptor) -> str:
    """Trichotomy for the intersection of the minimal complex nilpotent orbit
    with p*; stated only for forms without complex structure."""
    if form.is_complex_as_real:
        raise CatalogError(f"{form.name}: trichotomy requires the complexification to be simple")
    if form.hermitian:
        return ORBIT_TWO_MINIMAL
    if is_case1(form):
        return ORBIT_NO_INTERSECTION
    return ORBIT_UNIQUE_MINIMAL


def has_minimal_representation(form: RealFormDescriptor) -> bool | None:
    """Stored/ruled existence flag; None means no stored ruling."""
    if form.is_complex_as_real:
        raise CatalogError(f"{form.name}: minimal representations are defined for forms without complex structure")
    flag = form.has_min_rep
    if flag is True and not form.hermitian and is_case1(form):
        raise CatalogError(f"{form.name}: case-1 form cannot have a minimal representation")
    return flag


# -- name handling -----------------------------------------------------------

_FAMILY_BY_PREFIX = {
    "g2": "g2", "f4": "f4", "e6": "e6", "e7": "e7", "e8": "e8",
}


def parse_form_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Parse canonical spellings like su(2,3), su*(6), sl(4,R), so(5,C), e7(-5)."""
    text = text.strip()
    if "(" not in text or not text.endswith(")"):
        raise CatalogError(f"cannot parse real-form name {text!r}")
    head, args = text[:-1].split("(", 1)
    head = head.strip()
    parts = [a.strip() for a in args.split(",")]
    if head in ("g2", "f4", "e6", "e7", "e8"):
        if parts == ["C"]:
            return (f"{head}_c", ())
        return (f"{head}_{parts[0]}", ())
    if head == "su*":
        return ("su_star", (int(parts[0]),))
    if head == "so*":
        return ("so_star", (int(parts[0]),))
    if head == "su":
        return ("su", (int(parts[0]), int(parts[1])))
    if head == "sl":
        if parts[1] == "R":
            return ("sl_r", (int(parts[0]),))
        if parts[1] == "C":
            return ("sl_c", (int(parts[0]),))
    if head == "so":
        if parts[-1] == "C":
            return ("so_c", (int(parts[0]),))
        return ("so", (int(parts[0]), int(parts[1])))
    if head == "sp":
        if parts[-1] == "R":
            return ("sp_r", (int(parts[0]),))
        if parts[-1] == "C":
            return ("sp_c", (int(parts[0]),))
        return ("sp", (int(parts[0]), int(parts[1])))
    raise CatalogError(f"cannot parse real-form name {text!r}")


def form_by_name(text: str) -> RealFormDescriptor:
    family, params = parse_form_name(text)
    return build_form(family, params)


def canonical_form_name(text: str) -> str:
    """Canonical spelling of a real-form name (resolving isomorphisms)."""
    try:
        family, params = parse_form_name(text)
        family, params = canonicalize(family, params)
    except CatalogError:
        return text
    probe = {
        "su": lambda p: f"su({p[0]},{p[1]})",
        "sl_r": lambda p: f"sl({p[0]},R)",
        "su_star": lambda p: f"su*({p[0]})",
        "so": lambda p: f"so({p[0]},{p[1]})",
        "so_star": lambda p: f"so*({p[0]})",
        "sp_r": lambda p: f"sp({p[0]},R)",
        "sp": lambda p: f"sp({p[0]},{p[1]})",
    }
    if family in probe:
        return probe[family](params)
    if family in _COMPLEX_TYPES:
        return _complex_name(family, params)
    if family in _EXCEPTIONAL:
        return _EXCEPTIONAL[family][0]
    return text

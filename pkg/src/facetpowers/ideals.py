"""Square-free monomial ideals as antichains of supports.

A square-free monomial is identified with its support, a VertexSet over the
ambient variable table; the unit monomial has empty support.  Generating sets
are always kept inclusion-minimal.  The unit ideal is represented by the
single empty support, the zero ideal by no generators at all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, VertexSet, _subcomplex_by_masks, closed_neighborhood
from .errors import AmbientMismatchError, InvalidComplexError, NotALeafError
from .grafting import _matching_number_masks, is_cm_forest
from .leaves import is_leaf


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal distinct masks (minimal generating set semantics)."""
    uniq = sorted(set(masks), key=int.bit_count)
    out: list[int] = []
    for m in uniq:
        if not any(kept & ~m == 0 for kept in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: tuple[str, ...]
    gens: tuple[VertexSet, ...]

    @classmethod
    def from_masks(cls, ambient: Sequence[str], masks: Iterable[int]) -> "MonomialIdeal":
        table = tuple(ambient)
        kept = _minimal_masks(masks)
        gens = tuple(
            sorted((VertexSet(table, m) for m in kept), key=VertexSet.sort_key)
        )
        return cls(table, gens)

    @classmethod
    def from_supports(
        cls, ambient: Sequence[str], supports: Iterable[Iterable[str]]
    ) -> "MonomialIdeal":
        table = tuple(ambient)
        if len(set(table)) != len(table):
            raise InvalidComplexError("duplicate variable name")
        return cls.from_masks(table, (VertexSet.of(table, s).mask for s in supports))

    @classmethod
    def zero(cls, ambient: Sequence[str]) -> "MonomialIdeal":
        return cls(tuple(ambient), ())

    @classmethod
    def unit(cls, ambient: Sequence[str]) -> "MonomialIdeal":
        table = tuple(ambient)
        return cls(table, (VertexSet(table, 0),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].mask == 0

    @property
    def gen_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    def monomial(self, names: Iterable[str]) -> VertexSet:
        return VertexSet.of(self.ambient, names)

    def support(self) -> VertexSet:
        mask = 0
        for g in self.gens:
            mask |= g.mask
        return VertexSet(self.ambient, mask)

    def with_ambient(self, ambient: Sequence[str]) -> "MonomialIdeal":
        """Re-express the ideal in a (usually larger) variable table by name."""
        table = tuple(ambient)
        index = {v: i for i, v in enumerate(table)}
        masks = []
        for g in self.gens:
            try:
                masks.append(sum(1 << index[v] for v in g.names))
            except KeyError as exc:
                raise AmbientMismatchError(
                    f"variable {exc.args[0]!r} missing from the target ambient"
                ) from exc
        return MonomialIdeal.from_masks(table, masks)

    def __repr__(self) -> str:
        if self.is_zero:
            return "<0>"
        if self.is_unit:
            return "<1>"
        return "<" + ", ".join("".join(g.names) for g in self.gens) + ">"

    def to_json(self) -> dict:
        return {
            "variables": list(self.ambient),
            "generators": [list(g.names) for g in self.gens],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def ideal_from_json(data: dict | str) -> MonomialIdeal:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        variables = data["variables"]
        generators = data["generators"]
    except (TypeError, KeyError) as exc:
        raise InvalidComplexError(
            "ideal JSON needs 'variables' and 'generators'"
        ) from exc
    return MonomialIdeal.from_supports(variables, generators)


def facet_ideal(dcx: SimplicialComplex) -> MonomialIdeal:
    """One generator per facet; the empty complex gives the zero ideal and
    the complex containing only the empty face gives the unit ideal."""
    return MonomialIdeal.from_masks(dcx.labels, dcx.facet_masks)


def support_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose facets are the generator supports."""
    if ideal.is_zero or ideal.is_unit:
        raise InvalidComplexError("zero/unit ideal has no support complex")
    return SimplicialComplex._from_masks(ideal.ambient, ideal.gen_masks)


def squarefree_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Generators are the unions over k pairwise disjoint generators
    (k-matchings of the support hypergraph), minimalized; zero beyond the
    matching number."""
    if k < 1:
        raise ValueError("square-free power needs k >= 1")
    if ideal.is_unit:
        return MonomialIdeal.unit(ideal.ambient)
    masks = ideal.gen_masks
    found: list[int] = []

    def walk(start: int, used: int, depth: int) -> None:
        if depth == k:
            found.append(used)
            return
        for i in range(start, len(masks)):
            if len(masks) - i < k - depth:
                break
            if masks[i] & used == 0:
                walk(i + 1, used | masks[i], depth + 1)

    walk(0, 0, 0)
    return MonomialIdeal.from_masks(ideal.ambient, found)


def squarefree_power_by_products(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Cross-check route: expand k-fold generator products, keep the
    square-free ones, minimalize.  A product with a repeated generator is
    never square-free, so distinct k-subsets suffice."""
    if k < 1:
        raise ValueError("square-free power needs k >= 1")
    if ideal.is_unit:
        return MonomialIdeal.unit(ideal.ambient)
    found = []
    for combo in combinations(ideal.gen_masks, k):
        union = 0
        degree = 0
        for m in combo:
            union |= m
            degree += m.bit_count()
        if union.bit_count() == degree:
            found.append(union)
    return MonomialIdeal.from_masks(ideal.ambient, found)


def colon(ideal: MonomialIdeal, mono: VertexSet) -> MonomialIdeal:
    """Monomial colon: divide each generator by its gcd with `mono`."""
    if mono.labels != ideal.ambient:
        raise AmbientMismatchError("monomial over a different variable table")
    return MonomialIdeal.from_masks(
        ideal.ambient, (g.mask & ~mono.mask for g in ideal.gens)
    )


def add_principal(ideal: MonomialIdeal, mono: VertexSet) -> MonomialIdeal:
    if mono.labels != ideal.ambient:
        raise AmbientMismatchError("monomial over a different variable table")
    return MonomialIdeal.from_masks(ideal.ambient, (*ideal.gen_masks, mono.mask))


def ideal_equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    if a.ambient != b.ambient:
        raise AmbientMismatchError("ideals over different variable tables")
    return a.gen_masks == b.gen_masks


def support_matching_number(ideal: MonomialIdeal) -> int:
    """Largest k with a nonzero k-th square-free power."""
    if ideal.is_zero or ideal.is_unit:
        return 0
    return _matching_number_masks(ideal.gen_masks)


@dataclass(frozen=True)
class DegreeProfile:
    """Minimum generator degree of each nonzero square-free power."""

    degrees: dict[int, int]

    def __post_init__(self) -> None:
        ks = sorted(self.degrees)
        for a, b in zip(ks, ks[1:]):
            if self.degrees[b] <= self.degrees[a]:
                raise AssertionError("minimum degrees must strictly increase")


def min_degree_profile(ideal: MonomialIdeal) -> DegreeProfile:
    nu = support_matching_number(ideal)
    degrees = {}
    for k in range(1, nu + 1):
        power = squarefree_power(ideal, k)
        degrees[k] = min(len(g) for g in power.gens)
    return DegreeProfile(degrees)


@dataclass(frozen=True)
class ColonIdentityResult:
    """Both sides of the colon-by-a-leaf identity, plus the derived complex."""

    holds: bool
    colon_side: MonomialIdeal
    reduced_side: MonomialIdeal
    derived: SimplicialComplex
    derived_cm: bool


def verify_colon_identity(
    dcx: SimplicialComplex, facet: VertexSet, k: int
) -> ColonIdentityResult:
    """Check that coloning the k-th square-free power by a leaf monomial
    equals the (k-1)-st power of the complex left after deleting the leaf's
    closed neighborhood, and that the latter complex stays a Cohen-Macaulay
    forest.  The 0-th power is the unit ideal by convention.
    """
    if not is_cm_forest(dcx):
        raise ValueError("complex must be a Cohen-Macaulay forest")
    facet = dcx.require_facet(facet)
    if is_leaf(dcx, facet) is None:
        raise NotALeafError(f"{facet!r} is not a leaf")
    nu = _matching_number_masks(dcx.facet_masks)
    if not 1 <= k <= nu:
        raise ValueError(f"k must lie in 1..{nu}")
    lhs = colon(squarefree_power(facet_ideal(dcx), k), facet)
    removed = {g.mask for g in closed_neighborhood(dcx, facet)}
    derived = _subcomplex_by_masks(
        dcx, [m for m in dcx.facet_masks if m not in removed]
    )
    if k == 1:
        rhs = MonomialIdeal.unit(dcx.labels)
    elif derived.is_empty:
        rhs = MonomialIdeal.zero(dcx.labels)
    else:
        rhs = squarefree_power(facet_ideal(derived), k - 1).with_ambient(dcx.labels)
    derived_cm = is_cm_forest(derived)
    return ColonIdentityResult(
        holds=ideal_equal(lhs, rhs) and derived_cm,
        colon_side=lhs,
        reduced_side=rhs,
        derived=derived,
        derived_cm=derived_cm,
    )

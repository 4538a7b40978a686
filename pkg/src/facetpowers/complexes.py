"""Simplicial complexes represented by their facet antichain.

Vertices are string labels in I/O and ascending integer indices internally;
a vertex subset is a bitmask over the complex's label table.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatchError, InvalidComplexError, NotAFacetError

MAX_VERTICES = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of a shared vertex label table, stored as a bitmask.

    Iteration is in ascending index order. Two VertexSets compare equal iff
    they share the same label table and the same members.
    """

    labels: tuple[str, ...]
    mask: int

    @classmethod
    def of(cls, labels: Sequence[str], names: Iterable[str]) -> "VertexSet":
        table = tuple(labels)
        index = {v: i for i, v in enumerate(table)}
        mask = 0
        for name in names:
            if name not in index:
                raise InvalidComplexError(f"unknown vertex label {name!r}")
            mask |= 1 << index[name]
        return cls(table, mask)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in _bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, item: int | str) -> bool:
        if isinstance(item, str):
            try:
                item = self.labels.index(item)
            except ValueError:
                return False
        return bool(self.mask >> item & 1)

    def _check(self, other: "VertexSet") -> None:
        if self.labels != other.labels:
            raise AmbientMismatchError("vertex sets live over different label tables")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.labels, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.labels, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.labels, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.indices)

    def __repr__(self) -> str:
        return "{" + ",".join(self.names) + "}"


# A face is a vertex set contained in some facet of a host complex; the host
# operations validate membership where it matters.
Face = VertexSet


def _is_antichain(masks: Sequence[int]) -> bool:
    return all(
        not (a & ~b == 0 or b & ~a == 0)
        for i, a in enumerate(masks)
        for b in masks[i + 1 :]
    )


def _maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements, deduplicated."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    out: list[int] = []
    for m in uniq:
        if not any(m & ~kept == 0 for kept in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A facet antichain over a vertex label table.

    The facet tuple is canonically sorted (size, then lexicographic on index
    tuples) and the label table carries no phantom vertices, except for the
    two degenerate states: the empty complex (no facets, zero ideal) and the
    complex containing only the empty face (one empty facet, unit ideal),
    which contraction can produce.
    """

    labels: tuple[str, ...]
    facets: tuple[VertexSet, ...]

    @classmethod
    def _from_masks(
        cls, labels: Sequence[str], masks: Iterable[int], *, prune: bool = True
    ) -> "SimplicialComplex":
        table = tuple(labels)
        kept = _maximal(masks)
        if prune:
            used = 0
            for m in kept:
                used |= m
            if used != (1 << len(table)) - 1:
                old = [i for i in range(len(table)) if used >> i & 1]
                remap = {o: n for n, o in enumerate(old)}
                table = tuple(table[o] for o in old)
                kept = [
                    sum(1 << remap[b] for b in _bits(m)) for m in kept
                ]
        facets = tuple(
            sorted((VertexSet(table, m) for m in kept), key=VertexSet.sort_key)
        )
        return cls(table, facets)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.facets)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def is_empty(self) -> bool:
        """No faces at all; its facet ideal is the zero ideal."""
        return not self.facets

    @property
    def is_void(self) -> bool:
        """Only the empty face; its facet ideal is the unit ideal."""
        return len(self.facets) == 1 and self.facets[0].mask == 0

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        return VertexSet.of(self.labels, names)

    def universe(self) -> VertexSet:
        mask = 0
        for f in self.facets:
            mask |= f.mask
        return VertexSet(self.labels, mask)

    def facet(self, names: Iterable[str]) -> VertexSet:
        """Look up a facet by vertex names; raises if it is not a facet."""
        v = self.vertex_set(names)
        if v.mask not in self.facet_masks:
            raise NotAFacetError(f"{v!r} is not a facet")
        return v

    def require_facet(self, face: VertexSet) -> VertexSet:
        if face.labels != self.labels:
            raise AmbientMismatchError("face belongs to a different label table")
        if face.mask not in self.facet_masks:
            raise NotAFacetError(f"{face!r} is not a facet")
        return face

    def contains_face(self, face: VertexSet) -> bool:
        if face.labels != self.labels:
            raise AmbientMismatchError("face belongs to a different label table")
        return any(face.mask & ~f.mask == 0 for f in self.facets)

    def __repr__(self) -> str:
        return "<" + ", ".join(repr(f) for f in self.facets) + ">"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.labels),
            "facets": [list(f.names) for f in self.facets],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def build_complex(
    labels: Sequence[str], facet_lists: Iterable[Iterable[str]]
) -> SimplicialComplex:
    """Build a complex from generating faces, discarding non-maximal ones.

    Unused labels are pruned so that the vertex universe is exactly the union
    of the facets.
    """
    table = tuple(labels)
    if len(set(table)) != len(table):
        raise InvalidComplexError("duplicate vertex label")
    if len(table) > MAX_VERTICES:
        raise InvalidComplexError(f"vertex universe capped at {MAX_VERTICES}")
    masks = []
    got_any = False
    for faces in facet_lists:
        got_any = True
        v = VertexSet.of(table, faces)
        if not v:
            raise InvalidComplexError("empty facet")
        masks.append(v.mask)
    if not got_any:
        raise InvalidComplexError("empty facet list")
    return SimplicialComplex._from_masks(table, masks)


def complex_from_json(data: dict | str) -> SimplicialComplex:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        vertices = data["vertices"]
        facets = data["facets"]
    except (TypeError, KeyError) as exc:
        raise InvalidComplexError("complex JSON needs 'vertices' and 'facets'") from exc
    return build_complex(vertices, facets)


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex((), ())


def void_complex() -> SimplicialComplex:
    return SimplicialComplex((), (VertexSet((), 0),))


def neighbors(dcx: SimplicialComplex, facet: VertexSet) -> tuple[VertexSet, ...]:
    """Facets other than `facet` that intersect it."""
    facet = dcx.require_facet(facet)
    return tuple(
        g for g in dcx.facets if g.mask != facet.mask and g.mask & facet.mask
    )

def closed_neighborhood(dcx: SimplicialComplex, facet: VertexSet) -> tuple[VertexSet, ...]:
    facet = dcx.require_facet(facet)
    return tuple(
        g for g in dcx.facets if g.mask == facet.mask or g.mask & facet.mask
    )


def free_vertices(dcx: SimplicialComplex, facet: VertexSet) -> VertexSet:
    """Vertices of `facet` lying in no other facet."""
    facet = dcx.require_facet(facet)
    others = 0
    for g in dcx.facets:
        if g.mask != facet.mask:
            others |= g.mask
    return VertexSet(dcx.labels, facet.mask & ~others)


def subcomplex(dcx: SimplicialComplex, facets: Iterable[VertexSet]) -> SimplicialComplex:
    """The complex generated by a nonempty subset of the facets."""
    chosen = {dcx.require_facet(f).mask for f in facets}
    if not chosen:
        raise InvalidComplexError("subcomplex needs a nonempty facet subset")
    return SimplicialComplex._from_masks(dcx.labels, chosen)


def _subcomplex_by_masks(dcx: SimplicialComplex, masks: Iterable[int]) -> SimplicialComplex:
    """Internal: subcomplex from facet masks; empty mask set gives the empty complex."""
    return SimplicialComplex._from_masks(dcx.labels, masks)


def contraction(dcx: SimplicialComplex, vanish: VertexSet) -> SimplicialComplex:
    """Contract on a vertex subset: keep differences F minus A that contain no
    other difference.

    If some facet lies inside `vanish`, every other difference contains the
    empty difference, so the result is the complex containing only the empty
    face (unit facet ideal).
    """
    if vanish.labels != dcx.labels:
        raise AmbientMismatchError("contraction set over a different label table")
    diffs = [f.mask & ~vanish.mask for f in dcx.facets]
    if not diffs:
        return empty_complex()
    if any(d == 0 for d in diffs):
        return void_complex()
    # A difference is a facet iff it contains no other (distinct) difference,
    # i.e. the inclusion-minimal distinct differences survive.
    uniq = set(diffs)
    kept = [d for d in uniq if not any(e != d and e & ~d == 0 for e in uniq)]
    return SimplicialComplex._from_masks(dcx.labels, kept)


def restriction(dcx: SimplicialComplex, keep: VertexSet) -> SimplicialComplex:
    """All faces contained in `keep`, returned as a facet antichain."""
    if keep.labels != dcx.labels:
        raise AmbientMismatchError("restriction set over a different label table")
    cut = [f.mask & keep.mask for f in dcx.facets]
    if not cut:
        return empty_complex()
    if all(c == 0 for c in cut):
        return void_complex()
    return SimplicialComplex._from_masks(dcx.labels, cut)


def connected_components(dcx: SimplicialComplex) -> tuple[SimplicialComplex, ...]:
    """Partition the facets by the transitive closure of pairwise intersection."""
    masks = list(dcx.facet_masks)
    parent = list(range(len(masks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        groups.setdefault(find(i), []).append(m)
    comps = [
        SimplicialComplex._from_masks(dcx.labels, group) for group in groups.values()
    ]
    comps.sort(key=lambda c: min(f.sort_key() for f in c.facets))
    return tuple(comps)


def enumerate_faces(dcx: SimplicialComplex, dim: int) -> tuple[VertexSet, ...]:
    """All faces of the given dimension (dim = |face| - 1), canonical order."""
    found: set[int] = set()
    for f in dcx.facets:
        idx = f.indices
        if len(idx) >= dim + 1:
            for combo in combinations(idx, dim + 1):
                found.add(sum(1 << b for b in combo))
    return tuple(
        sorted((VertexSet(dcx.labels, m) for m in found), key=VertexSet.sort_key)
    )

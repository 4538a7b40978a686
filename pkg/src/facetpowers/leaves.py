"""Leaf, good-leaf and special-leaf detection; forest recognition.

A facet F is a leaf when some other facet G (a joint) satisfies
F&G >= F&H for every facet H != F, or F is the only facet.  A good leaf is a
leaf of every subcomplex containing it; equivalently its neighbor
intersections form a chain under inclusion.  A special leaf F demands that
any two other facets meeting each other also meet outside F.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .complexes import Face, SimplicialComplex, VertexSet, neighbors
from .errors import BudgetExceededError, InvalidCertificateError, NotALeafError

if TYPE_CHECKING:
    from .grafting import GraftingCertificate

BRUTE_FACET_CAP = 20


@dataclass(frozen=True)
class LeafWitness:
    leaf: Face
    joints: tuple[Face, ...]


@dataclass(frozen=True)
class GoodLeafChain:
    """Neighbors of a good leaf ordered by weakly decreasing intersection."""

    leaf: Face
    ordered_neighbors: tuple[Face, ...]


@dataclass(frozen=True)
class GoodLeafOrder:
    """An elimination order witnessing forestness: each entry is a good leaf
    of the complex spanned by it and the later entries."""

    order: tuple[Face, ...]


def is_leaf(dcx: SimplicialComplex, facet: Face) -> LeafWitness | None:
    facet = dcx.require_facet(facet)
    others = [g for g in dcx.facets if g.mask != facet.mask]
    if not others:
        return LeafWitness(facet, ())
    inters = [facet.mask & g.mask for g in others]
    joints = tuple(
        g for g, gi in zip(others, inters) if all(hi & ~gi == 0 for hi in inters)
    )
    if not joints:
        return None
    return LeafWitness(facet, joints)


def is_good_leaf(dcx: SimplicialComplex, facet: Face) -> GoodLeafChain | None:
    """Chain criterion: the intersections with the neighbors must be totally
    ordered by inclusion."""
    facet = dcx.require_facet(facet)
    nbrs = sorted(
        neighbors(dcx, facet),
        key=lambda g: (-(facet.mask & g.mask).bit_count(), g.sort_key()),
    )
    prev = None
    for g in nbrs:
        cur = facet.mask & g.mask
        if prev is not None and cur & ~prev:
            return None
        prev = cur
    return GoodLeafChain(facet, tuple(nbrs))


def is_special_leaf(dcx: SimplicialComplex, facet: Face) -> bool:
    """True iff all other facets H, H' satisfy: H meets H' => they meet
    outside `facet`.  Raises NotALeafError when `facet` is not a leaf."""
    facet = dcx.require_facet(facet)
    if is_leaf(dcx, facet) is None:
        raise NotALeafError(f"{facet!r} is not a leaf")
    rest = [g.mask for g in dcx.facets if g.mask != facet.mask]
    for a, b in combinations(rest, 2):
        common = a & b
        if common and common & ~facet.mask == 0:
            return False
    return True


def special_leaves(dcx: SimplicialComplex) -> tuple[Face, ...]:
    out = []
    for f in dcx.facets:
        if is_leaf(dcx, f) is not None and is_special_leaf(dcx, f):
            out.append(f)
    return tuple(out)


def _leaf_at(masks: list[int], idx: int) -> bool:
    """Definition replay of the leaf condition inside a facet-mask list."""
    if len(masks) == 1:
        return True
    f = masks[idx]
    inters = [f & m for j, m in enumerate(masks) if j != idx]
    return any(all(h & ~g == 0 for h in inters) for g in inters)


def _good_leaf_at(masks: list[int], idx: int) -> bool:
    """Chain criterion inside a facet-mask list."""
    f = masks[idx]
    inters = sorted(
        (f & m for j, m in enumerate(masks) if j != idx and f & m),
        key=lambda m: -m.bit_count(),
    )
    return all(b & ~a == 0 for a, b in zip(inters, inters[1:]))


def is_forest(dcx: SimplicialComplex) -> GoodLeafOrder | None:
    """Greedy good-leaf elimination.

    Removing a good leaf of a forest leaves a forest, and every forest has a
    good leaf, so the greedy order empties the facet list exactly on forests.
    Works componentwise for free; the empty complex is a forest with the
    empty order.
    """
    remaining = list(dcx.facet_masks)
    order: list[Face] = []
    while remaining:
        pick = None
        for i in range(len(remaining)):
            if _good_leaf_at(remaining, i):
                pick = i
                break
        if pick is None:
            return None
        order.append(VertexSet(dcx.labels, remaining.pop(pick)))
    return GoodLeafOrder(tuple(order))


def is_leaf_brute(dcx: SimplicialComplex, facet: Face) -> bool:
    """Leaf condition replayed without the witness machinery."""
    facet = dcx.require_facet(facet)
    masks = list(dcx.facet_masks)
    return _leaf_at(masks, masks.index(facet.mask))


def is_good_leaf_brute(dcx: SimplicialComplex, facet: Face) -> bool:
    """Quantify over all subcomplexes containing the facet (2^(m-1) scans)."""
    facet = dcx.require_facet(facet)
    masks = list(dcx.facet_masks)
    if len(masks) > BRUTE_FACET_CAP:
        raise BudgetExceededError(f"brute scan capped at {BRUTE_FACET_CAP} facets")
    others = [m for m in masks if m != facet.mask]
    for r in range(len(others) + 1):
        for combo in combinations(others, r):
            if not _leaf_at([facet.mask, *combo], 0):
                return False
    return True


def is_forest_brute(dcx: SimplicialComplex) -> bool:
    """Every nonempty facet subset must span a complex with a leaf."""
    masks = list(dcx.facet_masks)
    if len(masks) > BRUTE_FACET_CAP:
        raise BudgetExceededError(f"brute scan capped at {BRUTE_FACET_CAP} facets")
    for r in range(1, len(masks) + 1):
        for combo in combinations(masks, r):
            subset = list(combo)
            if not any(_leaf_at(subset, i) for i in range(len(subset))):
                return False
    return True


def find_special_leaf_grafted(
    dcx: SimplicialComplex, cert: "GraftingCertificate"
) -> Face:
    """Constructive special-leaf search in a grafted complex.

    Pick a good leaf G1 of the base, take the minimum of its neighborhood
    chain, and return the first grafted leaf meeting G1 that does not contain
    that minimum (ties break on canonical facet order; at most one leaf can
    contain it, so a candidate always exists).  The result is checked against
    the definitional special-leaf test before returning.
    """
    from .grafting import check_certificate

    check_certificate(dcx, cert)
    leaves = cert.grafted_leaves
    base = [b.mask for b in cert.base_facets]
    if not base:
        result = leaves[0]
        if not is_special_leaf(dcx, result):
            raise InvalidCertificateError(
                "baseless grafted complex with a non-special leaf"
            )
        return result
    g1 = None
    for i in range(len(base)):
        if _good_leaf_at(base, i):
            g1 = base[i]
            break
    if g1 is None:
        raise InvalidCertificateError("grafted base has no good leaf; not a forest")
    chain = sorted((g1 & m for m in base if m != g1 and g1 & m), key=int.bit_count)
    floor = chain[0] if chain else 0
    for f in leaves:
        if f.mask & g1 and (floor == 0 or floor & ~f.mask):
            if not is_special_leaf(dcx, f):
                raise InvalidCertificateError(
                    f"constructive search produced a non-special leaf {f!r}"
                )
            return f
    raise InvalidCertificateError("no grafted leaf avoids the chain minimum")

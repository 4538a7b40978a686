"""Grafted structure detection, the combinatorial Cohen-Macaulay test for
forests, and facet matchings.

A complex is grafted when its leaves are pairwise disjoint, cover every
vertex of the non-leaf (base) facets, and removing any base facet leaves a
grafted complex again.  For simplicial trees, grafted is equivalent to the
facet ideal being Cohen-Macaulay, which makes the test here the combinatorial
authority that the homology engine is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import Face, SimplicialComplex, VertexSet, connected_components
from .errors import InvalidCertificateError
from .leaves import _leaf_at, is_forest


@dataclass(frozen=True)
class GraftingCertificate:
    """The forced leaf/base partition with per-condition evidence.

    The partition is forced because the leaf side must be exactly the set of
    all leaves, so certificates are canonical and permutation-stable.
    """

    grafted_leaves: tuple[Face, ...]
    base_facets: tuple[Face, ...]
    condition_log: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint facets."""

    facets: tuple[Face, ...]

    def __post_init__(self) -> None:
        union = 0
        total = 0
        for f in self.facets:
            union |= f.mask
            total += f.mask.bit_count()
        if union.bit_count() != total:
            raise InvalidCertificateError("matching facets are not pairwise disjoint")

    def __len__(self) -> int:
        return len(self.facets)


def _split_leaves(masks: Sequence[int]) -> tuple[list[int], list[int]]:
    lst = list(masks)
    leaves = [m for i, m in enumerate(lst) if _leaf_at(lst, i)]
    base = [m for m in lst if m not in leaves]
    return leaves, base


def _grafted_masks(masks: frozenset[int], memo: dict[frozenset[int], bool]) -> bool:
    if masks in memo:
        return memo[masks]
    lst = sorted(masks)
    leaves, base = _split_leaves(lst)
    leaf_union = 0
    ok = bool(leaves) or not lst
    for m in leaves:
        if m & leaf_union:
            ok = False
            break
        leaf_union |= m
    if ok:
        ok = all(g & ~leaf_union == 0 for g in base)
    if ok:
        ok = all(_grafted_masks(masks - {g}, memo) for g in base)
    memo[masks] = ok
    return ok


def is_grafted(dcx: SimplicialComplex) -> GraftingCertificate | None:
    """Decide grafted structure; the candidate partition is forced.

    Recursion over base-facet removals is memoized on the facet subset.
    """
    masks = list(dcx.facet_masks)
    leaves_m, base_m = _split_leaves(masks)
    leaf_union = 0
    disjoint = True
    for m in leaves_m:
        if m & leaf_union:
            disjoint = False
        leaf_union |= m
    covered = all(g & ~leaf_union == 0 for g in base_m)
    has_leaves = bool(leaves_m) or not masks
    memo: dict[frozenset[int], bool] = {}
    removals_ok = disjoint and covered and all(
        _grafted_masks(frozenset(masks) - {g}, memo) for g in base_m
    )
    log = (
        ("leaves_exist", has_leaves),
        ("leaves_pairwise_disjoint", disjoint),
        ("base_vertices_covered_by_leaves", covered),
        ("base_removals_grafted", removals_ok),
    )
    if not (has_leaves and disjoint and covered and removals_ok):
        return None
    by_mask = {f.mask: f for f in dcx.facets}
    return GraftingCertificate(
        grafted_leaves=tuple(sorted((by_mask[m] for m in leaves_m), key=VertexSet.sort_key)),
        base_facets=tuple(sorted((by_mask[m] for m in base_m), key=VertexSet.sort_key)),
        condition_log=log,
    )


def check_certificate(dcx: SimplicialComplex, cert: GraftingCertificate) -> None:
    """Raise unless `cert` is exactly the certificate this complex forces."""
    fresh = is_grafted(dcx)
    if fresh is None:
        raise InvalidCertificateError("complex is not grafted")
    if (
        {f.mask for f in fresh.grafted_leaves} != {f.mask for f in cert.grafted_leaves}
        or {f.mask for f in fresh.base_facets} != {f.mask for f in cert.base_facets}
    ):
        raise InvalidCertificateError("certificate partition does not match the complex")


def is_cm_forest(dcx: SimplicialComplex) -> bool:
    """Forest whose every connected component is grafted.

    Returns False (not an error) on non-forests; the homology engine is the
    authority outside the forest world.  The empty complex counts as a
    Cohen-Macaulay forest.
    """
    if dcx.is_empty:
        return True
    if is_forest(dcx) is None:
        return False
    return all(is_grafted(comp) is not None for comp in connected_components(dcx))


def matchings(dcx: SimplicialComplex, k: int) -> tuple[Matching, ...]:
    """All k-subsets of pairwise disjoint facets, in canonical order."""
    if k < 1:
        raise ValueError("matching size must be at least 1")
    masks = dcx.facet_masks
    out: list[Matching] = []
    chosen: list[int] = []

    def walk(start: int, used: int) -> None:
        if len(chosen) == k:
            out.append(Matching(tuple(dcx.facets[i] for i in chosen)))
            return
        for i in range(start, len(masks)):
            if len(masks) - i < k - len(chosen):
                break
            if masks[i] & used == 0:
                chosen.append(i)
                walk(i + 1, used | masks[i])
                chosen.pop()

    walk(0, 0)
    return tuple(out)


def _matching_number_masks(masks: Sequence[int]) -> int:
    """Maximum size of a pairwise disjoint subset, by branch and bound."""
    order = sorted(masks, key=int.bit_count)
    best = 0

    def walk(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (len(order) - i) <= best:
            return
        for j in range(i, len(order)):
            if order[j] & used == 0:
                walk(j + 1, used | order[j], size + 1)

    walk(0, 0, 0)
    return best


def matching_number(dcx: SimplicialComplex) -> int:
    return _matching_number_masks(dcx.facet_masks)

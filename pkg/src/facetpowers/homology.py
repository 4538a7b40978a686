"""Exact homological invariants of square-free monomial quotients.

Krull dimension comes from minimal vertex covers (minimal primes), depth from
projective dimension via the reduced homology of vertex-restricted
Stanley-Reisner complexes, computed exactly over the rationals (integer
sparse elimination) or over a prime field (modular elimination).

Two soundness devices keep the enumeration tractable and are validated by a
full-enumeration spot check:

* only multidegrees that are unions of generator supports are visited; for
  any other subset the restriction is a cone (a vertex not covered by any
  generator inside the subset is an apex), hence acyclic;
* each restriction is shrunk by homotopy-preserving dominated-vertex folds
  before boundary matrices are assembled.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .complexes import SimplicialComplex, VertexSet, _bits, _maximal, contraction
from .errors import (
    BudgetExceededError,
    DegenerateIdealError,
    FacetPowersError,
    NotALeafError,
)
from .grafting import is_cm_forest, matching_number
from .ideals import (
    MonomialIdeal,
    _minimal_masks,
    add_principal,
    colon,
    facet_ideal,
    ideal_equal,
    min_degree_profile,
    squarefree_power,
    support_matching_number,
)
from .leaves import is_leaf, special_leaves

DEFAULT_MAX_VERTICES = 20
MAX_FACES = 1 << 17
ENV_CAP = "FACETPOWERS_MAX_VERTICES"


def engine_cap() -> int:
    value = os.environ.get(ENV_CAP)
    if value:
        return int(value)
    return DEFAULT_MAX_VERTICES


# ---------------------------------------------------------------------------
# exact / modular rank of sparse sign matrices


def _rank_exact(vectors: Sequence[dict[int, int]]) -> int:
    """Rank over Q by integer sparse elimination.

    Rows are scaled by the pivot value and gcd-reduced after each update,
    which preserves rank and keeps entries small.  Pivots prefer unit entries
    on the shortest row (fill control).
    """
    rows = [dict(v) for v in vectors if v]
    rank = 0
    while rows:
        pi = min(range(len(rows)), key=lambda i: len(rows[i]))
        prow = rows.pop(pi)
        pc = min(prow, key=lambda c: (abs(prow[c]) != 1, abs(prow[c]), c))
        pv = prow[pc]
        rank += 1
        updated = []
        for row in rows:
            f = row.get(pc)
            if f is None:
                updated.append(row)
                continue
            out = {c: v * pv for c, v in row.items() if c != pc}
            for c, v in prow.items():
                if c == pc:
                    continue
                nv = out.get(c, 0) - f * v
                if nv:
                    out[c] = nv
                elif c in out:
                    del out[c]
            if out:
                g = 0
                for v in out.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    out = {c: v // g for c, v in out.items()}
                updated.append(out)
        rows = updated
    return rank


def _rank_gf2(vectors: Sequence[dict[int, int]]) -> int:
    """Rank over GF(2) by bitset elimination: each vector is an integer whose
    bits mark the odd entries; reduction is XOR against stored pivots."""
    pivots: dict[int, int] = {}
    rank = 0
    for vec in vectors:
        row = 0
        for j, val in vec.items():
            if val & 1:
                row |= 1 << j
        while row:
            low = row & -row
            stored = pivots.get(low)
            if stored is None:
                pivots[low] = row
                rank += 1
                break
            row ^= stored
    return rank


def _rank_mod(vectors: Sequence[dict[int, int]], width: int, p: int) -> int:
    """Rank over GF(p) by dense modular elimination with vectorized pivot
    search and affected-rows-only updates."""
    if p == 2:
        return _rank_gf2(vectors)
    vecs = [v for v in vectors if v]
    if not vecs or width == 0:
        return 0
    a = np.zeros((len(vecs), width), dtype=np.int64)
    for i, vec in enumerate(vecs):
        for j, val in vec.items():
            a[i, j] = val % p
    rank = 0
    nrows = a.shape[0]
    for c in range(width):
        live = a[rank:, c]
        nz = np.nonzero(live)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        prow = a[rank] * inv % p
        a[rank] = prow
        hit = rank + 1 + np.nonzero(a[rank + 1 :, c])[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(a[hit, c], prow)) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank(vectors: Sequence[dict[int, int]], width: int, char: int) -> int:
    if char == 0:
        return _rank_exact(vectors)
    return _rank_mod(vectors, width, char)


# ---------------------------------------------------------------------------
# chain complexes of facet lists


def _faces_of_dim(facets: Sequence[int], d: int, counter: list[int]) -> list[int]:
    found: set[int] = set()
    for w in facets:
        idx = list(_bits(w))
        if len(idx) >= d + 1:
            for combo in combinations(idx, d + 1):
                found.add(sum(1 << b for b in combo))
    counter[0] += len(found)
    if counter[0] > MAX_FACES:
        raise BudgetExceededError(
            f"face enumeration exceeded {MAX_FACES} faces"
        )
    return sorted(found)


def _boundary_cols(
    faces_d: Sequence[int], index_prev: dict[int, int]
) -> list[dict[int, int]]:
    cols = []
    for m in faces_d:
        col = {}
        for i, b in enumerate(_bits(m)):
            col[index_prev[m ^ (1 << b)]] = -1 if i & 1 else 1
        cols.append(col)
    return cols


def _assert_boundary_square_zero(
    cols_d: Sequence[dict[int, int]], cols_dp1: Sequence[dict[int, int]]
) -> None:
    for col in cols_dp1:
        acc: dict[int, int] = {}
        for j, s in col.items():
            for i, s2 in cols_d[j].items():
                acc[i] = acc.get(i, 0) + s * s2
        if any(acc.values()):
            raise FacetPowersError("boundary composition is nonzero")


def _component_count(facets: Sequence[int]) -> int:
    comps: list[int] = []
    for m in facets:
        merged = m
        keep = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                keep.append(c)
        keep.append(merged)
        comps = keep
    return len(comps)


def _fold(facets: Sequence[int]) -> list[int]:
    """Shrink by deleting dominated vertices (a vertex whose every facet
    contains some fixed other vertex); each deletion is an elementary
    collapse, so all reduced homology is preserved."""
    fs = _maximal(facets)
    while len(fs) > 1:
        union = 0
        for w in fs:
            union |= w
        dominated = 0
        for v in _bits(union):
            bit = 1 << v
            common = -1
            for w in fs:
                if w & bit:
                    common &= w
            if common & ~bit:
                dominated = bit
                break
        if not dominated:
            break
        fs = _maximal(w & ~dominated for w in fs)
    return fs


def _as_masks(target) -> list[int]:
    if isinstance(target, SimplicialComplex):
        return list(target.facet_masks)
    out = []
    for item in target:
        out.append(item.mask if isinstance(item, VertexSet) else int(item))
    return out


def reduced_homology_ranks(target, char: int = 0) -> dict[int, int]:
    """Ranks of reduced homology in every degree -1 <= d <= dim.

    `target` is a complex or an iterable of facet masks / vertex sets.  The
    boundary-square-zero and Euler-characteristic identities are asserted on
    every run.
    """
    facets = _maximal(_as_masks(target))
    if not facets:
        return {}
    if facets == [0]:
        return {-1: 1}
    top = max(m.bit_count() for m in facets) - 1
    counter = [0]
    faces = {d: _faces_of_dim(facets, d, counter) for d in range(top + 1)}
    cols: dict[int, list[dict[int, int]]] = {0: [{0: 1} for _ in faces[0]]}
    for d in range(1, top + 1):
        index_prev = {m: i for i, m in enumerate(faces[d - 1])}
        cols[d] = _boundary_cols(faces[d], index_prev)
    for d in range(top):
        _assert_boundary_square_zero(cols[d], cols[d + 1])
    widths = {0: 1}
    for d in range(1, top + 1):
        widths[d] = len(faces[d - 1])
    ranks = {d: _rank(cols[d], widths[d], char) for d in range(top + 1)}
    ranks[top + 1] = 0
    h = {-1: 1 - ranks[0]}
    for d in range(top + 1):
        h[d] = len(faces[d]) - ranks[d] - ranks[d + 1]
    if any(v < 0 for v in h.values()):
        raise FacetPowersError("negative homology rank; elimination is broken")
    euler_faces = -1 + sum(
        (-1) ** d * len(faces[d]) for d in range(top + 1)
    )
    euler_ranks = sum((-1) ** d * r for d, r in h.items())
    if euler_faces != euler_ranks:
        raise FacetPowersError("Euler characteristic mismatch")
    return h


_SCREEN_PRIME = 1_000_003


def _first_nonzero_degrees(
    facets: Sequence[int], caps: dict[int, int]
) -> dict[int, int | None]:
    """Per field characteristic, the smallest degree with nonzero reduced
    homology, scanned bottom-up and cut off at caps[char].

    Rational ranks are screened through a large prime first: the mod-p
    homology rank bounds the rational one from above, so a vanishing screen
    certifies rational vanishing and the exact integer elimination only runs
    on restrictions that actually carry homology.
    """
    out: dict[int, int | None] = {c: None for c in caps}
    if not facets:
        return out
    if list(facets) == [0]:
        for c, cap in caps.items():
            if cap >= -1:
                out[c] = -1
        return out
    if _component_count(facets) > 1:
        for c, cap in caps.items():
            if cap >= 0:
                out[c] = 0
        return out
    top = max(m.bit_count() for m in facets) - 1
    limit = min(max(caps.values()), top)
    if limit < 1:
        return out
    counter = [0]
    faces: dict[int, list[int]] = {
        0: _faces_of_dim(facets, 0, counter),
        1: _faces_of_dim(facets, 1, counter),
    }
    cols: dict[int, list[dict[int, int]]] = {
        1: _boundary_cols(faces[1], {m: i for i, m in enumerate(faces[0])})
    }
    widths = {1: len(faces[0])}
    # (scheme, level) -> rank of the level-th boundary map; scheme is a field
    # characteristic or "screen" for the char-0 prescreen.  The vertex-edge
    # incidence rank is field independent: vertices - 1 when connected.
    ranks: dict[tuple[int | str, int], int] = {}
    for scheme in set(caps) | {"screen"}:
        ranks[(scheme, 1)] = len(faces[0]) - 1

    def rank_of(scheme: int | str, level: int) -> int:
        if level not in cols:
            return 0
        key = (scheme, level)
        if key not in ranks:
            if scheme == "screen":
                ranks[key] = _rank_mod(cols[level], widths[level], _SCREEN_PRIME)
            else:
                ranks[key] = _rank(cols[level], widths[level], scheme)
        return ranks[key]

    unresolved = {c for c, cap in caps.items() if cap >= 1}
    for j in range(1, limit + 1):
        if j + 1 <= top and (j + 1) not in faces:
            faces[j + 1] = _faces_of_dim(facets, j + 1, counter)
            if faces[j + 1]:
                cols[j + 1] = _boundary_cols(
                    faces[j + 1], {m: i for i, m in enumerate(faces[j])}
                )
                widths[j + 1] = len(faces[j])
                _assert_boundary_square_zero(cols[j], cols[j + 1])
        f_j = len(faces[j])
        for c in sorted(unresolved):
            if caps[c] < j:
                unresolved.discard(c)
                continue
            if c == 0:
                screened = f_j - rank_of("screen", j) - rank_of("screen", j + 1)
                if screened <= 0:
                    continue
                exact = f_j - rank_of(0, j) - rank_of(0, j + 1)
                if exact > 0:
                    out[c] = j
                    unresolved.discard(c)
            else:
                if f_j - rank_of(c, j) - rank_of(c, j + 1) > 0:
                    out[c] = j
                    unresolved.discard(c)
        if not unresolved or (j + 1) not in cols:
            break
    return out


# ---------------------------------------------------------------------------
# minimal vertex covers (minimal primes)


_COVER_CACHE: dict[tuple[tuple[int, ...], int], list[int]] = {}


def _minimal_covers_masks(gens: Sequence[int]) -> list[int]:
    key = (tuple(gens), 0)
    hit = _COVER_CACHE.get(key)
    if hit is not None:
        return hit
    order = sorted(gens, key=int.bit_count)
    found: set[int] = set()

    def walk(cover: int, forbidden: int) -> None:
        for g in order:
            if g & cover == 0:
                avail = g & ~forbidden
                seen = 0
                while avail:
                    low = avail & -avail
                    walk(cover | low, forbidden | seen)
                    seen |= low
                    avail ^= low
                return
        found.add(cover)

    walk(0, 0)
    result = _minimal_masks(found)
    _COVER_CACHE[key] = result
    return result


def _cover_number(gens: Sequence[int]) -> int:
    """Minimum transversal size by branch and bound on the generator with the
    fewest vertices; independent route used for the height duality check."""
    union = 0
    for g in gens:
        union |= g
    best = union.bit_count()

    def walk(cover: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        pick = None
        for g in gens:
            if g & cover == 0 and (
                pick is None or g.bit_count() < pick.bit_count()
            ):
                pick = g
        if pick is None:
            best = size
            return
        for v in _bits(pick):
            walk(cover | (1 << v), size + 1)

    walk(0, 0)
    return best


def minimal_covers(ideal: MonomialIdeal) -> tuple[VertexSet, ...]:
    """All inclusion-minimal transversals of the generator supports."""
    _require_proper(ideal)
    masks = _minimal_covers_masks(ideal.gen_masks)
    return tuple(
        sorted((VertexSet(ideal.ambient, m) for m in masks), key=VertexSet.sort_key)
    )


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise DegenerateIdealError("zero ideal")
    if ideal.is_unit:
        raise DegenerateIdealError("unit ideal")


def height(ideal: MonomialIdeal) -> int:
    _require_proper(ideal)
    return min(m.bit_count() for m in _minimal_covers_masks(ideal.gen_masks))


def krull_dim(ideal: MonomialIdeal) -> int:
    """Ambient size minus the minimum cover size; the zero ideal has the full
    ambient dimension."""
    if ideal.is_unit:
        raise DegenerateIdealError("unit ideal")
    if ideal.is_zero:
        return len(ideal.ambient)
    return len(ideal.ambient) - height(ideal)


def is_unmixed(ideal: MonomialIdeal) -> bool:
    _require_proper(ideal)
    sizes = {m.bit_count() for m in _minimal_covers_masks(ideal.gen_masks)}
    return len(sizes) == 1


# ---------------------------------------------------------------------------
# Hochster enumeration


def _lcm_lattice(gens: Sequence[int]) -> list[int]:
    acc = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for s in frontier:
            for g in gens:
                u = s | g
                if u not in acc:
                    acc.add(u)
                    fresh.add(u)
        frontier = fresh
    return sorted(acc, key=lambda m: (-m.bit_count(), m))


def _sr_facets(gens: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return _maximal(full & ~c for c in _minimal_covers_masks(gens))


def _restriction_facets(sr: Sequence[int], sigma: int) -> list[int]:
    return _maximal(w & sigma for w in sr)


def _restriction_facets_np(sr_np: np.ndarray, sigma: int) -> list[int] | None:
    """Maximal intersections of the facet array with sigma; None when sigma
    itself is a face (the restriction is a full simplex)."""
    cut = np.unique(sr_np & sigma)
    if int(cut[-1]) == sigma:
        return None
    contains = (cut[:, None] & ~cut[None, :]) == 0
    maximal = cut[contains.sum(axis=1) == 1]
    return [int(m) for m in maximal]


def _proj_dims(gens: Sequence[int], n: int, chars: Sequence[int]) -> dict[int, int]:
    sr_np = np.array(_sr_facets(gens, n), dtype=np.int64)
    best = {c: 0 for c in chars}
    for sigma in _lcm_lattice(gens):
        s = sigma.bit_count()
        if all(s <= b for b in best.values()):
            break
        rest = _restriction_facets_np(sr_np, sigma)
        if rest is None:
            continue  # sigma is a face: the restriction is a full simplex
        folded = _fold(rest)
        caps = {c: s - 1 - best[c] for c in chars if s > best[c]}
        degs = _first_nonzero_degrees(folded, caps)
        for c, j in degs.items():
            if j is not None and s - 1 - j > best[c]:
                best[c] = s - 1 - j
    return best


def proj_dim_by_full_enumeration(ideal: MonomialIdeal, char: int = 0) -> int:
    """Brute-force projective dimension: every vertex subset, no lattice or
    cone skips, no folding.  Exponential; spot-check oracle only."""
    _require_proper(ideal)
    n = len(ideal.ambient)
    sr = _sr_facets(ideal.gen_masks, n)
    best = 0
    for sigma in range(1, 1 << n):
        rest = _restriction_facets(sr, sigma)
        for j, rank in reduced_homology_ranks(rest, char).items():
            if rank > 0:
                i = sigma.bit_count() - 1 - j
                if i > best:
                    best = i
    return best


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class BettiEntry:
    index: int
    multidegree: VertexSet
    rank: int


@dataclass(frozen=True)
class DepthReport:
    n: int
    height: int
    krull_dim: int
    proj_dim: int
    depth: int
    is_cm: bool
    is_unmixed: bool
    min_covers: tuple[VertexSet, ...]
    field_char: int

    def __post_init__(self) -> None:
        if self.depth != self.n - self.proj_dim:
            raise FacetPowersError("depth must equal n - proj_dim")
        if self.krull_dim != self.n - self.height:
            raise FacetPowersError("dimension must equal n - height")
        if self.depth > self.krull_dim:
            raise FacetPowersError("depth exceeds dimension; engine is broken")
        if self.is_cm != (self.depth == self.krull_dim):
            raise FacetPowersError("inconsistent Cohen-Macaulay flag")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "height": self.height,
            "krull_dim": self.krull_dim,
            "proj_dim": self.proj_dim,
            "depth": self.depth,
            "is_cm": self.is_cm,
            "is_unmixed": self.is_unmixed,
            "min_covers": [list(c.names) for c in self.min_covers],
            "field_char": self.field_char,
        }


_REPORT_CACHE: dict[tuple, DepthReport] = {}


def depth_reports(
    ideal: MonomialIdeal, chars: Sequence[int] = (0,)
) -> dict[int, DepthReport]:
    """Depth reports over several field characteristics in one enumeration
    pass (the combinatorial work is shared; only the ranks differ)."""
    _require_proper(ideal)
    n = len(ideal.ambient)
    if n > engine_cap():
        raise BudgetExceededError(
            f"{n} variables exceeds the engine cap {engine_cap()} "
            f"(the enumeration scales like 2^{n}); raise {ENV_CAP} to override"
        )
    gens = ideal.gen_masks
    missing = [c for c in chars if (ideal.ambient, gens, c) not in _REPORT_CACHE]
    if missing:
        covers = _minimal_covers_masks(gens)
        sizes = {m.bit_count() for m in covers}
        hgt = min(sizes)
        if _cover_number(gens) != hgt:
            raise FacetPowersError("height duality violated; cover search is broken")
        pds = _proj_dims(gens, n, missing)
        cover_sets = tuple(
            sorted(
                (VertexSet(ideal.ambient, m) for m in covers),
                key=VertexSet.sort_key,
            )
        )
        for c in missing:
            report = DepthReport(
                n=n,
                height=hgt,
                krull_dim=n - hgt,
                proj_dim=pds[c],
                depth=n - pds[c],
                is_cm=n - pds[c] == n - hgt,
                is_unmixed=len(sizes) == 1,
                min_covers=cover_sets,
                field_char=c,
            )
            _REPORT_CACHE[(ideal.ambient, gens, c)] = report
    return {c: _REPORT_CACHE[(ideal.ambient, gens, c)] for c in chars}


def depth_report(ideal: MonomialIdeal, char: int = 0) -> DepthReport:
    return depth_reports(ideal, (char,))[char]


def depth(ideal: MonomialIdeal, char: int = 0) -> int:
    return depth_report(ideal, char).depth


def is_cm(ideal: MonomialIdeal, char: int = 0, cross_check: bool = False) -> bool:
    """depth == dim; with `cross_check`, the link-vanishing criterion must
    agree or the engine raises."""
    verdict = depth_report(ideal, char).is_cm
    if cross_check:
        other = is_cm_by_links(ideal, char)
        if other != verdict:
            raise FacetPowersError(
                f"link criterion ({other}) disagrees with depth==dim ({verdict})"
            )
    return verdict


def is_cm_by_links(ideal: MonomialIdeal, char: int = 0) -> bool:
    """Cohen-Macaulay test via vanishing reduced homology of every face link
    below its top dimension (independent of the depth route)."""
    _require_proper(ideal)
    support = ideal.support().mask
    idx = list(_bits(support))
    remap = {b: i for i, b in enumerate(idx)}
    gens = [sum(1 << remap[b] for b in _bits(g)) for g in ideal.gen_masks]
    sr = _sr_facets(gens, len(idx))
    counter = [0]
    faces: set[int] = set()
    for w in sr:
        bits_w = list(_bits(w))
        for r in range(len(bits_w) + 1):
            for combo in combinations(bits_w, r):
                faces.add(sum(1 << b for b in combo))
                counter[0] += 1
                if counter[0] > MAX_FACES:
                    raise BudgetExceededError("link enumeration exceeded the face budget")
    for face in sorted(faces):
        link = _maximal(w & ~face for w in sr if face & ~w == 0)
        top = max(m.bit_count() for m in link) - 1
        if top < 0:
            continue
        caps = {char: top - 1}
        if _first_nonzero_degrees(_fold(link), caps)[char] is not None:
            return False
    return True


def betti_table(ideal: MonomialIdeal, char: int = 0) -> tuple[BettiEntry, ...]:
    """All nonzero graded Betti numbers of the quotient, from restricted
    reduced homology over the lcm lattice."""
    _require_proper(ideal)
    n = len(ideal.ambient)
    if n > engine_cap():
        raise BudgetExceededError(f"{n} variables exceeds the engine cap")
    sr = _sr_facets(ideal.gen_masks, n)
    entries = [BettiEntry(0, VertexSet(ideal.ambient, 0), 1)]
    for sigma in _lcm_lattice(ideal.gen_masks):
        rest = _restriction_facets(sr, sigma)
        if rest == [sigma]:
            continue
        for j, rank in reduced_homology_ranks(_fold(rest), char).items():
            if rank > 0:
                entries.append(
                    BettiEntry(
                        sigma.bit_count() - 1 - j,
                        VertexSet(ideal.ambient, sigma),
                        rank,
                    )
                )
    entries.sort(key=lambda e: (e.index, e.multidegree.sort_key()))
    return tuple(entries)


def normalized_depth(ideal: MonomialIdeal, char: int = 0) -> dict[int, int]:
    """depth(R/I^[k]) - (d_k - 1) for every nonzero power, over the smallest
    ambient ring containing the generators."""
    _require_proper(ideal)
    if ideal.support().mask != (1 << len(ideal.ambient)) - 1:
        raise DegenerateIdealError(
            "normalized depth needs the smallest ambient ring (no unused variables)"
        )
    profile = min_degree_profile(ideal)
    out = {}
    for k, d_k in profile.degrees.items():
        dep = depth(squarefree_power(ideal, k), char)
        if dep < d_k - 1:
            raise FacetPowersError("depth fell below the minimum-degree bound")
        out[k] = dep - (d_k - 1)
    return out


# ---------------------------------------------------------------------------
# structured checks used by the verification harness


@dataclass(frozen=True)
class ContractionCheck:
    holds: bool
    contracted: SimplicialComplex
    ideal_identity: bool
    contraction_cm: bool
    partition_match: bool | None


def verify_contraction_cm(
    dcx: SimplicialComplex, leaf: VertexSet, vanish: VertexSet
) -> ContractionCheck:
    """Contract on a subset of a grafted leaf's common neighbor intersection;
    the contraction must stay a Cohen-Macaulay forest, its facet ideal must
    equal the colon of the original ideal, and for the full intersection the
    leaf/base split of the contraction is predicted exactly."""
    if not is_cm_forest(dcx):
        raise ValueError("complex must be a Cohen-Macaulay forest")
    leaf = dcx.require_facet(leaf)
    if is_leaf(dcx, leaf) is None:
        raise NotALeafError(f"{leaf!r} is not a leaf")
    nbrs = [g for g in dcx.facets if g.mask != leaf.mask and g.mask & leaf.mask]
    if nbrs:
        admissible = leaf.mask
        for g in nbrs:
            admissible &= g.mask
    else:
        admissible = leaf.mask  # isolated leaf: any subset of the leaf itself
    if vanish.labels != dcx.labels or vanish.mask & ~admissible:
        raise ValueError("contraction set must sit inside the common neighbor intersection")
    contracted = contraction(dcx, vanish)
    lhs = (
        MonomialIdeal.unit(dcx.labels)
        if contracted.is_void
        else facet_ideal(contracted).with_ambient(dcx.labels)
    )
    rhs = colon(facet_ideal(dcx), vanish)
    identity = ideal_equal(lhs, rhs)
    cm = is_cm_forest(contracted)
    partition: bool | None = None
    if (
        nbrs
        and vanish.mask == admissible
        and vanish.mask
        and not contracted.is_void
    ):
        predicted: set[frozenset[str]] = set()
        predicted.add(frozenset(VertexSet(dcx.labels, leaf.mask & ~vanish.mask).names))
        for other in dcx.facets:
            if other.mask == leaf.mask or is_leaf(dcx, other) is None:
                continue
            absorbed = [
                g for g in nbrs if (g.mask & ~vanish.mask) & ~other.mask == 0
            ]
            if len(absorbed) > 1:
                raise FacetPowersError("a leaf absorbed two contracted neighbors")
            if absorbed:
                predicted.add(
                    frozenset(
                        VertexSet(dcx.labels, absorbed[0].mask & ~vanish.mask).names
                    )
                )
            else:
                predicted.add(frozenset(other.names))
        actual = {
            frozenset(f.names)
            for f in contracted.facets
            if is_leaf(contracted, f) is not None
        }
        partition = predicted == actual
    holds = identity and cm and partition is not False
    return ContractionCheck(holds, contracted, identity, cm, partition)


def verify_colon_quotient_cm(
    ideal: MonomialIdeal, mono: VertexSet, char: int = 0
) -> bool:
    """Coloning a Cohen-Macaulay monomial quotient by a monomial outside the
    ideal must stay Cohen-Macaulay."""
    if any(g.mask & ~mono.mask == 0 for g in ideal.gens):
        raise ValueError("monomial lies in the ideal")
    if not is_cm(ideal, char):
        raise ValueError("quotient is not Cohen-Macaulay")
    return is_cm(colon(ideal, mono), char)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    k: int | None
    expected: object
    actual: object
    ok: bool


@dataclass(frozen=True)
class DepthTheoremReport:
    checks: tuple[TheoremCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_depth_theorem(
    dcx: SimplicialComplex,
    ks: Sequence[int] | None = None,
    char: int = 0,
) -> DepthTheoremReport:
    """Replay the dimension/depth/Cohen-Macaulay formulas on a Cohen-Macaulay
    forest: for each k, dim and depth of the k-th square-free power equal
    |V| - nu + k - 1, the quotient is Cohen-Macaulay, killing any special
    leaf keeps the same depth, and the normalized depth is nonincreasing."""
    if not is_cm_forest(dcx):
        raise ValueError("complex must be a Cohen-Macaulay forest")
    if dcx.is_empty:
        return DepthTheoremReport(())
    n = len(dcx.labels)
    nu = matching_number(dcx)
    ideal = facet_ideal(dcx)
    todo = [k for k in (ks if ks is not None else range(1, nu + 1)) if 1 <= k <= nu]
    specials = special_leaves(dcx)
    checks: list[TheoremCheck] = []
    for k in todo:
        expected = n - nu + k - 1
        power = squarefree_power(ideal, k)
        report = depth_report(power, char)
        checks.append(
            TheoremCheck("krull_dim", k, expected, report.krull_dim,
                         report.krull_dim == expected)
        )
        checks.append(
            TheoremCheck("depth", k, expected, report.depth, report.depth == expected)
        )
        checks.append(TheoremCheck("is_cm", k, True, report.is_cm, report.is_cm))
        for f in specials:
            killed = depth(add_principal(power, f), char)
            checks.append(
                TheoremCheck(
                    f"depth_with_special_leaf_{'_'.join(f.names)}",
                    k,
                    expected,
                    killed,
                    killed == expected,
                )
            )
    g = normalized_depth(ideal, char)
    nonincreasing = all(g[k + 1] <= g[k] for k in range(1, len(g)))
    checks.append(
        TheoremCheck("normalized_depth_nonincreasing", None, True, g, nonincreasing)
    )
    return DepthTheoremReport(tuple(checks))

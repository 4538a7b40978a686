"""Seeded random Cohen-Macaulay forests via grafting.

A random base forest grows by sequential attachment (each new facet meets
the existing complex inside a single existing facet).  Attachment alone does
not guarantee forestness -- three facets glued into one host facet can pair
up into a leafless subcollection -- so the base is checked with the forest
recognizer and resampled on failure.  Grafting then attaches fresh leaves:
either one whisker per vertex (always grafted) or one leaf per vertex block,
validated by the grafting checker with rejection sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import SimplicialComplex, build_complex
from .errors import BudgetExceededError
from .grafting import GraftingCertificate, is_cm_forest, is_grafted
from .leaves import is_forest

MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class GeneratorParams:
    seed: int
    base_facet_count: int = 2
    max_facet_size: int = 4
    vertex_budget: int = 14
    whisker_mode: str = "all-vertices"  # or "block"

    def __post_init__(self) -> None:
        if self.max_facet_size < 2 or self.vertex_budget < 2:
            raise ValueError("facet size and vertex budget must be at least 2")
        if self.base_facet_count < 0:
            raise ValueError("base facet count must be nonnegative")
        if self.whisker_mode not in ("all-vertices", "block"):
            raise ValueError("whisker_mode must be 'all-vertices' or 'block'")


@dataclass(frozen=True)
class GeneratedForest:
    complex: SimplicialComplex
    certificate: GraftingCertificate
    rejections: int


def _random_base(rng: random.Random, params: GeneratorParams) -> list[set[int]]:
    """Facets of a random base forest over integer vertices 0..k-1."""
    budget = params.vertex_budget // 2  # grafting at most doubles the count
    for _ in range(MAX_ATTEMPTS):
        size = rng.randint(2, min(params.max_facet_size, budget))
        facets = [set(range(size))]
        fresh = size
        for _ in range(params.base_facet_count - 1):
            if fresh >= budget:
                break
            host = rng.choice(facets)
            overlap = rng.randint(1, len(host) - 1)
            shared = set(rng.sample(sorted(host), overlap))
            room = min(params.max_facet_size - overlap, budget - fresh)
            if room < 1:
                break
            grow = rng.randint(1, room)
            facets.append(shared | set(range(fresh, fresh + grow)))
            fresh += grow
        probe = build_complex(
            [f"v{i + 1}" for i in range(fresh)],
            [[f"v{i + 1}" for i in sorted(f)] for f in facets],
        )
        if is_forest(probe) is not None:
            return facets
    raise BudgetExceededError("could not sample a base forest")


def _blocks(
    rng: random.Random, facets: list[set[int]], vertex_count: int
) -> list[set[int]]:
    """Vertex blocks, each contained in every facet it meets, with at least
    two blocks inside every facet (otherwise a leaf would swallow a facet)."""
    signature: dict[int, frozenset[int]] = {}
    for v in range(vertex_count):
        signature[v] = frozenset(i for i, f in enumerate(facets) if v in f)
    classes: dict[frozenset[int], list[int]] = {}
    for v in range(vertex_count):
        classes.setdefault(signature[v], []).append(v)
    blocks: list[set[int]] = []
    for sig in sorted(classes, key=sorted):
        members = classes[sig]
        pieces = rng.randint(1, len(members))
        shuffled = members[:]
        rng.shuffle(shuffled)
        cuts = sorted(rng.sample(range(1, len(members)), pieces - 1)) if pieces > 1 else []
        start = 0
        for cut in [*cuts, len(members)]:
            blocks.append(set(shuffled[start:cut]))
            start = cut
    for f in facets:
        inside = [b for b in blocks if b & f]
        if len(inside) == 1:
            whole = inside[0]
            blocks.remove(whole)
            members = sorted(whole)
            split = rng.randint(1, len(members) - 1)
            blocks.append(set(members[:split]))
            blocks.append(set(members[split:]))
    return sorted(blocks, key=sorted)


def random_grafted_forest(params: GeneratorParams) -> GeneratedForest:
    """Deterministic in the seed; rejection-samples against the grafting and
    forest checkers so every output is a Cohen-Macaulay forest."""
    rng = random.Random(params.seed)
    rejections = 0
    for _ in range(MAX_ATTEMPTS):
        if params.base_facet_count == 0:
            size = rng.randint(2, min(params.max_facet_size, params.vertex_budget))
            labels = [f"v{i + 1}" for i in range(size)]
            dcx = build_complex(labels, [labels])
        else:
            base = _random_base(rng, params)
            vertex_count = max(max(f) for f in base) + 1
            base_labels = [f"v{i + 1}" for i in range(vertex_count)]
            facet_lists = [[base_labels[v] for v in sorted(f)] for f in base]
            if params.whisker_mode == "all-vertices":
                leaf_sets = [{v} for v in range(vertex_count)]
            else:
                leaf_sets = _blocks(rng, base, vertex_count)
            labels = base_labels + [f"w{i + 1}" for i in range(len(leaf_sets))]
            for i, block in enumerate(leaf_sets):
                facet_lists.append(
                    [base_labels[v] for v in sorted(block)] + [f"w{i + 1}"]
                )
            dcx = build_complex(labels, facet_lists)
        cert = is_grafted(dcx)
        if cert is not None and is_cm_forest(dcx):
            return GeneratedForest(dcx, cert, rejections)
        rejections += 1
    raise BudgetExceededError(
        f"no grafted forest accepted after {rejections} rejections"
    )

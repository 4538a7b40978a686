"""Built-in instances with machine-checkable expected facts.

Provenance of a fact is one of: "stated" (asserted by the source material),
"derived" (recomputed here by an independent route), "trivial" (immediate
from the definitions).  Every fact is re-derivable by the library; nothing is
hardcoded to pass.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .complexes import SimplicialComplex, build_complex

STATED = "stated"
DERIVED = "derived"
TRIVIAL = "trivial"

FIXTURE_NAMES = ("delta1", "delta2", "g1", "g2", "fakhari")


@dataclass(frozen=True)
class ExpectedFact:
    prop: str
    value: object
    provenance: str


@dataclass(frozen=True)
class Fixture:
    name: str
    complex: SimplicialComplex
    facts: tuple[ExpectedFact, ...]


def _delta1() -> Fixture:
    dcx = build_complex(
        ["x", "y1", "y2", "y3", "y4", "y5", "y6"],
        [["x", "y1", "y2"], ["x", "y3", "y4"], ["x", "y5", "y6"]],
    )
    facts = (
        ExpectedFact("is_forest", True, STATED),
        ExpectedFact("special_leaf_names", [], STATED),
        ExpectedFact("facet_count", 3, TRIVIAL),
        ExpectedFact("is_cm_forest", False, DERIVED),
    )
    return Fixture("delta1", dcx, facts)


def _delta2() -> Fixture:
    dcx = build_complex(
        ["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"],
        [
            ["x1", "x2", "x3"],
            ["x3", "x4"],
            ["x1", "y1"],
            ["x2", "y2"],
            ["x3", "y3"],
            ["x4", "y4"],
        ],
    )
    facts = (
        ExpectedFact("is_forest", True, STATED),
        ExpectedFact("is_cm_forest", True, STATED),
        ExpectedFact("facet_count", 6, STATED),
        ExpectedFact("vertex_count", 8, STATED),
        ExpectedFact(
            "special_leaf_names", [["x1", "y1"], ["x2", "y2"], ["x4", "y4"]], STATED
        ),
        ExpectedFact("leaf_not_special_names", [["x3", "y3"]], STATED),
        ExpectedFact("matching_number", 4, DERIVED),
    )
    return Fixture("delta2", dcx, facts)


def _g1() -> Fixture:
    dcx = build_complex(
        ["x1", "x2", "x3", "y1", "y2", "y3"],
        [
            ["x1", "x2"],
            ["x2", "x3"],
            ["x1", "x3"],
            ["x1", "y1"],
            ["x2", "y2"],
            ["x3", "y3"],
        ],
    )
    facts = (
        ExpectedFact("is_forest", False, DERIVED),
        ExpectedFact("ideal_is_cm", True, STATED),
        ExpectedFact("power2_generator_count", 6, STATED),
        ExpectedFact(
            "power2_min_covers_include", [["x1", "x2"], ["y1", "y2", "y3"]], STATED
        ),
        ExpectedFact("power2_is_unmixed", False, STATED),
        ExpectedFact("power2_is_cm", False, STATED),
    )
    return Fixture("g1", dcx, facts)


def _g2() -> Fixture:
    dcx = build_complex(
        ["x1", "x2", "x3", "y1", "y2", "y3"],
        [
            ["x1", "x2"],
            ["x2", "x3"],
            ["x1", "y1"],
            ["x2", "y2"],
            ["x3", "y3"],
        ],
    )
    facts = (
        ExpectedFact("is_forest", True, DERIVED),
        ExpectedFact("is_cm_forest", True, STATED),
        ExpectedFact("matching_number", 3, DERIVED),
        ExpectedFact(
            "power2_generators",
            [
                ["x1", "x2", "x3", "y3"],
                ["x1", "x2", "y1", "y2"],
                ["x1", "x3", "y1", "y3"],
                ["x1", "x2", "x3", "y1"],
                ["x2", "x3", "y2", "y3"],
            ],
            STATED,
        ),
        ExpectedFact("power2_complex_has_free_vertex", False, STATED),
        ExpectedFact("power2_complex_is_forest", False, STATED),
    )
    return Fixture("g2", dcx, facts)


def _fakhari(n: int) -> Fixture:
    if n < 5:
        raise ValueError("the leafless family needs at least 5 variables")
    labels = [f"x{i}" for i in range(1, n + 1)]
    gens = [["x1", "x3", f"x{i + 4}"] for i in range(1, n - 3)]
    gens += [["x1", "x4", "x5"], ["x2", "x3", "x4"], ["x2", "x3", "x6"]]
    gens = [g for g in gens if all(int(v[1:]) <= n for v in g)]
    dcx = build_complex(labels, gens)
    facts = [
        ExpectedFact("is_forest", False, STATED),
        ExpectedFact("facet_count", len({tuple(sorted(g)) for g in gens}), DERIVED),
    ]
    # The second square-free power is principal (the only disjoint generator
    # pair is {x1,x4,x5},{x2,x3,x6}), so g(2) = (n-1) - 5 while g(1) stays 1:
    # the normalized depth rises from k=1 to k=2 exactly when n >= 8.
    if n >= 8:
        facts.append(ExpectedFact("normalized_depth_increases_1_to_2", True, STATED))
    elif n >= 6:
        facts.append(
            ExpectedFact("normalized_depth_increases_1_to_2", n >= 8, DERIVED)
        )
    return Fixture(f"fakhari({n})", dcx, tuple(facts))


def load_fixture(name: str, n: int | None = None) -> Fixture:
    """Named instances: delta1, delta2, g1, g2, fakhari(n)."""
    name = name.strip().lower()
    match = re.fullmatch(r"fakhari(?:\((\d+)\))?", name)
    if match:
        if match.group(1) is not None:
            n = int(match.group(1))
        if n is None:
            raise ValueError("fakhari needs a variable count, e.g. fakhari(6)")
        return _fakhari(n)
    builders = {"delta1": _delta1, "delta2": _delta2, "g1": _g1, "g2": _g2}
    if name not in builders:
        raise KeyError(f"unknown fixture {name!r}")
    return builders[name]()

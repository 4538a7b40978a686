"""Theorem-replay orchestration and machine/human verification reports.

For a Cohen-Macaulay forest the full battery replays every claim the library
implements: structure facts (forest, grafted, matching number equals the
leaf count, special leaves exist and the constructive search finds one),
dimension/depth/Cohen-Macaulayness of every square-free power, depth after
killing each special leaf, the colon-by-a-leaf identity, contraction
structure, colon-preserves-CM samples and the nonincreasing normalized
depth.  Fixture facts (including the negative ones) are first-class checks.

Failed checks embed a replayable JSON instance.  Machine-readable reports
omit wall-clock timings so identical inputs give byte-identical output; the
human summary prints them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .complexes import SimplicialComplex, VertexSet
from .errors import BudgetExceededError
from .fixtures import Fixture, load_fixture
from .generator import GeneratedForest, GeneratorParams, random_grafted_forest
from .grafting import is_cm_forest, is_grafted, matching_number
from .homology import (
    engine_cap,
    is_cm,
    is_unmixed,
    minimal_covers,
    normalized_depth,
    verify_colon_quotient_cm,
    verify_contraction_cm,
    verify_depth_theorem,
)
from .ideals import (
    facet_ideal,
    squarefree_power,
    support_complex,
    verify_colon_identity,
)
from .leaves import find_special_leaf_grafted, is_forest, is_leaf, special_leaves


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    skipped: bool = False
    details: str = ""
    instance: dict | None = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed, "skipped": self.skipped}
        if self.details:
            out["details"] = self.details
        if self.instance is not None:
            out["instance"] = self.instance
        return out


@dataclass(frozen=True)
class VerificationReport:
    target: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.skipped)

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def human_summary(self) -> str:
        lines = [f"verification of {self.target}"]
        for c in self.checks:
            status = "SKIP" if c.skipped else ("pass" if c.passed else "FAIL")
            extra = f"  ({c.details})" if c.details and status != "pass" else ""
            lines.append(f"  [{status}] {c.name}  {c.elapsed * 1000:.1f} ms{extra}")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _run(
    name: str, fn: Callable[[], tuple[bool, str]], instance: dict | None = None
) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, details = fn()
    except BudgetExceededError as exc:
        return CheckResult(
            name,
            passed=True,
            skipped=True,
            details=str(exc),
            elapsed=time.perf_counter() - start,
        )
    return CheckResult(
        name,
        passed=passed,
        details=details,
        instance=instance if not passed else None,
        elapsed=time.perf_counter() - start,
    )


def _names(face: VertexSet) -> str:
    return "".join(face.names) or "1"


# ---------------------------------------------------------------------------
# fixture facts


def _has_free_vertex(dcx: SimplicialComplex) -> bool:
    counts: dict[int, int] = {}
    for f in dcx.facets:
        for v in f:
            counts[v] = counts.get(v, 0) + 1
    return any(c == 1 for c in counts.values())


def _norm(value) -> object:
    if isinstance(value, (list, tuple)) and value and isinstance(
        value[0], (list, tuple)
    ):
        return sorted(sorted(v) for v in value)
    return value


def _fact_actual(fix: Fixture, prop: str) -> object:
    dcx = fix.complex
    if prop == "is_forest":
        return is_forest(dcx) is not None
    if prop == "is_cm_forest":
        return is_cm_forest(dcx)
    if prop == "facet_count":
        return len(dcx.facets)
    if prop == "vertex_count":
        return len(dcx.labels)
    if prop == "matching_number":
        return matching_number(dcx)
    if prop == "special_leaf_names":
        return [list(f.names) for f in special_leaves(dcx)]
    if prop == "leaf_not_special_names":
        specials = {f.mask for f in special_leaves(dcx)}
        return [
            list(f.names)
            for f in dcx.facets
            if is_leaf(dcx, f) is not None and f.mask not in specials
        ]
    if prop == "ideal_is_cm":
        return is_cm(facet_ideal(dcx))
    power2 = (
        squarefree_power(facet_ideal(dcx), 2) if prop.startswith("power2") else None
    )
    if prop == "power2_generator_count":
        return len(power2.gens)
    if prop == "power2_generators":
        return [list(g.names) for g in power2.gens]
    if prop == "power2_is_unmixed":
        return is_unmixed(power2)
    if prop == "power2_is_cm":
        return is_cm(power2)
    if prop == "power2_min_covers_include":
        covers = {frozenset(c.names) for c in minimal_covers(power2)}
        wanted = fix_fact_value(fix, prop)
        return [list(w) for w in wanted if frozenset(w) in covers]
    if prop == "power2_complex_has_free_vertex":
        return _has_free_vertex(support_complex(power2))
    if prop == "power2_complex_is_forest":
        return is_forest(support_complex(power2)) is not None
    if prop == "normalized_depth_increases_1_to_2":
        g = normalized_depth(facet_ideal(dcx))
        return g[2] > g[1]
    raise KeyError(f"no evaluator for fact {prop!r}")


def fix_fact_value(fix: Fixture, prop: str) -> object:
    for fact in fix.facts:
        if fact.prop == prop:
            return fact.value
    raise KeyError(prop)


def fixture_checks(fix: Fixture) -> list[CheckResult]:
    checks = []
    for fact in fix.facts:
        def evaluate(prop=fact.prop, want=fact.value):
            actual = _fact_actual(fix, prop)
            ok = _norm(actual) == _norm(want)
            return ok, f"expected {want!r}, got {actual!r}" if not ok else ""

        checks.append(
            _run(
                f"fact:{fact.prop}[{fact.provenance}]",
                evaluate,
                instance={"complex": fix.complex.to_json(), "fact": fact.prop},
            )
        )
    return checks


# ---------------------------------------------------------------------------
# the Cohen-Macaulay forest battery


def battery_checks(
    dcx: SimplicialComplex,
    ks: Sequence[int] | None = None,
    char: int = 0,
) -> list[CheckResult]:
    checks: list[CheckResult] = []
    base_instance = {"complex": dcx.to_json()}
    checks.append(_run("is_forest", lambda: (is_forest(dcx) is not None, ""), base_instance))
    cert = is_grafted(dcx)
    checks.append(_run("is_grafted", lambda: (cert is not None, ""), base_instance))
    if cert is None:
        return checks
    nu = matching_number(dcx)
    checks.append(
        _run(
            "matching_number_equals_leaf_count",
            lambda: (
                nu == len(cert.grafted_leaves),
                f"nu={nu}, leaves={len(cert.grafted_leaves)}",
            ),
            base_instance,
        )
    )
    specials = special_leaves(dcx)
    checks.append(
        _run("special_leaves_exist", lambda: (len(specials) > 0, ""), base_instance)
    )
    checks.append(
        _run(
            "constructive_special_leaf",
            lambda: (
                find_special_leaf_grafted(dcx, cert).mask
                in {f.mask for f in specials},
                "",
            ),
            base_instance,
        )
    )

    # dimension/depth/CM replay through the homology engine
    if len(dcx.labels) > engine_cap():
        checks.append(
            CheckResult(
                "depth_theorem",
                passed=True,
                skipped=True,
                details=f"{len(dcx.labels)} vertices exceeds the engine cap {engine_cap()}",
            )
        )
    else:
        start = time.perf_counter()
        report = verify_depth_theorem(dcx, ks, char)
        elapsed = time.perf_counter() - start
        for row in report.checks:
            label = row.name if row.k is None else f"{row.name}[k={row.k}]"
            checks.append(
                CheckResult(
                    label,
                    passed=row.ok,
                    details="" if row.ok else f"expected {row.expected}, got {row.actual}",
                    instance=None if row.ok else {**base_instance, "k": row.k},
                    elapsed=elapsed / max(len(report.checks), 1),
                )
            )

    todo = [k for k in (ks if ks is not None else range(1, nu + 1)) if 1 <= k <= nu]

    # colon by a leaf
    for f in dcx.facets:
        if is_leaf(dcx, f) is None:
            continue
        for k in todo:
            checks.append(
                _run(
                    f"colon_identity[k={k},F={_names(f)}]",
                    lambda f=f, k=k: (
                        verify_colon_identity(dcx, f, k).holds,
                        "",
                    ),
                    {**base_instance, "facet": list(f.names), "k": k},
                )
            )

    # contraction structure on each grafted leaf
    for f in cert.grafted_leaves:
        nbr_masks = [g.mask for g in dcx.facets if g.mask != f.mask and g.mask & f.mask]
        admissible = f.mask
        for m in nbr_masks:
            admissible &= m
        samples = [0]
        samples += [1 << b for b in VertexSet(dcx.labels, admissible)]
        if admissible and admissible.bit_count() > 1:
            samples.append(admissible)
        for a in dict.fromkeys(samples):
            vanish = VertexSet(dcx.labels, a)
            checks.append(
                _run(
                    f"contraction[F={_names(f)},A={_names(vanish)}]",
                    lambda f=f, vanish=vanish: (
                        verify_contraction_cm(dcx, f, vanish).holds,
                        "",
                    ),
                    {
                        **base_instance,
                        "facet": list(f.names),
                        "vanish": list(vanish.names),
                    },
                )
            )

    # colon keeps Cohen-Macaulayness: leaf-intersection and power samples
    ideal = facet_ideal(dcx)
    sampled = False
    for f in cert.grafted_leaves:
        nbr_masks = [g.mask for g in dcx.facets if g.mask != f.mask and g.mask & f.mask]
        if not nbr_masks:
            continue
        admissible = f.mask
        for m in nbr_masks:
            admissible &= m
        mono = VertexSet(dcx.labels, admissible)
        checks.append(
            _run(
                f"colon_cm[I,m={_names(mono)}]",
                lambda mono=mono: (verify_colon_quotient_cm(ideal, mono, char), ""),
                {**base_instance, "monomial": list(mono.names)},
            )
        )
        sampled = True
        break
    if nu >= 2 and specials and len(dcx.labels) <= engine_cap():
        f = specials[0]
        checks.append(
            _run(
                f"colon_cm[I^2,m={_names(f)}]",
                lambda f=f: (
                    verify_colon_quotient_cm(squarefree_power(ideal, 2), f, char),
                    "",
                ),
                {**base_instance, "monomial": list(f.names), "k": 2},
            )
        )
        sampled = True
    if not sampled:
        checks.append(
            CheckResult(
                "colon_cm", passed=True, skipped=True, details="no admissible sample"
            )
        )
    return checks


# ---------------------------------------------------------------------------
# entry points


def verify_all(
    target: str | Fixture | SimplicialComplex | GeneratedForest,
    ks: Sequence[int] | None = None,
    char: int = 0,
) -> VerificationReport:
    fixture: Fixture | None = None
    if isinstance(target, str):
        fixture = load_fixture(target)
        name, dcx = fixture.name, fixture.complex
    elif isinstance(target, Fixture):
        fixture = target
        name, dcx = fixture.name, fixture.complex
    elif isinstance(target, GeneratedForest):
        name, dcx = "random", target.complex
    else:
        name, dcx = "complex", target
    checks: list[CheckResult] = []
    if fixture is not None:
        checks.extend(fixture_checks(fixture))
    if is_cm_forest(dcx):
        checks.extend(battery_checks(dcx, ks, char))
    else:
        checks.append(
            CheckResult(
                "cm_forest_battery",
                passed=True,
                skipped=True,
                details="not a Cohen-Macaulay forest; only fixture facts apply",
            )
        )
    return VerificationReport(name, tuple(checks))


def standard_corpus(
    count: int = 100, master_seed: int = 97531, max_vertices: int = 14
) -> list[GeneratedForest]:
    """Deterministic corpus of random Cohen-Macaulay forests with varied
    shapes; both whisker modes are exercised."""
    rng = random.Random(master_seed)
    out = []
    for i in range(count):
        params = GeneratorParams(
            seed=rng.getrandbits(63),
            base_facet_count=rng.randint(1, 3),
            max_facet_size=rng.randint(2, 4),
            vertex_budget=rng.randint(6, max_vertices),
            whisker_mode="all-vertices" if i % 2 == 0 else "block",
        )
        out.append(random_grafted_forest(params))
    return out

"""Hierarchy classification with machine-checkable witnesses, reproductions.

The four verdicts per class:

* text identification: tell-tale computation over the member tuple, or, for
  the punctured family, a certified failure (every finite candidate
  tell-tale of the limit hypothesis sits inside some puncture's support);
* contrastive identification: text identification plus every incomparable
  pair an overlapping cover, with the first barrier pair as the witness
  otherwise;
* contrastive generation: three sufficient mechanisms (infinite safe core,
  eventual core, exactly-known finite closure dimension), one obstruction
  (a small subfamily sharing a presentation while intersecting finitely),
  and an honest Unknown when neither side fires: no complete decision
  procedure is claimed;
* text generation: uniformly unbounded supports.

Every yes/no carries a witness that replays through the corresponding
module operation, and emitted verdicts are post-checked against the diamond
inclusions (contrastive identification below both contrastive generation
and text identification, both below text generation).
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .classes import (
    CoSingletonClass,
    Hypothesis,
    HypothesisClass,
    six_cell_class,
)
from .closure import EXACT, closure_dimension
from .crossing import (
    common_crossing_edges,
    eliminable,
    four_regions,
    gamma_vertex_set,
    pattern_cells,
    shared_presentation_family,
)
from .learners import AbsenceCountIdentifier, compute_telltales, telltales_sound
from .space import SymbolicSet
from .streams import Pair, corrupt, canonical_contrastive, validate

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Bounds:
    """Search budgets for classification; recorded in every verdict."""

    horizon: int = 64
    family_bound: int = 3
    dimension_max_size: int = 8
    dimension_vertex_horizon: int = 24

    def to_json(self) -> dict:
        return {
            "horizon": self.horizon,
            "family_bound": self.family_bound,
            "dimension_max_size": self.dimension_max_size,
            "dimension_vertex_horizon": self.dimension_vertex_horizon,
        }


@dataclass(frozen=True)
class Verdict:
    status: str
    mechanism: str | None = None
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.mechanism:
            out["mechanism"] = self.mechanism
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class HierarchyVerdict:
    class_description: str
    txt_id: Verdict
    ctr_id: Verdict
    ctr_gen: Verdict
    txt_gen: Verdict
    bounds: Bounds

    def corner(self) -> tuple[str, str, str, str]:
        return (self.ctr_id.status, self.txt_id.status, self.ctr_gen.status, self.txt_gen.status)

    def to_json(self) -> dict:
        return {
            "class": self.class_description,
            "txt_id": self.txt_id.to_json(),
            "ctr_id": self.ctr_id.to_json(),
            "ctr_gen": self.ctr_gen.to_json(),
            "txt_gen": self.txt_gen.to_json(),
            "bounds": self.bounds.to_json(),
        }


def _is_punctured(cls: HypothesisClass) -> bool:
    return cls.family is not None and cls.family.kind == "punctured"


def _txt_id_verdict(cls: HypothesisClass, bounds: Bounds) -> Verdict:
    if _is_punctured(cls):
        base = cls.by_id("h_inf").support
        below = base.enumerate_below(bounds.horizon)
        swallow = Hypothesis(
            "puncture-beyond-horizon",
            base.difference(SymbolicSet.finite({2 * bounds.horizon})),
        )
        candidates_covered = SymbolicSet.finite(below).is_subset(swallow.support)
        if not candidates_covered:
            raise AssertionError("puncture beyond the horizon must keep all candidates")
        return Verdict(
            NO,
            mechanism="no-finite-telltale",
            witness={
                "hypothesis": "h_inf",
                "rule": (
                    "any finite candidate tell-tale below the horizon is contained "
                    "in the support of the puncture at an element beyond it"
                ),
                "containing_support": swallow.support.literal(),
                "horizon": bounds.horizon,
            },
        )
    try:
        family = compute_telltales(cls, bounds.horizon)
    except ValueError as exc:
        return Verdict(UNKNOWN, mechanism="horizon-insufficient", witness={"error": str(exc)})
    if not telltales_sound(cls, family):
        raise AssertionError("computed tell-tales failed their own soundness check")
    return Verdict(
        YES,
        mechanism="telltales",
        witness={hid: sorted(family.of(hid)) for hid in cls.ids()},
    )


def _ctr_id_verdict(cls: HypothesisClass, txt_id: Verdict) -> Verdict:
    barrier = _first_barrier_pair(cls)
    if barrier is not None:
        first, second, regime = barrier
        return Verdict(
            NO,
            mechanism="barrier-pair",
            witness={"pair": [first, second], "regime": regime},
        )
    if _is_punctured(cls):
        # barriers exist among punctures beyond any truncation
        m = cls.family.params[0]
        return Verdict(
            NO,
            mechanism="barrier-pair",
            witness={"pair": ["h1", "h2"], "regime": "non-covering"},
        )
    if txt_id.status == NO:
        return Verdict(NO, mechanism="txt-id-failure", witness=txt_id.witness)
    if txt_id.status == UNKNOWN:
        return Verdict(UNKNOWN, mechanism="txt-id-unknown")
    return Verdict(YES, mechanism="overlapping-covers", witness=txt_id.witness)


def _first_barrier_pair(cls: HypothesisClass) -> tuple[str, str, str] | None:
    for i, h in enumerate(cls.members):
        for g in cls.members[i + 1:]:
            if h.support == g.support:
                continue
            regions = four_regions(h, g)
            incomparable = (
                not regions.first_only.is_empty() and not regions.second_only.is_empty()
            )
            if not incomparable:
                continue
            verdict = eliminable(h, g)
            if not verdict.eliminable:
                return (h.id, g.id, verdict.regime)
    return None


def _ctr_gen_verdict(cls: HypothesisClass, ctr_id: Verdict, bounds: Bounds) -> Verdict:
    obstruction = _finite_intersection_obstruction(cls, bounds)
    positive = _ctr_gen_positive(cls, ctr_id, bounds)
    if obstruction is not None and positive is not None:
        raise AssertionError(
            f"both a generation mechanism and an obstruction fired: "
            f"{positive.mechanism} vs {obstruction.witness}"
        )
    if positive is not None:
        return positive
    if obstruction is not None:
        return obstruction
    return Verdict(UNKNOWN, mechanism="no-characterization")


def _ctr_gen_positive(cls: HypothesisClass, ctr_id: Verdict, bounds: Bounds) -> Verdict | None:
    if _is_punctured(cls):
        # one-point punctures exhaust the base set, so the base enumeration
        # is an eventual core: each member misses at most its own hole
        base = cls.by_id("h_inf").support
        for h in cls.members:
            if not base.difference(h.support).cardinality().is_finite:
                raise AssertionError("punctured member misses infinitely much core")
        return Verdict(
            YES,
            mechanism="eventual-core",
            witness={"core": base.literal(), "rule": "ascending enumeration of the base"},
        )
    core = cls.global_support_intersection()
    if core.cardinality().is_infinite:
        return Verdict(YES, mechanism="safe-core", witness={"core": core.literal()})
    report = closure_dimension(
        cls, bounds.dimension_max_size, bounds.dimension_vertex_horizon
    )
    if report.outcome == EXACT:
        return Verdict(
            YES,
            mechanism="finite-dimension",
            witness={
                "dimension": report.dimension,
                "witness_edges": str(report.witness) if report.witness else None,
            },
        )
    if ctr_id.status == YES:
        return Verdict(YES, mechanism="identify-then-generate")
    return None


def _finite_intersection_obstruction(cls: HypothesisClass, bounds: Bounds) -> Verdict | None:
    import itertools

    members = cls.members
    for size in range(2, min(bounds.family_bound, len(members)) + 1):
        for combo in itertools.combinations(members, size):
            family = list(combo)
            intersection = SymbolicSet.universe()
            for h in family:
                intersection = intersection.intersect(h.support)
            if not intersection.cardinality().is_finite:
                continue
            stream = shared_presentation_family(family)
            if stream is None:
                continue
            return Verdict(
                NO,
                mechanism="finite-intersection-obstruction",
                witness={
                    "family": [h.id for h in family],
                    "intersection": intersection.literal(),
                    "shared_stream": stream.provenance,
                },
            )
    return None


def _txt_gen_verdict(cls: HypothesisClass) -> Verdict:
    if all(h.support.cardinality().is_infinite for h in cls.members):
        return Verdict(YES, mechanism="uus")
    return Verdict(UNKNOWN, mechanism="uus-fails")


def classify(cls: HypothesisClass, bounds: Bounds | None = None) -> HierarchyVerdict:
    """Four-way classification with witnesses, degraded only to Unknown.

    Bound insufficiency never produces a wrong answer: verdicts the search
    cannot certify come back Unknown with a note.
    """
    bounds = bounds or Bounds()
    txt_id = _txt_id_verdict(cls, bounds)
    ctr_id = _ctr_id_verdict(cls, txt_id)
    ctr_gen = _ctr_gen_verdict(cls, ctr_id, bounds)
    txt_gen = _txt_gen_verdict(cls)
    verdict = HierarchyVerdict(cls.describe(), txt_id, ctr_id, ctr_gen, txt_gen, bounds)
    _check_diamond(verdict)
    return verdict


def _check_diamond(v: HierarchyVerdict) -> None:
    if v.ctr_id.status == YES:
        if v.txt_id.status != YES:
            raise AssertionError("contrastive identification implies text identification")
        if v.ctr_gen.status != YES:
            raise AssertionError("contrastive identification implies contrastive generation")
    # On unbounded-support classes (txt_gen yes exactly then), anything
    # identifiable or generatable sits below text generation.
    if v.txt_gen.status == YES:
        return
    if YES in (v.ctr_gen.status, v.txt_id.status) and v.txt_gen.status == NO:
        raise AssertionError("diamond inclusions violated: lower corner yes, top no")


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class Report:
    """A reproducible experiment: named checks against frozen expectations.

    The regenerated content is deterministic; elapsed_s is the one field
    that varies between runs.
    """

    title: str
    checks: tuple[Check, ...]
    payload: dict = field(default_factory=dict)
    elapsed_s: float | None = None

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": "crosslimit-report/1",
            "title": self.title,
            "ok": self.ok,
            "checks": [check.to_json() for check in self.checks],
            "payload": self.payload,
            "elapsed_s": self.elapsed_s,
        }

    def diff_lines(self) -> list[str]:
        return [
            f"{check.name}: expected {check.expected!r}, got {check.actual!r}"
            for check in self.checks
            if not check.ok
        ]


def emit_report(report: Report, fmt: str = "json", trace_rows: tuple[dict, ...] = ()) -> str:
    """Serialize a report deterministically in one of the three formats."""
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    if fmt == "text-summary":
        lines = [f"{report.title}: {'ok' if report.ok else 'FAILED'}"]
        for check in report.checks:
            mark = "pass" if check.ok else "FAIL"
            lines.append(f"  [{mark}] {check.name}")
        lines.extend(f"  ! {line}" for line in report.diff_lines())
        return "\n".join(lines) + "\n"
    if fmt == "csv-trace":
        rows = trace_rows or report.payload.get("trace", ())
        if not rows:
            raise ValueError("report carries no per-step trace to emit as CSV")
        out = io.StringIO()
        fields = sorted({key for row in rows for key in row})
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return out.getvalue()
    raise ValueError(f"unknown format {fmt!r}; use json, csv-trace or text-summary")


def _csv_cell(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    return value


# ----------------------------------------------------------------------
# worked-example reproductions
# ----------------------------------------------------------------------

def reproduce(example_id: str) -> Report:
    """Regenerate a stored worked example and diff against expectations."""
    builders = {
        "fig1": _reproduce_four_point,
        "ex61": _reproduce_absence_trace,
        "exD2": _reproduce_three_cell_family,
        "diamond": _reproduce_diamond,
    }
    if example_id not in builders:
        raise ValueError(f"unknown example {example_id!r}; choose from {sorted(builders)}")
    started = time.perf_counter()
    report = builders[example_id]()
    return Report(report.title, report.checks, report.payload,
                  elapsed_s=round(time.perf_counter() - started, 6))


def _reproduce_four_point() -> Report:
    h = Hypothesis("h", SymbolicSet.finite({1, 2}))
    g = Hypothesis("g", SymbolicSet.finite({1, 3}))
    regions = four_regions(h, g)
    edges = common_crossing_edges(h, g, range(1, 5))
    vertex_set = gamma_vertex_set(h, g)
    checks = (
        Check("region A", "mod 1 { } + { 1 }", regions.both.literal()),
        Check("region B", "mod 1 { } + { 2 }", regions.first_only.literal()),
        Check("region C", "mod 1 { } + { 3 }", regions.second_only.literal()),
        Check("common crossing edges on the four points",
              ["{1,4}", "{2,3}"], sorted(str(e) for e in edges)),
        Check("all four points are coverable",
              True, all(vertex_set.contains(x) for x in (1, 2, 3, 4))),
    )
    return Report("four-point crossing configuration", checks)


def _reproduce_absence_trace() -> Report:
    family = CoSingletonClass()
    target = family.member(3)
    stream = corrupt(canonical_contrastive(target), [(3, Pair.of(0, 4))])
    learner = AbsenceCountIdentifier(family)
    state = learner.initial()
    prefix = stream.prefix(6)
    for pair in prefix.items:
        state = learner.advance(state, pair)
    counts = learner.absence_counts(state)
    report = validate(prefix, target, horizon=6)
    checks = (
        Check("absence counts after six pairs",
              {0: 4, 1: 5, 2: 5, 3: 1, 4: 4, 5: 5}, counts),
        Check("output", "h3", learner.read(state).id),
        Check("corrupted indices", (3,), report.xor_violations),
    )
    return Report(
        "absence-count trace on a one-corrupted star",
        checks,
        payload={"prefix": [str(p) for p in prefix.items]},
    )


def _reproduce_three_cell_family() -> Report:
    cls = six_cell_class()
    family = list(cls.members)
    cells = pattern_cells(family)
    realized = sorted(cells.realized())
    triple = SymbolicSet.universe()
    for h in family:
        triple = triple.intersect(h.support)
    pairwise_infinite = all(
        family[i].support.intersect(family[j].support).cardinality().is_infinite
        for i in range(3)
        for j in range(i + 1, 3)
    )
    stream = shared_presentation_family(family)
    clean = stream is not None and all(
        validate(stream.prefix(30), h, horizon=12).clean for h in family
    )
    checks = (
        Check("realized patterns", [
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0),
        ], realized),
        Check("triple intersection empty", True, triple.is_empty()),
        Check("pairwise intersections infinite", True, pairwise_infinite),
        Check("shared presentation validates for all members", True, clean),
    )
    return Report("three-hypothesis six-cell family", checks)


def _reproduce_diamond() -> Report:
    from .classes import (
        augmented_class,
        disjoint_support_class,
        overlapping_cover_class,
        punctured_class,
    )

    expectations = {
        "disjoint": (NO, YES, NO, YES),
        "punctured": (NO, NO, YES, YES),
        "augmented": (NO, YES, YES, YES),
        "overlap-cover": (YES, YES, YES, YES),
    }
    built = {
        "disjoint": disjoint_support_class(),
        "punctured": punctured_class(8),
        "augmented": augmented_class(8),
        "overlap-cover": overlapping_cover_class(),
    }
    checks = []
    verdicts = {}
    for name, cls in built.items():
        verdict = classify(cls)
        verdicts[name] = verdict.to_json()
        checks.append(Check(f"{name} corner", expectations[name], verdict.corner()))
    return Report("diamond corners", tuple(checks), payload={"verdicts": verdicts})

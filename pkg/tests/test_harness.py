"""Classification verdicts, worked-example reproductions, report formats."""

from __future__ import annotations

import json

import pytest

from crosslimit.classes import (
    augmented_class,
    block_class,
    co_singleton_class,
    disjoint_support_class,
    overlapping_cover_class,
    pinned_core_class,
    punctured_class,
    six_cell_class,
)
from crosslimit.crossing import shared_presentation_family
from crosslimit.harness import (
    NO,
    UNKNOWN,
    YES,
    Bounds,
    Check,
    Report,
    classify,
    emit_report,
    reproduce,
)
from crosslimit.space import SymbolicSet


def test_classify_disjoint_corner():
    verdict = classify(disjoint_support_class())
    assert verdict.ctr_id.status == NO
    assert verdict.ctr_id.witness["regime"] == "disjoint"
    assert verdict.txt_id.status == YES
    assert verdict.ctr_gen.status == NO
    assert verdict.ctr_gen.mechanism == "finite-intersection-obstruction"
    assert verdict.ctr_gen.witness["family"] == ["hA", "hB"]
    assert verdict.txt_gen.status == YES


def test_classify_punctured_corner():
    verdict = classify(punctured_class(8))
    assert verdict.txt_id.status == NO
    assert verdict.txt_id.mechanism == "no-finite-telltale"
    assert verdict.ctr_gen.status == YES
    assert verdict.ctr_gen.mechanism == "eventual-core"
    assert verdict.ctr_id.status == NO
    assert verdict.txt_gen.status == YES


def test_classify_augmented_corner():
    verdict = classify(augmented_class(8))
    assert verdict.ctr_gen.status == YES
    assert verdict.ctr_gen.mechanism == "safe-core"
    assert verdict.ctr_id.status == NO
    assert verdict.ctr_id.witness["regime"] == "non-covering"
    assert verdict.txt_id.status == YES


def test_classify_overlap_cover_corner():
    verdict = classify(overlapping_cover_class())
    assert verdict.ctr_id.status == YES
    assert verdict.txt_id.status == YES
    assert verdict.ctr_gen.status == YES
    assert verdict.txt_gen.status == YES


def test_classify_six_cell_obstruction_is_triple():
    verdict = classify(six_cell_class())
    assert verdict.ctr_gen.status == NO
    assert verdict.ctr_gen.witness["family"] == ["h1", "h2", "h3"]
    assert verdict.ctr_id.status == NO


def test_classify_block_class():
    verdict = classify(block_class(2, 3))
    assert verdict.txt_id.status == YES
    assert verdict.ctr_id.status == NO
    assert verdict.ctr_gen.status == YES  # safe core A
    assert verdict.ctr_gen.mechanism == "safe-core"


def test_classify_pinned_core_uses_dimension():
    verdict = classify(pinned_core_class(3, (0,), (1,)))
    assert verdict.ctr_gen.status == YES
    assert verdict.ctr_gen.mechanism == "finite-dimension"
    assert verdict.ctr_gen.witness["dimension"] == 1


def test_classify_never_claims_both_sides():
    # every zoo member classifies without tripping the consistency guards
    for cls in (
        disjoint_support_class(), punctured_class(6), augmented_class(6),
        block_class(1, 3), six_cell_class(), overlapping_cover_class(),
        co_singleton_class().explicit_slice(4), pinned_core_class(3, (0, 3), (1,)),
    ):
        verdict = classify(cls)
        assert verdict.corner()  # diamond check ran inside classify


def test_classify_unknown_on_insufficient_horizon():
    verdict = classify(augmented_class(4), Bounds(horizon=2))
    assert verdict.txt_id.status == UNKNOWN
    assert verdict.ctr_id.status == NO  # a barrier pair exists regardless


def test_reproduce_four_point():
    report = reproduce("fig1")
    assert report.ok, report.diff_lines()


def test_reproduce_absence_trace():
    report = reproduce("ex61")
    assert report.ok, report.diff_lines()


def test_reproduce_three_cell_family():
    report = reproduce("exD2")
    assert report.ok, report.diff_lines()


def test_reproduce_diamond():
    report = reproduce("diamond")
    assert report.ok, report.diff_lines()


def test_reproduce_rejects_unknown_id():
    with pytest.raises(ValueError):
        reproduce("fig9")


def test_reproduce_is_deterministic():
    first = reproduce("exD2").to_json()
    second = reproduce("exD2").to_json()
    first.pop("elapsed_s")
    second.pop("elapsed_s")
    assert first == second


def test_no_verdicts_replay_through_their_witnesses():
    # a barrier witness re-verifies through eliminable; an obstruction
    # witness re-verifies through the shared-presentation builder
    from crosslimit.crossing import eliminable

    for cls in (disjoint_support_class(), augmented_class(6), six_cell_class()):
        verdict = classify(cls)
        if verdict.ctr_id.status == NO and verdict.ctr_id.mechanism == "barrier-pair":
            first, second = verdict.ctr_id.witness["pair"]
            replay = eliminable(cls.by_id(first), cls.by_id(second))
            assert not replay.eliminable
            assert replay.regime == verdict.ctr_id.witness["regime"]
        if verdict.ctr_gen.status == NO:
            ids = verdict.ctr_gen.witness["family"]
            family = [cls.by_id(i) for i in ids]
            stream = shared_presentation_family(family)
            assert stream is not None
            intersection = SymbolicSet.universe()
            for h in family:
                intersection = intersection.intersect(h.support)
            assert intersection.cardinality().is_finite


def test_emit_report_formats():
    report = Report(
        "demo",
        (Check("one", 1, 1), Check("two", 2, 3)),
        payload={"trace": [{"step": 1, "output": 4}, {"step": 2, "output": 5}]},
    )
    blob = emit_report(report, "json")
    parsed = json.loads(blob)
    assert parsed["schema"] == "crosslimit-report/1"
    assert parsed["ok"] is False
    text = emit_report(report, "text-summary")
    assert "FAIL" in text and "demo" in text
    csv_text = emit_report(report, "csv-trace")
    assert csv_text.splitlines()[0] == "output,step"
    with pytest.raises(ValueError):
        emit_report(report, "yaml")
    with pytest.raises(ValueError):
        emit_report(Report("no-trace", ()), "csv-trace")

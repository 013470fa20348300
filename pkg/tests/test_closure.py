"""Closure operators: version spaces, hollowness oracle, dimension search."""

from __future__ import annotations

import itertools
import random

from conftest import random_proper_support
from crosslimit.classes import (
    Hypothesis,
    HypothesisClass,
    augmented_class,
    co_singleton_class,
    disjoint_support_class,
    pinned_core_class,
    punctured_class,
    punctured_hole,
    six_cell_class,
)
from crosslimit.closure import (
    AT_LEAST,
    EXACT,
    INFINITE,
    ClosureResult,
    EdgeSet,
    _bounded_search_dimension,
    closure_dimension,
    contrastive_closure,
    edge_version_space,
    is_hollow,
    positive_closure,
    safe_set,
)
from crosslimit.space import SymbolicSet
from crosslimit.streams import Pair, canonical_contrastive, crosses, sampled_contrastive

EVENS = SymbolicSet.residue_class(2, {0})


def ladder_edges(n: int) -> EdgeSet:
    """The n-rung puncture ladder: each hole paired with the least odd."""
    return EdgeSet.of(Pair.of(punctured_hole(i), 1) for i in range(1, n + 1))


def test_positive_closure_punctured_truncation():
    cls = punctured_class(4)
    out = positive_closure(cls, [punctured_hole(1)])
    expected = EVENS.difference(SymbolicSet.finite({2, 4, 6}))
    assert out.value == expected


def test_positive_closure_empty_and_bottom():
    cls = punctured_class(3)
    assert positive_closure(cls, []).value == EVENS.difference(SymbolicSet.finite({0, 2, 4}))
    assert positive_closure(cls, [1]).is_bottom  # odd: in no support


def test_edge_version_space_cosingleton_star():
    cls = co_singleton_class().explicit_slice(5)
    vs = edge_version_space(cls, EdgeSet.of([Pair.of(2, 4)]))
    assert [h.id for h in vs] == ["h2", "h4"]
    assert edge_version_space(cls, EdgeSet.of([])) == list(cls.members)


def test_edge_version_space_punctured_excludes_touched_hole():
    cls = punctured_class(4)
    vs = edge_version_space(cls, EdgeSet.of([Pair.of(0, 1)]))
    assert [h.id for h in vs] == ["h_inf", "h2", "h3", "h4"]


def test_contrastive_closure_punctured_follows_infinite_family():
    cls = punctured_class(10)
    for n in (1, 3, 10):
        out = contrastive_closure(cls, ladder_edges(n))
        assert out.value == SymbolicSet.finite(punctured_hole(i) for i in range(1, n + 1))


def test_contrastive_closure_bottom():
    cls = disjoint_support_class()
    # {0,2} crosses neither member
    out = contrastive_closure(cls, EdgeSet.of([Pair.of(0, 2)]))
    assert out.is_bottom


def test_safe_set_contains_augmented_core():
    cls = augmented_class(5)
    base = cls.by_id("h_inf").support
    for target in cls.members:
        prefix = sampled_contrastive(target, seed=7, horizon=30).prefix(20)
        out = safe_set(cls, prefix)
        assert not out.is_bottom
        assert base.is_subset(out.value)
        assert out.value.is_subset(target.support)


def test_is_hollow_punctured_ladder():
    cls = punctured_class(10)
    for n in range(1, 11):
        assert is_hollow(cls, ladder_edges(n))


def test_is_hollow_false_on_infinite_common_core():
    cls = augmented_class(4)
    edge = EdgeSet.of([Pair.of(0, 2)])  # 0 in A, 2 in the uncovered region
    assert not is_hollow(cls, edge)


def test_is_hollow_false_on_empty_version_space():
    cls = disjoint_support_class()
    assert not is_hollow(cls, EdgeSet.of([Pair.of(0, 2)]))


def _hollow_oracle(cls: HypothesisClass, edge_set: EdgeSet) -> bool:
    """Pointwise hollowness: enumerate instead of symbolic set operations.

    The horizon shows 2|E|+1 elements of every nonempty membership cell, so
    an escape from V(E) below it exists iff one exists at all.
    """
    vs = [h for h in cls.members if all(crosses(h, p) for p in edge_set.edges)]
    if not vs:
        return False
    depth = 2 * len(edge_set) + 1
    horizon = max(edge_set.vertices(), default=0) + 1
    for alpha in itertools.product((0, 1), repeat=len(cls.members)):
        found, x = 0, 0
        while found < depth and x < 500:
            if all(h.contains(x) == bool(b) for h, b in zip(cls.members, alpha)):
                found += 1
                horizon = max(horizon, x + 1)
            x += 1
    verts = edge_set.vertices()
    for x in range(horizon):
        if all(h.contains(x) for h in vs) and x not in verts:
            return False
    return True


def test_is_hollow_matches_pointwise_oracle():
    rng = random.Random(41)
    for _ in range(80):
        members = tuple(
            Hypothesis(f"h{i}", random_proper_support(rng, max_modulus=4, element_bound=12))
            for i in range(rng.randint(2, 3))
        )
        if len({h.support for h in members}) != len(members):
            continue
        cls = HypothesisClass(members)
        n_edges = rng.randint(0, 3)
        pairs = set()
        while len(pairs) < n_edges:
            x, y = rng.randrange(12), rng.randrange(12)
            if x != y:
                pairs.add(Pair.of(x, y))
        edge_set = EdgeSet.of(pairs)
        assert is_hollow(cls, edge_set) == _hollow_oracle(cls, edge_set), (
            [h.support.literal() for h in members], str(edge_set))


def test_monotonicity_of_version_space_and_closure():
    rng = random.Random(42)
    for _ in range(60):
        members = tuple(
            Hypothesis(f"h{i}", random_proper_support(rng, max_modulus=4, element_bound=12))
            for i in range(3)
        )
        if len({h.support for h in members}) != 3:
            continue
        cls = HypothesisClass(members)
        pairs = []
        while len(pairs) < 4:
            x, y = rng.randrange(12), rng.randrange(12)
            if x != y and Pair.of(x, y) not in pairs:
                pairs.append(Pair.of(x, y))
        small, big = EdgeSet.of(pairs[:2]), EdgeSet.of(pairs)
        vs_small = {h.id for h in edge_version_space(cls, small)}
        vs_big = {h.id for h in edge_version_space(cls, big)}
        assert vs_big <= vs_small
        c_small, c_big = contrastive_closure(cls, small), contrastive_closure(cls, big)
        if not c_small.is_bottom and not c_big.is_bottom:
            assert c_small.value.is_subset(c_big.value)


def test_target_stays_in_version_space_and_safe_set_is_sound():
    cls = augmented_class(4)
    for target in cls.members:
        stream = canonical_contrastive(target)
        for n in (1, 5, 12):
            prefix = stream.prefix(n)
            edge_set = EdgeSet.from_prefix(prefix)
            assert target.id in {h.id for h in edge_version_space(cls, edge_set)}
            out = safe_set(cls, prefix)
            assert out.value.is_subset(target.support)


def test_dimension_punctured_reports_lower_bound():
    cls = punctured_class(10)
    report = closure_dimension(cls, max_size=10, vertex_horizon=24)
    assert report.outcome == AT_LEAST
    assert report.dimension == 10
    assert report.witness is not None and len(report.witness) == 10
    assert is_hollow(cls, report.witness)


def test_dimension_cosingleton_slice_exact_zero():
    for count in (2, 4):
        report = closure_dimension(co_singleton_class().explicit_slice(count))
        assert report.outcome == EXACT
        assert report.dimension == 0
        assert report.witness is None  # no hollow edge sets at all


def test_dimension_single_infinite_hypothesis():
    cls = HypothesisClass((Hypothesis("h", EVENS),))
    report = closure_dimension(cls)
    assert report.outcome == EXACT and report.dimension == 0 and report.witness is None


def test_dimension_disjoint_and_six_cell_infinite():
    for cls in (disjoint_support_class(), six_cell_class()):
        report = closure_dimension(cls)
        assert report.outcome == INFINITE
        assert report.witness is not None
        assert is_hollow(cls, report.witness)
        assert report.infinite_description


def test_dimension_augmented_exact_zero():
    report = closure_dimension(augmented_class(4))
    assert report.outcome == EXACT and report.dimension == 0


def test_dimension_pinned_core_formula():
    cases = [
        (3, (0,), (1,)),          # dimension 1
        (3, (0, 3), (1,)),        # dimension 2
        (3, (0,), (1, 4, 7)),     # dimension 3
        (4, (0, 1), (2, 3)),      # dimension 4
        (3, (), (1, 2)),          # dimension 0, empty set hollow
    ]
    for span, core, anchors in cases:
        cls = pinned_core_class(span, core, anchors)
        report = closure_dimension(cls)
        assert report.outcome == EXACT
        assert report.dimension == len(core) * len(anchors), (span, core, anchors)
        if report.dimension >= 1:
            assert len(report.witness) == report.dimension
            assert is_hollow(cls, report.witness)
        else:
            assert report.witness is not None and len(report.witness) == 0
            assert is_hollow(cls, report.witness)


def test_dimension_exact_agrees_with_bounded_search():
    cases = [
        pinned_core_class(3, (0,), (1,)),
        pinned_core_class(3, (0, 3), (1,)),
        co_singleton_class().explicit_slice(3),
    ]
    for cls in cases:
        exact = closure_dimension(cls)
        searched = _bounded_search_dimension(cls, max_size=4, vertex_horizon=10, budget=120_000)
        assert searched.outcome == AT_LEAST
        assert searched.dimension == exact.dimension
        if searched.dimension and searched.witness is not None:
            assert is_hollow(cls, searched.witness)


def test_dimension_cell_analysis_cross_validates_with_search():
    # two independent procedures: the exact cell analysis and the guided
    # bounded search must agree on random small classes
    rng = random.Random(99)
    checked = 0
    while checked < 12:
        members = tuple(
            Hypothesis(f"h{i}", random_proper_support(rng, max_modulus=4, element_bound=12))
            for i in range(rng.randint(2, 3))
        )
        if len({h.support for h in members}) != len(members):
            continue
        checked += 1
        cls = HypothesisClass(members)
        cell = closure_dimension(cls)
        search = _bounded_search_dimension(cls, max_size=4, vertex_horizon=12, budget=25_000)
        if search.witness is not None:
            assert is_hollow(cls, search.witness)
        if cell.outcome == EXACT:
            assert search.dimension == min(cell.dimension, 4), (
                [h.support.literal() for h in members], str(cell), str(search))
        else:
            assert cell.outcome == INFINITE
            assert search.dimension == 4, (
                [h.support.literal() for h in members], str(cell), str(search))


def test_dimension_witnesses_reverify():
    for cls in (punctured_class(6), pinned_core_class(3, (0, 3), (1,))):
        report = closure_dimension(cls, max_size=6)
        if report.witness is not None:
            assert is_hollow(cls, report.witness)


def test_edge_set_api():
    e = EdgeSet.of([Pair.of(0, 1), Pair.of(2, 5)])
    assert len(e) == 2
    assert e.vertices() == frozenset({0, 1, 2, 5})
    assert e.vertex_set() == SymbolicSet.finite({0, 1, 2, 5})
    assert ClosureResult.bottom().is_bottom

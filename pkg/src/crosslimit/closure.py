"""Edge-induced version spaces, contrastive closure, hollow sets, dimension.

A finite edge set E induces the version space of hypotheses whose cut every
edge crosses; the contrastive closure of E is the intersection of their
supports (bottom when the version space is empty).  E is hollow when the
version space is nonempty yet the closure adds nothing outside E's own
vertices; the closure dimension is the supremum of hollow-set sizes, and its
finiteness is exactly what uniform generation from pair data needs.

Two evaluation modes:

* explicit classes: the member tuple is the whole class and everything is an
  exact finite computation over symbolic sets.
* punctured family classes: the member list is a truncation of an infinite
  one-point-puncture family.  A finite edge set only ever interacts with
  finitely many punctures (those whose hole is an edge vertex), so version
  spaces and closures over the full infinite family are computed in closed
  form from the family descriptor.  Without this, every truncation would
  report infinite closures where the infinite family has finite ones.

The dimension search is likewise two-layered.  For explicit classes of at
most PATTERN_BOUND members, the membership-pattern cells reduce the
dimension to a finite computation: a hollow set with a vertex in an infinite
cell can be regrown edge by edge (fresh same-cell vertices never change the
version space), so the dimension is infinite as soon as such a set exists;
otherwise all hollow sets live inside the finitely many finite cells and can
be counted exactly.  Family-backed classes fall back to a bounded
hollow-first search that reports a certified lower bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classes import Hypothesis, HypothesisClass
from .space import SymbolicSet
from .streams import CONTRASTIVE, Pair, Prefix, crosses

EXACT = "exact"
AT_LEAST = "at-least"
INFINITE = "infinite"


@dataclass(frozen=True)
class EdgeSet:
    """A finite set of distinct unordered pairs."""

    edges: frozenset[Pair]

    @staticmethod
    def of(pairs) -> "EdgeSet":
        return EdgeSet(frozenset(pairs))

    @staticmethod
    def from_prefix(prefix: Prefix) -> "EdgeSet":
        if prefix.kind != CONTRASTIVE:
            raise ValueError(f"edge sets come from contrastive prefixes, not {prefix.kind!r}")
        return EdgeSet(frozenset(prefix.items))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for pair in self.edges:
            out.update(pair.elements())
        return frozenset(out)

    def vertex_set(self) -> SymbolicSet:
        return SymbolicSet.finite(self.vertices())

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in sorted(self.edges)) + "}"


@dataclass(frozen=True)
class ClosureResult:
    """A closure value: a symbolic set, or bottom when no hypothesis fits."""

    value: SymbolicSet | None

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    @staticmethod
    def bottom() -> "ClosureResult":
        return ClosureResult(None)

    def __str__(self) -> str:
        return "bottom" if self.is_bottom else self.value.literal()


# ----------------------------------------------------------------------
# positive-data baseline
# ----------------------------------------------------------------------

def positive_closure(cls: HypothesisClass, xs: list[int]) -> ClosureResult:
    """Intersect the supports of all members containing every given positive."""
    fitting = [
        h for h in cls.members if all(h.contains(x) for x in xs)
    ]
    if not fitting:
        return ClosureResult.bottom()
    out = SymbolicSet.universe()
    for h in fitting:
        out = out.intersect(h.support)
    return ClosureResult(out)


# ----------------------------------------------------------------------
# edge-induced version spaces and closures
# ----------------------------------------------------------------------

def edge_version_space(cls: HypothesisClass, edge_set: EdgeSet) -> list[Hypothesis]:
    """The enumerated members crossed by every edge.

    For family-backed classes this filters the explicit truncation; the
    closure operations below additionally account for the family tail.
    """
    return [
        h for h in cls.members
        if all(crosses(h, pair) for pair in edge_set.edges)
    ]


def _is_punctured(cls: HypothesisClass) -> bool:
    return cls.family is not None and cls.family.kind == "punctured"


def _punctured_base(cls: HypothesisClass) -> SymbolicSet:
    return cls.by_id("h_inf").support


@dataclass(frozen=True)
class _PuncturedState:
    """Version-space summary for the infinite punctured family.

    `limit_and_tail` covers the limit hypothesis and every puncture whose
    hole avoids the edge vertices (they all satisfy the same crossing
    constraints); `passing_holes` are the holes of edge-incident punctures
    that do cross every edge, `failing_holes` the ones that do not.
    """

    limit_and_tail: bool
    passing_holes: frozenset[int]
    failing_holes: frozenset[int]

    @property
    def nonempty(self) -> bool:
        return self.limit_and_tail or bool(self.passing_holes)


def _punctured_state(cls: HypothesisClass, edge_set: EdgeSet) -> _PuncturedState:
    base = _punctured_base(cls)
    edges = list(edge_set.edges)
    limit_ok = all(
        base.contains(p.lo) != base.contains(p.hi) for p in edges
    )
    passing: set[int] = set()
    failing: set[int] = set()
    for hole in edge_set.vertices():
        if not base.contains(hole):
            continue  # not a puncture hole; only base elements get punctured
        support = base.difference(SymbolicSet.finite({hole}))
        if all(support.contains(p.lo) != support.contains(p.hi) for p in edges):
            passing.add(hole)
        else:
            failing.add(hole)
    return _PuncturedState(limit_ok, frozenset(passing), frozenset(failing))


def _punctured_closure(cls: HypothesisClass, edge_set: EdgeSet) -> ClosureResult:
    state = _punctured_state(cls, edge_set)
    if not state.nonempty:
        return ClosureResult.bottom()
    base = _punctured_base(cls)
    if state.limit_and_tail:
        # Every untouched puncture participates, removing all of the base
        # except the failing holes; only those failing holes survive.
        return ClosureResult(SymbolicSet.finite(state.failing_holes))
    out = base.difference(SymbolicSet.finite(state.passing_holes))
    return ClosureResult(out)


def contrastive_closure(cls: HypothesisClass, edge_set: EdgeSet) -> ClosureResult:
    """Intersection of supports over the edge-induced version space.

    Family-backed punctured classes are evaluated over the infinite family
    (closed form); everything else over the explicit member tuple.
    """
    if _is_punctured(cls):
        return _punctured_closure(cls, edge_set)
    fitting = edge_version_space(cls, edge_set)
    if not fitting:
        return ClosureResult.bottom()
    out = SymbolicSet.universe()
    for h in fitting:
        out = out.intersect(h.support)
    return ClosureResult(out)


def safe_set(cls: HypothesisClass, prefix: Prefix) -> ClosureResult:
    """Closure of the distinct observed pairs: certified positives so far."""
    return contrastive_closure(cls, EdgeSet.from_prefix(prefix))


def is_hollow(cls: HypothesisClass, edge_set: EdgeSet) -> bool:
    """Nonempty version space whose closure stays inside the edge vertices."""
    if _is_punctured(cls):
        state = _punctured_state(cls, edge_set)
        if not state.nonempty:
            return False
        closure = _punctured_closure(cls, edge_set)
    else:
        fitting = edge_version_space(cls, edge_set)
        if not fitting:
            return False
        closure = contrastive_closure(cls, edge_set)
    return closure.value.difference(edge_set.vertex_set()).is_empty()


# ----------------------------------------------------------------------
# closure dimension
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DimensionReport:
    """Outcome of the hollow-set-size search.

    `exact` carries the dimension and, when it is positive (or zero with an
    empty global support intersection), a verified maximum hollow witness.
    `at-least` is an honest lower bound from the bounded search with its
    witness.  `infinite` certifies unbounded hollow sets via a growable
    witness: the starter edge set plus an edge type with an infinite cell.
    """

    outcome: str
    dimension: int | None
    witness: EdgeSet | None
    search_bounds: tuple[int, int]
    infinite_description: str | None = None
    notes: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.outcome == EXACT:
            return f"exact({self.dimension})"
        if self.outcome == AT_LEAST:
            return f"at-least({self.dimension})"
        return f"infinite [{self.infinite_description}]"


_CELL_BOUND = 6


def _full_pattern_cells(members: tuple[Hypothesis, ...]) -> dict[tuple[int, ...], SymbolicSet]:
    cells: dict[tuple[int, ...], SymbolicSet] = {}
    for alpha in itertools.product((0, 1), repeat=len(members)):
        cell = SymbolicSet.universe()
        for bit, h in zip(alpha, members):
            cell = cell.intersect(h.support if bit else h.support.complement())
        if not cell.is_empty():
            cells[alpha] = cell
    return cells


def _complementary_on(alpha: tuple[int, ...], beta: tuple[int, ...], indices) -> bool:
    return all(alpha[i] != beta[i] for i in indices)


def closure_dimension(
    cls: HypothesisClass,
    max_size: int = 8,
    vertex_horizon: int = 24,
    search_budget: int = 200_000,
) -> DimensionReport:
    """Largest hollow edge set size, exactly when certifiable.

    Explicit classes of at most 6 members get the exact cell analysis; other
    classes get a bounded hollow-first search whose result is a verified
    lower bound (never a wrong exact claim).
    """
    if not _is_punctured(cls) and 1 <= len(cls.members) <= _CELL_BOUND:
        return _cell_dimension(cls, max_size, vertex_horizon)
    return _bounded_search_dimension(cls, max_size, vertex_horizon, search_budget)


def _cell_dimension(cls: HypothesisClass, max_size: int, vertex_horizon: int) -> DimensionReport:
    members = cls.members
    cells = _full_pattern_cells(members)
    indices = range(len(members))
    best_size = None  # None: no hollow set at all
    best_edges: EdgeSet | None = None

    for r in range(1, len(members) + 1):
        for subset in itertools.combinations(indices, r):
            closure = SymbolicSet.universe()
            for i in subset:
                closure = closure.intersect(members[i].support)
            if closure.cardinality().is_infinite:
                continue  # any edge set with this version space has infinite closure
            menu = [
                (a, b)
                for a, b in itertools.combinations(cells.keys(), 2)
                if _complementary_on(a, b, subset)
            ]
            # every forced positive needs an incident menu edge
            core = sorted(closure.plus)
            coverable = all(
                any(x_alpha in pair for pair in menu)
                for x in core
                for x_alpha in [_pattern_of(cells, x)]
            )
            if not coverable:
                continue
            infinite_pair = next(
                (
                    (a, b)
                    for a, b in menu
                    if cells[a].cardinality().is_infinite or cells[b].cardinality().is_infinite
                ),
                None,
            )
            if infinite_pair is not None:
                witness = _cover_witness(cells, closure, menu)
                ids = [members[i].id for i in subset]
                desc = (
                    f"version space {{{', '.join(ids)}}} keeps closure "
                    f"{closure.literal()} while edges between cells "
                    f"{infinite_pair[0]} and {infinite_pair[1]} can be added without bound"
                )
                return DimensionReport(
                    INFINITE, None, witness, (max_size, vertex_horizon),
                    infinite_description=desc,
                    notes=("certified by cell analysis",),
                )
            total = sum(len(cells[a].plus) * len(cells[b].plus) for a, b in menu)
            if best_size is None or total > best_size:
                best_size = total
                best_edges = _all_menu_edges(cells, menu)

    if best_size is None:
        return DimensionReport(
            EXACT, 0, None, (max_size, vertex_horizon),
            notes=("certified by cell analysis; no hollow edge sets exist",),
        )
    report = DimensionReport(
        EXACT, best_size, best_edges, (max_size, vertex_horizon),
        notes=("certified by cell analysis",),
    )
    if report.witness is not None and not is_hollow(cls, report.witness):
        raise AssertionError("cell analysis produced a non-hollow witness")
    return report


def _pattern_of(cells: dict, x: int) -> tuple[int, ...]:
    for alpha, cell in cells.items():
        if cell.contains(x):
            return alpha
    raise AssertionError("cells partition X")


def _all_menu_edges(cells: dict, menu: list) -> EdgeSet:
    pairs = set()
    for a, b in menu:
        for x in cells[a].plus:
            for y in cells[b].plus:
                pairs.add(Pair.of(x, y))
    return EdgeSet.of(pairs)


def _cover_witness(cells: dict, closure: SymbolicSet, menu: list) -> EdgeSet:
    """A starter hollow set: one covering edge per forced positive."""
    pairs = set()
    for x in sorted(closure.plus):
        alpha = _pattern_of(cells, x)
        for a, b in menu:
            other = b if a == alpha else (a if b == alpha else None)
            if other is None:
                continue
            partner = cells[other].min_element()
            if partner is not None and partner != x:
                pairs.add(Pair.of(x, partner))
                break
    return EdgeSet.of(pairs)


def _bounded_search_dimension(
    cls: HypothesisClass, max_size: int, vertex_horizon: int, budget: int
) -> DimensionReport:
    """Guided depth-first search over edge sets below the vertex horizon.

    A hollow set must cover its own finite closure, so extensions are
    explored hollow ones first, then ones whose closure is finite (the only
    branches that can ever become hollow by covering forced positives), then
    the rest; branches with an empty version space are pruned.  The result
    is a lower bound: the largest verified hollow set found within bounds.
    """
    candidates = [
        Pair.of(x, y)
        for x, y in itertools.combinations(range(vertex_horizon), 2)
    ]
    candidates = [p for p in candidates if _closure_or_none(cls, EdgeSet.of([p])) is not None]
    empty = EdgeSet.of([])
    best: tuple[int, EdgeSet | None] = (0, empty) if is_hollow(cls, empty) else (0, None)
    spent = 0
    exhausted = False

    def explore(edges: set[Pair], start: int) -> None:
        nonlocal best, spent, exhausted
        if len(edges) >= max_size or exhausted:
            return
        hollow_ext, finite_ext, other_ext = [], [], []
        for idx in range(start, len(candidates)):
            if spent >= budget:
                exhausted = True
                break
            pair = candidates[idx]
            if pair in edges:
                continue
            spent += 1
            trial = EdgeSet.of(edges | {pair})
            closure = _closure_or_none(cls, trial)
            if closure is None:
                continue
            if closure.difference(trial.vertex_set()).is_empty():
                hollow_ext.append((idx, trial))
            elif closure.cardinality().is_finite:
                finite_ext.append((idx, trial))
            else:
                other_ext.append((idx, trial))
        for idx, trial in hollow_ext:
            if len(trial) > best[0] or best[1] is None:
                best = (len(trial), trial)
            if best[0] >= max_size:
                return
            explore(set(trial.edges), idx + 1)
            if best[0] >= max_size:
                return
        for idx, trial in finite_ext + other_ext:
            explore(set(trial.edges), idx + 1)
            if best[0] >= max_size or exhausted:
                return

    explore(set(), 0)
    notes = ["bounded search; dimension is a lower bound"]
    if exhausted:
        notes.append(f"search budget {budget} exhausted")
    return DimensionReport(
        AT_LEAST, best[0], best[1], (max_size, vertex_horizon), notes=tuple(notes)
    )


def _closure_or_none(cls: HypothesisClass, edge_set: EdgeSet) -> SymbolicSet | None:
    """The closure when the version space is nonempty, else None."""
    result = contrastive_closure(cls, edge_set)
    return None if result.is_bottom else result.value


def _version_space_nonempty(cls: HypothesisClass, edge_set: EdgeSet) -> bool:
    if _is_punctured(cls):
        return _punctured_state(cls, edge_set).nonempty
    return bool(edge_version_space(cls, edge_set))

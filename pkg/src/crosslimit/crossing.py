"""Crossing-edge geometry: common crossing graphs, eliminability, sharing.

For a hypothesis h, the crossing edges are the pairs with exactly one
endpoint in supp(h); a contrastive observation for h is precisely such a
pair.  For two hypotheses the pairs valid for both form the common crossing
graph, and whether one hypothesis can be ruled out from data for the other
reduces to a coverage question on that graph's vertex set.

Partitioning X by membership in the two supports into regions

    A = both,  B = first only,  C = second only,  D = neither,

an A-vertex has a common-crossing partner iff D is nonempty and a B-vertex
iff C is nonempty, which makes every verdict here exactly computable in the
set algebra.  Non-eliminability happens in exactly three regimes: the first
support is a proper subset of the second (superset), the supports are
incomparable and disjoint, or incomparable, intersecting and jointly missing
part of X (non-covering).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classes import Hypothesis
from .space import SymbolicSet
from .streams import CONTRASTIVE, Pair, Stream, crosses

#: regimes in which the second hypothesis is NOT eliminable from the first
SUPERSET = "superset"
DISJOINT = "disjoint"
NON_COVERING = "non-covering"
ELIMINABLE = "eliminable"

PATTERN_BOUND = 6  # 2^r cells are materialized symbolically


def delta_contains(h: Hypothesis, pair: Pair) -> bool:
    """True iff the pair crosses h's cut (exactly one endpoint positive)."""
    if not h.is_proper_nontrivial():
        raise ValueError(f"{h.id} is not proper nontrivial")
    return crosses(h, pair)


def _require_distinct_pair(h: Hypothesis, g: Hypothesis) -> None:
    for x in (h, g):
        if not x.is_proper_nontrivial():
            raise ValueError(f"{x.id} is not proper nontrivial")
    if h.support == g.support:
        raise ValueError(f"{h.id} and {g.id} have identical supports")


@dataclass(frozen=True)
class Regions:
    """The four-way membership partition of X for a hypothesis pair."""

    both: SymbolicSet        # A: in both supports
    first_only: SymbolicSet  # B: first support only
    second_only: SymbolicSet # C: second support only
    neither: SymbolicSet     # D: outside both

    def as_dict(self) -> dict[str, SymbolicSet]:
        return {
            "A": self.both,
            "B": self.first_only,
            "C": self.second_only,
            "D": self.neither,
        }


def four_regions(h: Hypothesis, g: Hypothesis) -> Regions:
    a, b = h.support, g.support
    return Regions(
        both=a.intersect(b),
        first_only=a.difference(b),
        second_only=b.difference(a),
        neither=a.union(b).complement(),
    )


def gamma_vertex_set(h: Hypothesis, g: Hypothesis) -> SymbolicSet:
    """Vertices incident to some pair crossing both hypotheses.

    Common-crossing edges run between A and D or between B and C, so a
    region contributes its vertices exactly when its partner region is
    nonempty.
    """
    _require_distinct_pair(h, g)
    r = four_regions(h, g)
    out = SymbolicSet.empty()
    if not r.neither.is_empty():
        out = out.union(r.both)
    if not r.second_only.is_empty():
        out = out.union(r.first_only)
    if not r.first_only.is_empty():
        out = out.union(r.second_only)
    if not r.both.is_empty():
        out = out.union(r.neither)
    return out


def common_crossing_edges(h: Hypothesis, g: Hypothesis, vertices) -> set[Pair]:
    """All pairs within a finite vertex collection crossing both hypotheses."""
    verts = sorted(set(vertices))
    return {
        Pair.of(x, y)
        for x, y in itertools.combinations(verts, 2)
        if crosses(h, Pair.of(x, y)) and crosses(g, Pair.of(x, y))
    }


@dataclass(frozen=True)
class EliminabilityVerdict:
    """Whether g can be ruled out from data for h, with the regime and witness.

    When eliminable, `witness` is an h-positive with no common-crossing
    partner (the element whose coverage forces a pair invalid for g).
    """

    eliminable: bool
    regime: str
    witness: int | None = None

    def __post_init__(self) -> None:
        barrier = self.regime in (SUPERSET, DISJOINT, NON_COVERING)
        if barrier == self.eliminable:
            raise ValueError(f"regime {self.regime!r} is inconsistent with eliminable={self.eliminable}")


def eliminable(h: Hypothesis, g: Hypothesis) -> EliminabilityVerdict:
    """Classify the pair into eliminable or one of the three barrier regimes.

    g is not eliminable from h iff (A nonempty implies D nonempty) and
    (B nonempty implies C nonempty); equivalently iff supp(h) is contained in
    the common-crossing vertex set.
    """
    _require_distinct_pair(h, g)
    r = four_regions(h, g)
    a_empty = r.both.is_empty()
    b_empty = r.first_only.is_empty()
    c_empty = r.second_only.is_empty()
    d_empty = r.neither.is_empty()

    if b_empty:
        # supp(h) strictly below supp(g); D is nonempty because g is proper
        return EliminabilityVerdict(False, SUPERSET)
    if c_empty:
        # supp(g) strictly below supp(h): B-positives have no partner
        return EliminabilityVerdict(True, ELIMINABLE, witness=r.first_only.min_element())
    # incomparable from here on
    if a_empty:
        return EliminabilityVerdict(False, DISJOINT)
    if d_empty:
        # overlapping cover: A-positives have no partner
        return EliminabilityVerdict(True, ELIMINABLE, witness=r.both.min_element())
    return EliminabilityVerdict(False, NON_COVERING)


def overlapping_cover(h: Hypothesis, g: Hypothesis) -> bool:
    """Incomparable supports that intersect and jointly cover X.

    Undefined (raises) when one support contains the other.
    """
    _require_distinct_pair(h, g)
    r = four_regions(h, g)
    if r.first_only.is_empty() or r.second_only.is_empty():
        raise ValueError(
            f"overlapping cover is defined for incomparable supports; "
            f"{h.id} and {g.id} are comparable"
        )
    return not r.both.is_empty() and r.neither.is_empty()


# ----------------------------------------------------------------------
# shared presentations
# ----------------------------------------------------------------------

def _coverage_stream(union: SymbolicSet, partner_of, provenance: str,
                     targets: tuple[Hypothesis, ...]) -> Stream:
    """Pair each element of `union` with its chosen partner, in order.

    Enumerates the union ascending when infinite; lists-and-repeats the full
    covering pair list when finite.
    """
    card = union.cardinality()
    if card.is_finite:
        elems = sorted(union.plus)
        pairs = [Pair.of(x, partner_of(x)) for x in elems]
        return Stream(CONTRASTIVE, provenance, lambda t: pairs[(t - 1) % len(pairs)], targets)
    return Stream(
        CONTRASTIVE,
        provenance,
        lambda t: Pair.of(union.nth_member(t - 1), partner_of(union.nth_member(t - 1))),
        targets,
    )


def shared_presentation_pair(h: Hypothesis, g: Hypothesis) -> Stream | None:
    """A single contrastive stream valid for both targets, when one exists.

    Exists iff supp(h) union supp(g) lies inside the common-crossing vertex
    set.  The construction pairs each support element with the least partner
    in its complementary region (A with D, B with C and symmetrically).
    """
    _require_distinct_pair(h, g)
    union = h.support.union(g.support)
    if not union.is_subset(gamma_vertex_set(h, g)):
        return None
    r = four_regions(h, g)
    min_d = r.neither.min_element()
    min_c = r.second_only.min_element()
    min_b = r.first_only.min_element()

    def partner_of(x: int) -> int:
        if r.both.contains(x):
            return min_d
        if r.first_only.contains(x):
            return min_c
        return min_b

    return _coverage_stream(
        union, partner_of, f"shared-pair({h.id},{g.id})", (h, g)
    )


# ----------------------------------------------------------------------
# membership-pattern cells and family sharing
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PatternCells:
    """The partition of X by joint membership pattern across a family.

    cells maps each bit vector (one bit per family member, 1 = positive) to
    the symbolic set of examples realizing it; the cells partition X.
    """

    hypothesis_ids: tuple[str, ...]
    cells: dict[tuple[int, ...], SymbolicSet]

    def realized(self) -> list[tuple[int, ...]]:
        return [alpha for alpha, cell in self.cells.items() if not cell.is_empty()]

    def pattern_of(self, x: int) -> tuple[int, ...]:
        for alpha, cell in self.cells.items():
            if cell.contains(x):
                return alpha
        raise AssertionError("cells must partition X")


def pattern_cells(family: list[Hypothesis]) -> PatternCells:
    if not 2 <= len(family) <= PATTERN_BOUND:
        raise ValueError(
            f"pattern cells support between 2 and {PATTERN_BOUND} hypotheses, got {len(family)}"
        )
    cells: dict[tuple[int, ...], SymbolicSet] = {}
    for alpha in itertools.product((0, 1), repeat=len(family)):
        cell = SymbolicSet.universe()
        for bit, h in zip(alpha, family):
            cell = cell.intersect(h.support if bit else h.support.complement())
        cells[alpha] = cell
    return PatternCells(tuple(h.id for h in family), cells)


def _complement_pattern(alpha: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 - b for b in alpha)


def shared_presentation_family(family: list[Hypothesis]) -> Stream | None:
    """A contrastive stream valid for every family member, when one exists.

    Exists iff every realized nonzero membership pattern has a nonempty
    complementary cell; each support element is then paired with the least
    element of the cell complementary to its own pattern.
    """
    for h in family:
        if not h.is_proper_nontrivial():
            raise ValueError(f"{h.id} is not proper nontrivial")
    cells = pattern_cells(list(family))
    zero = (0,) * len(family)
    for alpha, cell in cells.cells.items():
        if alpha == zero or cell.is_empty():
            continue
        if cells.cells[_complement_pattern(alpha)].is_empty():
            return None

    union = SymbolicSet.empty()
    for h in family:
        union = union.union(h.support)

    def partner_of(x: int) -> int:
        alpha = cells.pattern_of(x)
        return cells.cells[_complement_pattern(alpha)].min_element()

    ids = ",".join(h.id for h in family)
    return _coverage_stream(union, partner_of, f"shared-family({ids})", tuple(family))

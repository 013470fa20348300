"""Hypotheses, hypothesis classes, the witness-class zoo, and class-spec IO.

A hypothesis is a binary predicate given extensionally by its support, a
:class:`~crosslimit.space.SymbolicSet`.  Classes come in two shapes:

* explicit: an ordered finite tuple of members.  The order is the fixed
  enumeration used by every least-index tie-break in the learners.
* parametric: the co-singleton family {X minus {s} : s in X}, which is as
  large as X itself and is never enumerated; learners that work over it
  construct members on demand.

Explicit classes built from one of the infinite witness families keep a
`family` descriptor recording the construction rule and truncation level.
The closure operations use that descriptor where the truncated member list
alone would misrepresent the infinite family (see crosslimit.closure).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import lcm
from typing import Iterable

from .space import SymbolicSet, parse_set_literal

EVENS = SymbolicSet.residue_class(2, {0})
ODDS = SymbolicSet.residue_class(2, {1})


@dataclass(frozen=True)
class Hypothesis:
    """A binary hypothesis, identified by name, given by its positive set."""

    id: str
    support: SymbolicSet

    def contains(self, x: int) -> bool:
        return self.support.contains(x)

    def is_proper_nontrivial(self) -> bool:
        return not self.support.is_empty() and not self.support.complement().is_empty()

    def __str__(self) -> str:
        return f"{self.id}: {self.support.literal()}"


def is_proper_nontrivial(h: Hypothesis) -> bool:
    """Support is neither empty nor all of X (exact, via the set algebra)."""
    return h.is_proper_nontrivial()


@dataclass(frozen=True)
class FamilyInfo:
    """Construction rule behind a truncated witness class.

    `kind` names the family; `params` are its integer parameters in
    construction order (truncation level last where present).  For the
    punctured family the descriptor is what lets closure computations follow
    the infinite class instead of the truncation.
    """

    kind: str
    params: tuple[int, ...] = ()

    def describe(self) -> str:
        if self.params:
            return f"{self.kind}({', '.join(map(str, self.params))})"
        return self.kind


@dataclass(frozen=True)
class HypothesisClass:
    """An ordered, finite, explicitly enumerated class of hypotheses."""

    members: tuple[Hypothesis, ...]
    uus_claimed: bool = False
    family: FamilyInfo | None = None

    def __post_init__(self) -> None:
        ids = [h.id for h in self.members]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate hypothesis ids: {dupes}")
        if self.uus_claimed:
            for h in self.members:
                if h.support.cardinality().is_finite:
                    raise ValueError(
                        f"class claims uniformly unbounded support but "
                        f"{h.id} has finite support"
                    )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def ids(self) -> list[str]:
        return [h.id for h in self.members]

    def by_id(self, hid: str) -> Hypothesis:
        for h in self.members:
            if h.id == hid:
                return h
        raise KeyError(f"no hypothesis {hid!r} in class {self.ids()}")

    def index_of(self, h: Hypothesis) -> int:
        for i, member in enumerate(self.members):
            if member.id == h.id:
                return i
        raise KeyError(h.id)

    def global_support_intersection(self) -> SymbolicSet:
        out = SymbolicSet.universe()
        for h in self.members:
            out = out.intersect(h.support)
        return out

    def describe(self) -> str:
        base = f"{len(self.members)} hypotheses"
        if self.family is not None:
            return f"{self.family.describe()} [{base}]"
        return base


def check_uus(cls: HypothesisClass) -> bool:
    """True iff every member's support is countably infinite (exact)."""
    return all(h.support.cardinality().is_infinite for h in cls.members)


@dataclass(frozen=True)
class CoSingletonClass:
    """The parametric family {h_s : s in X} with supp(h_s) = X minus {s}.

    As large as the example space, so it is never materialized; members are
    built on demand and finite explicit slices are available for operations
    that need an enumeration.
    """

    def member(self, s: int) -> Hypothesis:
        if s < 0:
            raise ValueError("hole must be a natural number")
        return Hypothesis(f"h{s}", SymbolicSet.cofinite({s}))

    def explicit_slice(self, count: int) -> HypothesisClass:
        """The explicit class {h_s : s < count}, in hole order."""
        if count < 1:
            raise ValueError("slice needs at least one member")
        return HypothesisClass(
            tuple(self.member(s) for s in range(count)),
            uus_claimed=True,
            family=FamilyInfo("co-singleton-slice", (count,)),
        )


# ----------------------------------------------------------------------
# witness-class zoo
# ----------------------------------------------------------------------

def disjoint_support_class() -> HypothesisClass:
    """Two hypotheses with disjoint infinite supports (evens and odds)."""
    return HypothesisClass(
        (Hypothesis("hA", EVENS), Hypothesis("hB", ODDS)),
        uus_claimed=True,
        family=FamilyInfo("disjoint"),
    )


def punctured_class(truncation: int) -> HypothesisClass:
    """The limit hypothesis with support A = evens, plus one-point punctures.

    Member m (1-based) removes the m-th element of A, a_m = 2(m-1).  The
    enumeration is (h_inf, h1, ..., hM); the family descriptor records that
    punctures continue beyond the truncation.
    """
    if truncation < 2:
        raise ValueError("punctured family needs truncation >= 2")
    members = [Hypothesis("h_inf", EVENS)]
    for m in range(1, truncation + 1):
        hole = 2 * (m - 1)
        members.append(Hypothesis(f"h{m}", EVENS.difference(SymbolicSet.finite({hole}))))
    return HypothesisClass(
        tuple(members), uus_claimed=True, family=FamilyInfo("punctured", (truncation,))
    )


def punctured_hole(m: int) -> int:
    """The element removed by the m-th punctured hypothesis (1-based)."""
    if m < 1:
        raise ValueError("puncture index is 1-based")
    return 2 * (m - 1)


def augmented_class(truncation: int) -> HypothesisClass:
    """Base support A = (0 mod 3) and one-point augmentations A + {b_m}.

    b_m is the m-th element of (1 mod 3); the region (2 mod 3) is covered by
    no member, so distinct augmentations never cover X jointly.
    """
    if truncation < 2:
        raise ValueError("augmented family needs truncation >= 2")
    base = SymbolicSet.residue_class(3, {0})
    members = [Hypothesis("h_inf", base)]
    for m in range(1, truncation + 1):
        extra = 3 * (m - 1) + 1
        members.append(Hypothesis(f"h{m}", base.union(SymbolicSet.finite({extra}))))
    return HypothesisClass(
        tuple(members), uus_claimed=True, family=FamilyInfo("augmented", (truncation,))
    )


def co_singleton_class() -> CoSingletonClass:
    return CoSingletonClass()


def block_class(budget: int, count: int) -> HypothesisClass:
    """Shared base A = (0 mod 3) plus disjoint blocks of size budget+1.

    The blocks are consecutive chunks of (1 mod 3).  Under at most `budget`
    corrupted text items, no false block can ever be fully observed, which is
    what the block text identifier exploits.
    """
    if budget < 1:
        raise ValueError("block family needs budget >= 1")
    if count < 2:
        raise ValueError("block family needs at least 2 blocks")
    base = SymbolicSet.residue_class(3, {0})
    pool = SymbolicSet.residue_class(3, {1})
    size = budget + 1
    members = []
    for i in range(1, count + 1):
        block = {pool.nth_member(j) for j in range((i - 1) * size, i * size)}
        members.append(Hypothesis(f"h{i}", base.union(SymbolicSet.finite(block))))
    return HypothesisClass(
        tuple(members), uus_claimed=True, family=FamilyInfo("block", (budget, count))
    )


def block_elements(budget: int, index: int) -> frozenset[int]:
    """The elements of block `index` (1-based) in the block family."""
    pool = SymbolicSet.residue_class(3, {1})
    size = budget + 1
    return frozenset(pool.nth_member(j) for j in range((index - 1) * size, index * size))


SIX_CELL_PATTERNS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def six_cell_class() -> HypothesisClass:
    """Three hypotheses over six residue cells mod 6.

    Residue r carries membership pattern SIX_CELL_PATTERNS[r], so the six
    realized patterns are exactly the nonconstant ones: every pairwise
    support intersection is infinite while the triple intersection is empty.
    """
    members = []
    for i in range(3):
        residues = {r for r, pat in enumerate(SIX_CELL_PATTERNS) if pat[i] == 1}
        members.append(Hypothesis(f"h{i + 1}", SymbolicSet.residue_class(6, residues)))
    return HypothesisClass(tuple(members), uus_claimed=True, family=FamilyInfo("six-cell"))


def pinned_core_class(span: int, core: Iterable[int], anchors: Iterable[int]) -> HypothesisClass:
    """`span` hypotheses pinned to share exactly `core` and avoid `anchors`.

    Member i holds everything outside residue class (i mod span), plus the
    core elements, minus the anchors.  The joint support intersection is
    exactly the core, the jointly-negative region exactly the anchors, and
    (for span >= 3) the only pairs crossing every member run between core and
    anchors: the closure dimension is |core| * |anchors|, attained by the
    complete bipartite edge set between them.  With span 2 the two
    single-membership regions are mutually complementary and hollow sets
    grow without bound, so that case is rejected.
    """
    if span < 3:
        raise ValueError("pinned-core family needs span >= 3")
    core_set = SymbolicSet.finite(core)
    anchor_set = SymbolicSet.finite(anchors)
    if anchor_set.is_empty():
        raise ValueError("pinned-core family needs at least one anchor")
    if not core_set.intersect(anchor_set).is_empty():
        raise ValueError("core and anchors must be disjoint")
    members = []
    for i in range(span):
        support = (
            SymbolicSet.residue_class(span, {i}).complement()
            .union(core_set)
            .difference(anchor_set)
        )
        members.append(Hypothesis(f"h{i + 1}", support))
    core_tag = tuple(sorted(core_set.plus)) + tuple(sorted(anchor_set.plus))
    return HypothesisClass(
        tuple(members), uus_claimed=True,
        family=FamilyInfo("pinned-core", (span,) + core_tag),
    )


def overlapping_cover_class() -> HypothesisClass:
    """A small class where every incomparable pair is an overlapping cover.

    h1 and h2 overlap in {0, 1} and jointly cover X; h3 is a strict superset
    of both.  Text-identifiable with tell-tales, and the overlapping-cover
    condition makes it contrastively identifiable as well.
    """
    h1 = Hypothesis("h1", EVENS.union(SymbolicSet.finite({1})))
    h2 = Hypothesis("h2", ODDS.union(SymbolicSet.finite({0})))
    h3 = Hypothesis("h3", SymbolicSet.cofinite({5}))
    return HypothesisClass((h1, h2, h3), uus_claimed=True, family=FamilyInfo("overlap-cover"))


WITNESS_BUILDERS = {
    "disjoint": (disjoint_support_class, 0),
    "punctured": (punctured_class, 1),
    "augmented": (augmented_class, 1),
    "co-singleton": (co_singleton_class, 0),
    "block": (block_class, 2),
    "six-cell": (six_cell_class, 0),
    "overlap-cover": (overlapping_cover_class, 0),
}


def build_witness(spec: str) -> HypothesisClass | CoSingletonClass:
    """Build a witness class from a CLI-style spec `name[:p1,p2]`."""
    name, _, raw = spec.partition(":")
    name = name.strip()
    if name not in WITNESS_BUILDERS:
        raise ValueError(f"unknown witness {name!r}; choose from {sorted(WITNESS_BUILDERS)}")
    builder, arity = WITNESS_BUILDERS[name]
    params = [int(p) for p in raw.split(",") if p.strip()] if raw else []
    if len(params) != arity:
        raise ValueError(f"witness {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# ----------------------------------------------------------------------
# class-spec files
# ----------------------------------------------------------------------

class ClassSpecError(ValueError):
    pass


def save_class(cls: HypothesisClass, path: str) -> None:
    doc = {
        "space_modulus": lcm(*(h.support.modulus for h in cls.members)) if cls.members else 1,
        "hypotheses": [{"id": h.id, "support": h.support.literal()} for h in cls.members],
        "uus": cls.uus_claimed,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_class(path: str) -> HypothesisClass:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ClassSpecError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    if not isinstance(doc, dict) or "hypotheses" not in doc:
        raise ClassSpecError(f"{path}: expected an object with a 'hypotheses' list")
    members = []
    for entry in doc["hypotheses"]:
        if not isinstance(entry, dict) or "id" not in entry or "support" not in entry:
            raise ClassSpecError(f"{path}: each hypothesis needs 'id' and 'support'")
        hid = str(entry["id"])
        try:
            support = parse_set_literal(entry["support"])
        except ValueError as exc:
            raise ClassSpecError(f"{path}: hypothesis {hid!r}: {exc}") from exc
        members.append(Hypothesis(hid, support))
    uus = bool(doc.get("uus", False))
    try:
        return HypothesisClass(tuple(members), uus_claimed=uus)
    except ValueError as exc:
        raise ClassSpecError(f"{path}: {exc}") from exc

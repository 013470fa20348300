"""Decidable set algebra over the example space X = {0, 1, 2, ...}.

A set is stored as a union of residue classes modulo m, corrected by finite
exception sets:

    S = {n : n mod m in residues}  union  plus  minus  minus

This family is closed under union, intersection, complement and difference,
and membership, emptiness, finiteness, cardinality and least elements are all
exactly computable.  Every region that the crossing geometry needs (support
intersections, differences, complements) therefore has a decidable emptiness
test instead of a horizon-approximate one.

Values are immutable and canonical: operations always return the unique
smallest-modulus representation, so structural equality coincides with set
equality.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class Cardinality:
    """Exact size of a symbolic set: a finite count or countably infinite."""

    count: int | None  # None encodes countably infinite

    @staticmethod
    def finite(n: int) -> "Cardinality":
        if n < 0:
            raise ValueError("finite cardinality must be nonnegative")
        return Cardinality(n)

    @staticmethod
    def infinite() -> "Cardinality":
        return Cardinality(None)

    @property
    def is_finite(self) -> bool:
        return self.count is not None

    @property
    def is_infinite(self) -> bool:
        return self.count is None

    def __str__(self) -> str:
        return "inf" if self.count is None else str(self.count)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class SymbolicSet:
    """Subset of X given by residue classes mod m plus/minus finite exceptions.

    Invariants (checked on construction):
      * modulus >= 1 and residues is a subset of {0, ..., modulus-1};
      * no element of `plus` is congruent to a residue (additions are real);
      * every element of `minus` is congruent to a residue (removals are real);
      * plus and minus are disjoint.

    Use :meth:`build` (or the factory helpers) rather than the raw
    constructor; `build` also reduces the modulus to the canonical smallest
    one, which the algebraic operations rely on for structural equality.
    """

    modulus: int
    residues: frozenset[int]
    plus: frozenset[int]
    minus: frozenset[int]

    def __post_init__(self) -> None:
        m = self.modulus
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        if any(r < 0 or r >= m for r in self.residues):
            raise ValueError(f"residues must lie in [0, {m}): {sorted(self.residues)}")
        if any(x < 0 for x in self.plus | self.minus):
            raise ValueError("exception elements must be naturals")
        bad_plus = {x for x in self.plus if x % m in self.residues}
        if bad_plus:
            raise ValueError(f"plus elements already covered by residues: {sorted(bad_plus)}")
        bad_minus = {x for x in self.minus if x % m not in self.residues}
        if bad_minus:
            raise ValueError(f"minus elements not covered by residues: {sorted(bad_minus)}")
        if self.plus & self.minus:
            raise ValueError(f"plus and minus overlap: {sorted(self.plus & self.minus)}")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @staticmethod
    def build(
        modulus: int,
        residues: Iterable[int] = (),
        plus: Iterable[int] = (),
        minus: Iterable[int] = (),
    ) -> "SymbolicSet":
        """Construct a canonical set, repairing redundant exceptions.

        Plus elements already in the residue part and minus elements outside
        it are dropped (they do not change the denoted set).  An element
        listed in both plus and minus is contradictory and rejected.  The
        modulus is reduced to the smallest divisor that reproduces the set.
        """
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        res = frozenset(r % modulus for r in residues)
        plus_set = frozenset(plus)
        minus_set = frozenset(minus)
        if plus_set & minus_set:
            raise ValueError(f"plus and minus overlap: {sorted(plus_set & minus_set)}")
        plus_set = frozenset(x for x in plus_set if x % modulus not in res)
        minus_set = frozenset(x for x in minus_set if x % modulus in res)

        # Canonical modulus: smallest divisor d of m such that the residue
        # part is a union of full classes mod d.
        for d in _divisors(modulus):
            width = modulus // d
            classes = {c: 0 for c in range(d)}
            for r in res:
                classes[r % d] += 1
            if all(k == 0 or k == width for k in classes.values()):
                reduced = frozenset(c for c, k in classes.items() if k == width)
                return SymbolicSet(d, reduced, plus_set, minus_set)
        raise AssertionError("unreachable: modulus divides itself")

    @staticmethod
    def empty() -> "SymbolicSet":
        return SymbolicSet.build(1)

    @staticmethod
    def universe() -> "SymbolicSet":
        return SymbolicSet.build(1, residues={0})

    @staticmethod
    def finite(elements: Iterable[int]) -> "SymbolicSet":
        return SymbolicSet.build(1, plus=elements)

    @staticmethod
    def residue_class(modulus: int, residues: Iterable[int]) -> "SymbolicSet":
        return SymbolicSet.build(modulus, residues=residues)

    @staticmethod
    def cofinite(holes: Iterable[int]) -> "SymbolicSet":
        """X minus a finite set of holes."""
        return SymbolicSet.build(1, residues={0}, minus=holes)

    # ------------------------------------------------------------------
    # membership and pointwise structure
    # ------------------------------------------------------------------

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x in self.plus:
            return True
        return x % self.modulus in self.residues and x not in self.minus

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    # ------------------------------------------------------------------
    # boolean algebra
    # ------------------------------------------------------------------

    def _pointwise(self, other: "SymbolicSet", op: Callable[[bool, bool], bool]) -> "SymbolicSet":
        big = lcm(self.modulus, other.modulus)
        res = {
            r
            for r in range(big)
            if op(r % self.modulus in self.residues, r % other.modulus in other.residues)
        }
        plus: set[int] = set()
        minus: set[int] = set()
        for x in self.plus | self.minus | other.plus | other.minus:
            actual = op(self.contains(x), other.contains(x))
            base = x % big in res
            if actual and not base:
                plus.add(x)
            elif base and not actual:
                minus.add(x)
        return SymbolicSet.build(big, res, plus, minus)

    def union(self, other: "SymbolicSet") -> "SymbolicSet":
        return self._pointwise(other, lambda a, b: a or b)

    def intersect(self, other: "SymbolicSet") -> "SymbolicSet":
        return self._pointwise(other, lambda a, b: a and b)

    def difference(self, other: "SymbolicSet") -> "SymbolicSet":
        return self._pointwise(other, lambda a, b: a and not b)

    def complement(self) -> "SymbolicSet":
        res = frozenset(r for r in range(self.modulus) if r not in self.residues)
        # Added elements become removals of the complement and vice versa.
        return SymbolicSet.build(self.modulus, res, plus=self.minus, minus=self.plus)

    def __or__(self, other: "SymbolicSet") -> "SymbolicSet":
        return self.union(other)

    def __and__(self, other: "SymbolicSet") -> "SymbolicSet":
        return self.intersect(other)

    def __sub__(self, other: "SymbolicSet") -> "SymbolicSet":
        return self.difference(other)

    def __invert__(self) -> "SymbolicSet":
        return self.complement()

    # ------------------------------------------------------------------
    # size queries
    # ------------------------------------------------------------------

    def cardinality(self) -> Cardinality:
        if self.residues:
            return Cardinality.infinite()
        # minus is empty by invariant when there is no residue part
        return Cardinality.finite(len(self.plus))

    def is_empty(self) -> bool:
        return not self.residues and not self.plus

    def is_finite(self) -> bool:
        return self.cardinality().is_finite

    def is_subset(self, other: "SymbolicSet") -> bool:
        return self.difference(other).is_empty()

    def is_disjoint(self, other: "SymbolicSet") -> bool:
        return self.intersect(other).is_empty()

    def min_element(self) -> int | None:
        candidates = []
        if self.plus:
            candidates.append(min(self.plus))
        if self.residues:
            # The least residue-part member appears within |minus|+1 periods.
            limit = self.modulus * (len(self.minus) + 2)
            for n in range(limit):
                if n % self.modulus in self.residues and n not in self.minus:
                    candidates.append(n)
                    break
        return min(candidates) if candidates else None

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------

    def enumerate_below(self, horizon: int) -> list[int]:
        """Ascending list of all members strictly below `horizon`."""
        return [x for x in range(max(horizon, 0)) if self.contains(x)]

    def members(self) -> Iterator[int]:
        """Ascending enumeration of all members (infinite when the set is)."""
        if self.is_finite():
            yield from sorted(self.plus)
            return
        for x in itertools.count():
            if self.contains(x):
                yield x

    def nth_member(self, index: int) -> int:
        """The member at `index` (0-based) of the ascending enumeration."""
        if index < 0:
            raise IndexError(index)
        card = self.cardinality()
        if card.is_finite and index >= card.count:
            raise IndexError(f"set has only {card.count} elements, asked for index {index}")
        return next(itertools.islice(self.members(), index, None))

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------

    def literal(self) -> str:
        """Canonical textual form: `mod m { r1, r2 } + {a, b} - {c}`."""
        parts = [f"mod {self.modulus} {{{_render_elems(self.residues)}}}"]
        if self.plus:
            parts.append(f"+ {{{_render_elems(self.plus)}}}")
        if self.minus:
            parts.append(f"- {{{_render_elems(self.minus)}}}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.literal()


def _render_elems(xs: frozenset[int]) -> str:
    if not xs:
        return " "
    return " " + ", ".join(str(x) for x in sorted(xs)) + " "


def normalize_pair(a: SymbolicSet, b: SymbolicSet) -> tuple[SymbolicSet, SymbolicSet]:
    """Lift both sets to their common modulus lcm(m_a, m_b).

    The outputs denote the same sets as the inputs.  They are intentionally
    not modulus-canonical (that is the point of the lift); feed them back
    through :meth:`SymbolicSet.build` or any operation to re-canonicalize.
    """
    big = lcm(a.modulus, b.modulus)
    return _lift(a, big), _lift(b, big)


def _lift(s: SymbolicSet, big: int) -> SymbolicSet:
    if big == s.modulus:
        return s
    if big % s.modulus != 0:
        raise ValueError(f"{big} is not a multiple of modulus {s.modulus}")
    res = frozenset(r for r in range(big) if r % s.modulus in s.residues)
    return SymbolicSet(big, res, s.plus, s.minus)


# ----------------------------------------------------------------------
# literal syntax
# ----------------------------------------------------------------------

class SetLiteralError(ValueError):
    """Parse failure for the textual set syntax, with line/column info."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(mod\b|\d+|[{}+,-])")


def parse_set_literal(text: str) -> SymbolicSet:
    """Parse `mod <m> { r1, r2 } [+ {a, ...}] [- {b, ...}]` into a set.

    Round-trips with :meth:`SymbolicSet.literal` on canonical forms.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek() -> tuple[str, int, int] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> tuple[str, int, int]:
        nonlocal pos
        if pos >= len(tokens):
            line = text.count("\n") + 1
            col = len(text) - (text.rfind("\n") + 1) + 1
            raise SetLiteralError(f"unexpected end of input, expected {expected!r}", line, col)
        tok = tokens[pos]
        if expected is not None and tok[0] != expected:
            raise SetLiteralError(f"expected {expected!r}, found {tok[0]!r}", tok[1], tok[2])
        pos += 1
        return tok

    def take_int() -> int:
        tok = take()
        if not tok[0].isdigit():
            raise SetLiteralError(f"expected a number, found {tok[0]!r}", tok[1], tok[2])
        return int(tok[0])

    def take_braced() -> set[int]:
        take("{")
        elems: set[int] = set()
        nxt = peek()
        if nxt is not None and nxt[0] == "}":
            take("}")
            return elems
        elems.add(take_int())
        while True:
            tok = take()
            if tok[0] == "}":
                return elems
            if tok[0] != ",":
                raise SetLiteralError(f"expected ',' or '}}', found {tok[0]!r}", tok[1], tok[2])
            elems.add(take_int())

    take("mod")
    modulus = take_int()
    residues = take_braced()
    plus: set[int] = set()
    minus: set[int] = set()
    while peek() is not None:
        tok = take()
        if tok[0] == "+":
            plus |= take_braced()
        elif tok[0] == "-":
            minus |= take_braced()
        else:
            raise SetLiteralError(f"expected '+' or '-', found {tok[0]!r}", tok[1], tok[2])
    try:
        return SymbolicSet.build(modulus, residues, plus, minus)
    except ValueError as exc:
        raise SetLiteralError(str(exc), 1, 1) from exc


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens = []
    index = 0
    while index < len(text):
        match = _TOKEN.match(text, index)
        if match is None:
            while index < len(text) and text[index].isspace():
                index += 1
            rest = text[index:]
            if rest == "":
                break
            line = text.count("\n", 0, index) + 1
            col = index - (text.rfind("\n", 0, index) + 1) + 1
            raise SetLiteralError(f"unrecognized input {rest[:10]!r}", line, col)
        start = match.start(1)
        line = text.count("\n", 0, start) + 1
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        tokens.append((match.group(1), line, col))
        index = match.end()
    return tokens

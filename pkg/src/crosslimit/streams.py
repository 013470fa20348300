"""Lazy presentation streams, coverage schedules, corruption, validation.

Three presentation kinds feed the learners:

* text: positives of the target, covering its support in the limit;
* informant: all of X with true labels;
* contrastive: unordered pairs whose endpoints disagree under the target
  (each pair crosses the support/complement cut), covering every positive.

Streams are immutable descriptions; `item(t)` is a pure function of the
1-based index, so adversarial experiments replay bit-for-bit.  Corruption is
replacement at scripted indices: the displaced honest item is re-emitted at
the next free index, which keeps coverage intact while adding exactly the
scripted bad items.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classes import Hypothesis
from .space import SymbolicSet

TEXT = "text"
INFORMANT = "informant"
CONTRASTIVE = "contrastive"
KINDS = (TEXT, INFORMANT, CONTRASTIVE)


@dataclass(frozen=True, order=True)
class Pair:
    """An unordered two-element observation, stored with lo < hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (0 <= self.lo < self.hi):
            raise ValueError(f"pair needs two distinct naturals, got ({self.lo}, {self.hi})")

    @staticmethod
    def of(x: int, y: int) -> "Pair":
        if x == y:
            raise ValueError(f"pair needs two distinct elements, got {x} twice")
        return Pair(min(x, y), max(x, y))

    def elements(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def other(self, x: int) -> int:
        if x == self.lo:
            return self.hi
        if x == self.hi:
            return self.lo
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __contains__(self, x: int) -> bool:
        return x == self.lo or x == self.hi

    def __str__(self) -> str:
        return f"{{{self.lo},{self.hi}}}"


def crosses(h: Hypothesis, pair: Pair) -> bool:
    """Exactly one endpoint is a positive of h."""
    return h.contains(pair.lo) != h.contains(pair.hi)


@dataclass(frozen=True)
class Prefix:
    """A finite initial segment of a presentation, in observation order."""

    kind: str
    items: tuple

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown prefix kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.items)

    def seen(self) -> frozenset[int]:
        """All example-space elements observed in the prefix."""
        out: set[int] = set()
        for item in self.items:
            if self.kind == CONTRASTIVE:
                out.update(item.elements())
            elif self.kind == INFORMANT:
                out.add(item[0])
            else:
                out.add(item)
        return frozenset(out)

    def extended(self, item) -> "Prefix":
        return Prefix(self.kind, self.items + (item,))


@dataclass(frozen=True)
class Stream:
    """An immutable presentation: kind, provenance, and a pure index rule."""

    kind: str
    provenance: str
    item_fn: Callable[[int], object] = field(repr=False)
    targets: tuple[Hypothesis, ...] = ()

    def item(self, t: int):
        if t < 1:
            raise ValueError("stream indices are 1-based")
        return self.item_fn(t)

    def items(self) -> Iterator:
        for t in itertools.count(1):
            yield self.item_fn(t)

    def prefix(self, n: int) -> Prefix:
        return Prefix(self.kind, tuple(self.item_fn(t) for t in range(1, n + 1)))


# ----------------------------------------------------------------------
# canonical streams
# ----------------------------------------------------------------------

def _support_enumerator(support: SymbolicSet) -> Callable[[int], int]:
    """0-based ascending enumeration of a support, wrapping when finite."""
    card = support.cardinality()
    if card.is_finite:
        if card.count == 0:
            raise ValueError("cannot enumerate an empty support")
        elems = sorted(support.plus)
        return lambda i: elems[i % len(elems)]
    return support.nth_member


def canonical_contrastive(h: Hypothesis) -> Stream:
    """Pair the ascending support enumeration with the least non-positive.

    Every emitted pair crosses h and the positive side is covered in the
    limit (finite supports wrap around).  The fixed partner z* is the least
    element outside the support.
    """
    if not h.is_proper_nontrivial():
        raise ValueError(f"{h.id} is not proper nontrivial")
    zstar = h.support.complement().min_element()
    enum = _support_enumerator(h.support)
    return Stream(
        CONTRASTIVE,
        f"canonical-contrastive({h.id})",
        lambda t: Pair.of(enum(t - 1), zstar),
        targets=(h,),
    )


def canonical_text(h: Hypothesis) -> Stream:
    """Enumerate the support in ascending order, wrapping when finite."""
    if h.support.is_empty():
        raise ValueError(f"{h.id} has empty support, no text exists")
    enum = _support_enumerator(h.support)
    return Stream(TEXT, f"canonical-text({h.id})", lambda t: enum(t - 1), targets=(h,))


def canonical_informant(h: Hypothesis) -> Stream:
    """Enumerate X in ascending order with true labels."""
    return Stream(
        INFORMANT,
        f"canonical-informant({h.id})",
        lambda t: (t - 1, 1 if h.contains(t - 1) else 0),
        targets=(h,),
    )


def scripted(kind: str, items: list, tail: Stream | None = None, provenance: str = "scripted",
             targets: tuple[Hypothesis, ...] = ()) -> Stream:
    """A stream that plays `items` first, then follows `tail`.

    With no tail, the item list repeats forever (list-and-repeat).
    """
    if not items and tail is None:
        raise ValueError("scripted stream needs items or a tail")
    fixed = tuple(items)
    n = len(fixed)
    if tail is not None and tail.kind != kind:
        raise ValueError(f"tail kind {tail.kind!r} does not match {kind!r}")

    def item(t: int):
        if t <= n:
            return fixed[t - 1]
        if tail is None:
            return fixed[(t - 1) % n]
        return tail.item(t - n)

    return Stream(kind, provenance, item, targets=targets)


def scripted_contrastive(h: Hypothesis, pairs: list[Pair], tail: str = "canonical") -> Stream:
    """A contrastive stream for h from explicit pairs plus a covering tail.

    All scripted pairs must cross h; the tail is either the canonical stream
    (guaranteeing coverage) or `repeat` (list-and-repeat of the script).
    """
    for i, p in enumerate(pairs):
        if not crosses(h, p):
            raise ValueError(f"scripted pair #{i + 1} {p} does not cross {h.id}")
    tail_stream = canonical_contrastive(h) if tail == "canonical" else None
    return scripted(
        CONTRASTIVE, pairs, tail=tail_stream,
        provenance=f"scripted-contrastive({h.id},{tail})", targets=(h,),
    )


def sampled_contrastive(h: Hypothesis, seed: int, horizon: int = 64) -> Stream:
    """A pseudorandom valid contrastive stream for h, index-addressable.

    Odd indices walk the canonical coverage schedule; even indices emit a
    random crossing pair drawn below `horizon` from a per-index generator, so
    item(t) is reproducible without materializing the prefix.
    """
    if not h.is_proper_nontrivial():
        raise ValueError(f"{h.id} is not proper nontrivial")
    enum = _support_enumerator(h.support)
    zstar = h.support.complement().min_element()
    positives = h.support.enumerate_below(horizon)
    negatives = h.support.complement().enumerate_below(horizon)

    def item(t: int) -> Pair:
        if t % 2 == 1:
            return Pair.of(enum((t - 1) // 2), zstar)
        rng = random.Random(f"{seed}:{t}")
        x = rng.choice(positives) if positives else enum(0)
        z = rng.choice(negatives) if negatives else zstar
        return Pair.of(x, z)

    return Stream(
        CONTRASTIVE, f"sampled-contrastive({h.id},seed={seed})", item, targets=(h,)
    )


def sampled_text(h: Hypothesis, seed: int, horizon: int = 64) -> Stream:
    """A pseudorandom text for h: coverage walk interleaved with repeats."""
    if h.support.is_empty():
        raise ValueError(f"{h.id} has empty support, no text exists")
    enum = _support_enumerator(h.support)
    positives = h.support.enumerate_below(horizon)

    def item(t: int) -> int:
        if t % 2 == 1:
            return enum((t - 1) // 2)
        rng = random.Random(f"{seed}:{t}")
        return rng.choice(positives) if positives else enum(0)

    return Stream(TEXT, f"sampled-text({h.id},seed={seed})", item, targets=(h,))


# ----------------------------------------------------------------------
# corruption
# ----------------------------------------------------------------------

def corrupt(inner: Stream, injections: list[tuple[int, object]]) -> Stream:
    """Replace the items at scripted indices, delaying displaced honest items.

    Index t emits the scripted item when t is an injection index; otherwise
    it emits the next honest item not yet played, so every honest item still
    appears and coverage is preserved.  At most len(injections) items of the
    result violate the inner stream's validity.
    """
    indices = [t for t, _ in injections]
    if len(set(indices)) != len(indices):
        raise ValueError(f"duplicate injection indices: {sorted(indices)}")
    if any(t < 1 for t in indices):
        raise ValueError("injection indices are 1-based")
    for t, item in injections:
        _check_item_kind(inner.kind, item)
    table = dict(injections)
    ordered = sorted(indices)

    def item(t: int):
        if t in table:
            return table[t]
        return inner.item(t - bisect_right(ordered, t))

    tag = ",".join(f"{t}:{table[t]}" for t in ordered)
    return Stream(
        inner.kind,
        f"corrupt({inner.provenance};[{tag}])",
        item,
        targets=inner.targets,
    )


def _check_item_kind(kind: str, item) -> None:
    if kind == CONTRASTIVE and not isinstance(item, Pair):
        raise ValueError(f"contrastive streams carry pairs, got {item!r}")
    if kind == TEXT and not isinstance(item, int):
        raise ValueError(f"text streams carry naturals, got {item!r}")
    if kind == INFORMANT:
        ok = isinstance(item, tuple) and len(item) == 2 and item[1] in (0, 1)
        if not ok:
            raise ValueError(f"informant streams carry (example, label), got {item!r}")


# ----------------------------------------------------------------------
# validity
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ValidityReport:
    """Exact violation indices and the as-yet-uncovered positives.

    For contrastive prefixes a violation is a pair that fails the
    exactly-one-positive condition; for texts, a term outside the support;
    for informants, a mislabeled example.
    """

    xor_violations: tuple[int, ...]
    coverage_deficit: SymbolicSet
    horizon: int

    def budget_ok(self, k: int) -> bool:
        return len(self.xor_violations) <= k

    @property
    def clean(self) -> bool:
        return not self.xor_violations


def validate(prefix: Prefix, h: Hypothesis, horizon: int) -> ValidityReport:
    """Check a prefix against a target: violations plus coverage deficit."""
    bad: list[int] = []
    if prefix.kind == CONTRASTIVE:
        for t, pair in enumerate(prefix.items, 1):
            if not crosses(h, pair):
                bad.append(t)
        must_cover = h.support
    elif prefix.kind == TEXT:
        for t, x in enumerate(prefix.items, 1):
            if not h.contains(x):
                bad.append(t)
        must_cover = h.support
    else:
        for t, (x, label) in enumerate(prefix.items, 1):
            if bool(label) != h.contains(x):
                bad.append(t)
        must_cover = SymbolicSet.universe()
    seen = prefix.seen()
    deficit = SymbolicSet.finite(
        x for x in must_cover.enumerate_below(horizon) if x not in seen
    )
    return ValidityReport(tuple(bad), deficit, horizon)


# ----------------------------------------------------------------------
# text-to-contrastive simulation input
# ----------------------------------------------------------------------

def synthetic_contrastive_from_text(prefix: Prefix) -> Prefix:
    """Pair every text term with the least example not seen yet.

    The partner z_n is recomputed from the whole prefix on every call; once
    the text has shown everything below the least non-positive z*, the
    partner freezes at z* and the outputs become prefixes of the single fixed
    stream pairing each positive with z*.
    """
    if prefix.kind != TEXT:
        raise ValueError(f"expected a text prefix, got {prefix.kind!r}")
    if not prefix.items:
        raise ValueError("synthetic pairing needs a nonempty text prefix")
    seen = prefix.seen()
    z = 0
    while z in seen:
        z += 1
    return Prefix(CONTRASTIVE, tuple(Pair.of(x, z) for x in prefix.items))


# ----------------------------------------------------------------------
# prefix serialization (one item per line)
# ----------------------------------------------------------------------

def format_prefix(prefix: Prefix) -> str:
    lines = []
    for item in prefix.items:
        if prefix.kind == CONTRASTIVE:
            lines.append(str(item))
        elif prefix.kind == INFORMANT:
            lines.append(f"{item[0]},{item[1]}")
        else:
            lines.append(str(item))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_prefix(text: str, kind: str) -> Prefix:
    items: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            items.append(parse_item(line, kind))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return Prefix(kind, tuple(items))


def parse_item(text: str, kind: str):
    text = text.strip()
    if kind == CONTRASTIVE:
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"expected {{x,y}}, got {text!r}")
        parts = text[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two elements, got {text!r}")
        return Pair.of(int(parts[0]), int(parts[1]))
    if kind == INFORMANT:
        parts = text.split(",")
        if len(parts) != 2 or parts[1].strip() not in ("0", "1"):
            raise ValueError(f"expected x,label with label 0 or 1, got {text!r}")
        return (int(parts[0]), int(parts[1]))
    return int(text)


def parse_injection(spec: str, kind: str) -> tuple[int, object]:
    """Parse a CLI injection `index:item`, e.g. `3:{0,4}` for pair streams."""
    index, sep, item = spec.partition(":")
    if not sep:
        raise ValueError(f"injection spec needs index:item, got {spec!r}")
    return (int(index), parse_item(item, kind))

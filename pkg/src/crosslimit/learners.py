"""Identifiers and generators with a uniform step interface.

A learner consumes one presentation kind and exposes three pure methods:
`initial()` giving a starting state, `advance(state, item)` folding in one
observation, and `read(state)` producing the current output (a hypothesis
for identifiers, an example for generators).  States are value-semantic and
never mutated, so identical prefixes always reproduce identical outputs and
every run record replays bit-for-bit.

The run harness executes a learner against a stream, detecting convergence
with a stability window: limits are not finitely observable, so a run
reports the start of the longest correct tail, provided the tail is at least
one window long.  Runs with known analytic convergence bounds additionally
assert those bounds in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .classes import CoSingletonClass, Hypothesis, HypothesisClass
from .closure import EdgeSet, contrastive_closure, edge_version_space, is_hollow
from .space import SymbolicSet
from .streams import (
    CONTRASTIVE,
    INFORMANT,
    TEXT,
    Pair,
    Prefix,
    Stream,
    crosses,
    synthetic_contrastive_from_text,
)

IDENTIFIER = "identifier"
GENERATOR = "generator"


class EmptySafeChoice(Exception):
    """The safe-set rule found nothing to output: the class lacks an
    infinite safe core at this prefix."""


class Learner:
    """Base for all learners; subclasses fill in the three pure methods."""

    role: str = IDENTIFIER
    kind: str = CONTRASTIVE
    name: str = "learner"

    def initial(self):
        raise NotImplementedError

    def advance(self, state, item):
        raise NotImplementedError

    def read(self, state):
        raise NotImplementedError

    def trace(self, state) -> dict:
        return {}

    def run_on(self, prefix: Prefix):
        """Fold the learner over a whole prefix and read once."""
        state = self.initial()
        for item in prefix.items:
            state = self.advance(state, item)
        return self.read(state)


# ----------------------------------------------------------------------
# tell-tale sets
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class TellTaleFamily:
    """Per-hypothesis finite distinguishing sets.

    entries[g] is a finite subset of supp(g) contained in no member support
    that is strictly below supp(g); seeing it rules out every strict
    sub-hypothesis.
    """

    entries: dict[str, frozenset[int]]

    def of(self, hid: str) -> frozenset[int]:
        return self.entries[hid]


def compute_telltales(cls: HypothesisClass, horizon: int = 64) -> TellTaleFamily:
    """Greedy tell-tales: least difference witness per strict sub-support.

    For each member pair with supp(f) strictly below supp(g), the least
    element of supp(g) minus supp(f) joins g's tell-tale.  Witnesses beyond
    the horizon are reported as errors rather than silently accepted.
    """
    entries: dict[str, frozenset[int]] = {}
    for g in cls.members:
        picks: set[int] = set()
        for f in cls.members:
            if f.id == g.id:
                continue
            f_below_g = f.support.is_subset(g.support) and not g.support.is_subset(f.support)
            if not f_below_g:
                continue
            witness = g.support.difference(f.support).min_element()
            if witness is None:
                raise AssertionError("strict subset with empty difference")
            if witness >= horizon:
                raise ValueError(
                    f"tell-tale witness for {g.id} against {f.id} is {witness}, "
                    f"beyond horizon {horizon}"
                )
            picks.add(witness)
        entries[g.id] = frozenset(picks)
    return TellTaleFamily(entries)


def telltales_sound(cls: HypothesisClass, family: TellTaleFamily) -> bool:
    """Exact check of the tell-tale conditions over the member tuple."""
    for g in cls.members:
        telltale = SymbolicSet.finite(family.of(g.id))
        if not telltale.is_subset(g.support):
            return False
        for f in cls.members:
            if f.id == g.id:
                continue
            strict = f.support.is_subset(g.support) and not g.support.is_subset(f.support)
            if strict and telltale.is_subset(f.support):
                return False
    return True


# ----------------------------------------------------------------------
# identifiers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class _EligState:
    seen: frozenset[int]
    crossed: tuple[bool, ...]
    count: int


class EligibilityIdentifier(Learner):
    """Least-index member whose tell-tale is seen and whose cut every pair
    crosses; defaults to the first member before any is eligible."""

    role = IDENTIFIER
    kind = CONTRASTIVE

    def __init__(self, cls: HypothesisClass, telltales: TellTaleFamily):
        self.cls = cls
        self.telltales = telltales
        self.name = "eligibility"

    def initial(self) -> _EligState:
        return _EligState(frozenset(), tuple(True for _ in self.cls.members), 0)

    def advance(self, state: _EligState, pair: Pair) -> _EligState:
        crossed = tuple(
            ok and crosses(h, pair) for ok, h in zip(state.crossed, self.cls.members)
        )
        return _EligState(state.seen | frozenset(pair.elements()), crossed, state.count + 1)

    def eligible(self, state: _EligState) -> list[Hypothesis]:
        out = []
        for h, ok in zip(self.cls.members, state.crossed):
            if ok and self.telltales.of(h.id) <= state.seen:
                out.append(h)
        return out

    def read(self, state: _EligState) -> Hypothesis:
        eligible = self.eligible(state)
        return eligible[0] if eligible else self.cls.members[0]

    def trace(self, state: _EligState) -> dict:
        eligible = self.eligible(state)
        return {
            "eligible": [h.id for h in eligible],
            "default": not eligible,
        }


class TextFromContrastiveIdentifier(Learner):
    """Text identifier simulating a contrastive one on synthetic pairs.

    Each text prefix is replayed as pairs (x_t, z_n) where z_n is the least
    unseen example; z_n eventually freezes at the least non-positive of the
    target, after which the inner identifier sees prefixes of one fixed
    valid stream and converges.
    """

    role = IDENTIFIER
    kind = TEXT

    def __init__(self, inner: Learner):
        if inner.kind != CONTRASTIVE or inner.role != IDENTIFIER:
            raise ValueError("wrap a contrastive identifier")
        self.inner = inner
        self.name = f"text-from({inner.name})"

    def initial(self) -> tuple:
        return ()

    def advance(self, state: tuple, item: int) -> tuple:
        return state + (item,)

    def read(self, state: tuple):
        inner_state = self.inner.initial()
        if state:
            synthetic = synthetic_contrastive_from_text(Prefix(TEXT, state))
            for pair in synthetic.items:
                inner_state = self.inner.advance(inner_state, pair)
        return self.inner.read(inner_state)

    def current_partner(self, state: tuple) -> int:
        z = 0
        while z in state:
            z += 1
        return z


@dataclass(frozen=True)
class _AbsenceState:
    count: int
    appearances: tuple[tuple[int, int], ...]  # (example, #pairs containing it)


class AbsenceCountIdentifier(Learner):
    """Output the co-singleton centered at the absence-count minimizer.

    The absence count of x after n pairs is the number of pairs omitting x.
    The unique negative of the target is incident to every honest pair, so
    its count is bounded by the corruption total while every other seen
    example's count diverges; no corruption budget is consumed as input.
    """

    role = IDENTIFIER
    kind = CONTRASTIVE

    def __init__(self, family: CoSingletonClass | None = None):
        self.family = family or CoSingletonClass()
        self.name = "absence-count"

    def initial(self) -> _AbsenceState:
        return _AbsenceState(0, ())

    def advance(self, state: _AbsenceState, pair: Pair) -> _AbsenceState:
        table = dict(state.appearances)
        for x in pair.elements():
            table[x] = table.get(x, 0) + 1
        return _AbsenceState(state.count + 1, tuple(sorted(table.items())))

    def absence_counts(self, state: _AbsenceState) -> dict[int, int]:
        return {x: state.count - seen for x, seen in state.appearances}

    def read(self, state: _AbsenceState) -> Hypothesis:
        if not state.appearances:
            return self.family.member(0)
        counts = self.absence_counts(state)
        best = min(counts, key=lambda x: (counts[x], x))
        return self.family.member(best)

    def trace(self, state: _AbsenceState) -> dict:
        return {
            "absence_counts": self.absence_counts(state),
            "default": not state.appearances,
        }


class GoldInformantIdentifier(Learner):
    """Least-index member consistent with every labeled example so far."""

    role = IDENTIFIER
    kind = INFORMANT

    def __init__(self, cls: HypothesisClass):
        self.cls = cls
        self.name = "gold-informant"

    def initial(self) -> tuple[bool, ...]:
        return tuple(True for _ in self.cls.members)

    def advance(self, state: tuple[bool, ...], item: tuple[int, int]) -> tuple[bool, ...]:
        x, label = item
        return tuple(
            ok and (h.contains(x) == bool(label))
            for ok, h in zip(state, self.cls.members)
        )

    def read(self, state: tuple[bool, ...]) -> Hypothesis:
        for h, ok in zip(self.cls.members, state):
            if ok:
                return h
        return self.cls.members[0]

    def trace(self, state: tuple[bool, ...]) -> dict:
        consistent = [h.id for h, ok in zip(self.cls.members, state) if ok]
        return {"consistent": consistent, "default": not consistent}


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class _GenState:
    edges: frozenset[Pair]
    seen: frozenset[int]
    outputs: tuple[int, ...]
    count: int


class _PairGenerator(Learner):
    """Shared bookkeeping for contrastive generators: distinct edges, seen
    elements, and prior outputs (novelty discipline).

    Advancing from the state after n-1 observations records that step's
    output, so `read` after n observations excludes exactly the outputs of
    steps 1 through n-1.
    """

    role = GENERATOR
    kind = CONTRASTIVE

    def initial(self) -> _GenState:
        return _GenState(frozenset(), frozenset(), (), 0)

    def advance(self, state: _GenState, pair: Pair) -> _GenState:
        outputs = state.outputs + self._emitted(state)
        return _GenState(
            state.edges | {pair},
            state.seen | frozenset(pair.elements()),
            outputs,
            state.count + 1,
        )

    def _emitted(self, state: _GenState) -> tuple[int, ...]:
        if state.count == 0:
            return ()  # nothing was emitted before the first observation
        try:
            produced = self.read(state)
        except EmptySafeChoice:
            return ()
        return (produced,) if produced is not None else ()


class ClosureGenerator(_PairGenerator):
    """Uniform generation: least closure element outside the seen vertices.

    Sound once the distinct-edge count exceeds the class's closure
    dimension: the edge set is then not hollow, so the closure escapes its
    own vertex set and every escape is a certified novel positive.  Below
    the threshold the output is an unconstrained placeholder (0).
    """

    def __init__(self, cls: HypothesisClass, dimension: int):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        self.cls = cls
        self.dimension = dimension
        self.name = f"closure-gen(d={dimension})"

    def read(self, state: _GenState) -> int:
        edge_set = EdgeSet(state.edges)
        if len(edge_set) > self.dimension:
            closure = contrastive_closure(self.cls, edge_set)
            if not closure.is_bottom:
                candidate = closure.value.difference(edge_set.vertex_set())
                least = candidate.min_element()
                if least is not None:
                    return least
        return 0

    def trace(self, state: _GenState) -> dict:
        return {"distinct_edges": len(state.edges),
                "armed": len(state.edges) > self.dimension}


class ChainGenerator(_PairGenerator):
    """Non-uniform generation by threshold-and-defer over a chain of classes.

    Level m (1-based) becomes usable once the distinct-edge count reaches
    m + dims[m-1] + 1; the generator picks the deepest usable level whose
    version space is nonempty and outputs the least closure escape there.
    """

    def __init__(self, chain: list[HypothesisClass], dims: list[int]):
        if len(chain) != len(dims):
            raise ValueError("chain and dims must align")
        for earlier, later in zip(chain, chain[1:]):
            early = {(h.id, h.support) for h in earlier.members}
            late = {(h.id, h.support) for h in later.members}
            if not early <= late:
                raise ValueError("chain must be nondecreasing")
        self.chain = chain
        self.thresholds = [m + d + 1 for m, d in zip(itertools.count(1), dims)]
        self.name = f"chain-gen({len(chain)} levels)"

    def read(self, state: _GenState) -> int:
        edge_set = EdgeSet(state.edges)
        usable = [
            i for i, threshold in enumerate(self.thresholds)
            if threshold <= len(edge_set)
        ]
        for i in reversed(usable):
            closure = contrastive_closure(self.chain[i], edge_set)
            if closure.is_bottom:
                continue
            least = closure.value.difference(edge_set.vertex_set()).min_element()
            if least is not None:
                return least
        return 0


class SafeCoreGenerator(_PairGenerator):
    """Least never-seen, never-output element of the current safe set.

    Intended for classes whose safe set stays infinite on every valid
    prefix; when the choice set empties instead, the rule raises
    EmptySafeChoice to signal the missing safe-core property.
    """

    def __init__(self, cls: HypothesisClass):
        self.cls = cls
        self.name = "safe-core-gen"

    def read(self, state: _GenState) -> int:
        closure = contrastive_closure(self.cls, EdgeSet(state.edges))
        if closure.is_bottom:
            raise EmptySafeChoice("version space is empty")
        excluded = SymbolicSet.finite(state.seen | set(state.outputs))
        least = closure.value.difference(excluded).min_element()
        if least is None:
            raise EmptySafeChoice("safe set exhausted by seen elements and outputs")
        return least


class EventualCoreGenerator(_PairGenerator):
    """Walk an injective core sequence, skipping seen elements and repeats.

    At step n the output is r_m for the least m >= n avoiding everything
    seen or already output; if the core's tail eventually enters every
    target support, outputs are eventually correct.
    """

    def __init__(self, core: Callable[[int], int], name: str = "eventual-core-gen"):
        self.core = core
        self.name = name

    def read(self, state: _GenState) -> int:
        excluded = state.seen | set(state.outputs)
        m = max(state.count, 1)
        for _ in range(len(excluded) + 1):
            value = self.core(m)
            if value not in excluded:
                return value
            m += 1
        raise AssertionError("injective core cannot exhaust")


class IdentifyThenGenerate(_PairGenerator):
    """Run an identifier and emit fresh elements of the current guess.

    Once the identifier converges to an infinite-support target, every
    output is a novel positive.  A finite guess support can exhaust; the
    rule then falls back to the placeholder 0.
    """

    def __init__(self, inner: Learner):
        if inner.role != IDENTIFIER or inner.kind != CONTRASTIVE:
            raise ValueError("wrap a contrastive identifier")
        self.inner = inner
        self.name = f"identify-then-generate({inner.name})"

    def initial(self):
        return (_GenState(frozenset(), frozenset(), (), 0), self.inner.initial())

    def advance(self, state, pair: Pair):
        gen_state, inner_state = state
        emitted = () if gen_state.count == 0 else (self.read(state),)
        new_gen = _GenState(
            gen_state.edges | {pair},
            gen_state.seen | frozenset(pair.elements()),
            gen_state.outputs + emitted,
            gen_state.count + 1,
        )
        return (new_gen, self.inner.advance(inner_state, pair))

    def read(self, state) -> int:
        gen_state, inner_state = state
        guess = self.inner.read(inner_state)
        excluded = SymbolicSet.finite(gen_state.seen | set(gen_state.outputs))
        least = guess.support.difference(excluded).min_element()
        return least if least is not None else 0

    def trace(self, state) -> dict:
        _, inner_state = state
        return {"guess": self.inner.read(inner_state).id, **self.inner.trace(inner_state)}


# ----------------------------------------------------------------------
# the breaker for hollow witnesses
# ----------------------------------------------------------------------

NOVELTY_VIOLATION = "novelty-violation"
MISCLASSIFICATION = "misclassification"


@dataclass(frozen=True)
class FailureWitness:
    """How a generator fails on a hollow edge set presented as a prefix."""

    kind: str
    output: int
    hypothesis: Hypothesis | None
    extension: str

    def __str__(self) -> str:
        if self.kind == NOVELTY_VIOLATION:
            return f"output {self.output} repeats a presented vertex"
        return (
            f"output {self.output} is outside supp({self.hypothesis.id}); {self.extension}"
        )


def generator_breaker(
    cls: HypothesisClass, generator: Learner, hollow: EdgeSet
) -> FailureWitness:
    """Defeat a generator at exactly |hollow| distinct edges.

    Presents the hollow set's edges in lexicographic order.  The produced
    output either repeats a vertex of the presentation (novelty violation)
    or lies outside some surviving hypothesis's support, and that hypothesis
    extends the prefix to a full valid presentation on which the generator
    errs at this step.
    """
    if not is_hollow(cls, hollow):
        raise ValueError("breaker needs a verified hollow edge set")
    state = generator.initial()
    for pair in sorted(hollow.edges):
        state = generator.advance(state, pair)
    output = generator.read(state)
    if output in hollow.vertices():
        return FailureWitness(NOVELTY_VIOLATION, output, None, "")
    survivors = edge_version_space(cls, hollow)
    victim = next((h for h in survivors if not h.contains(output)), None)
    if victim is None and cls.family is not None and cls.family.kind == "punctured":
        base = cls.by_id("h_inf").support
        if base.contains(output):
            # the puncture at the output survives any edge set avoiding it
            victim = Hypothesis(
                f"h{output // 2 + 1}", base.difference(SymbolicSet.finite({output}))
            )
    if victim is None:
        raise AssertionError("hollow closure must exclude the output for some survivor")
    zstar = victim.support.complement().min_element()
    extension = (
        f"extend by pairing the remaining positives of {victim.id} with {zstar}"
    )
    return FailureWitness(MISCLASSIFICATION, output, victim, extension)


class ConstantGenerator(_PairGenerator):
    """Always outputs the same example; a breaker demonstration target."""

    def __init__(self, value: int):
        self.value = value
        self.name = f"constant-gen({value})"

    def read(self, state: _GenState) -> int:
        return self.value


# ----------------------------------------------------------------------
# run records
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RunRecord:
    """One learner execution: outputs per step plus convergence bookkeeping.

    converged_at is the 1-based step from which every recorded output is
    constant-and-correct (identification) or novel-and-member (generation),
    provided that stable tail is at least one stability window long.
    """

    learner: str
    stream: str
    steps: int
    stability_window: int
    target: str | None
    outputs: tuple
    flags: tuple[tuple[str, ...], ...]
    step_ok: tuple[bool, ...]
    converged_at: int | None
    trace_rows: tuple[dict, ...] = ()

    @property
    def converged(self) -> bool:
        return self.converged_at is not None

    def final_output(self):
        return self.outputs[-1] if self.outputs else None


def run(
    learner: Learner,
    stream: Stream,
    steps: int,
    stability_window: int = 5,
    target: Hypothesis | None = None,
    collect_trace: bool = False,
) -> RunRecord:
    """Execute a learner on stream prefixes 1..steps.

    Identification: a step is `ok` when the output names the target (or,
    with no target given, matches the final output).  Generation: `ok` means
    the output exists, is unseen at that step, and lies in the target's
    support.  converged_at is the least N with all steps from N on ok and at
    least `stability_window` of them recorded.
    """
    if stability_window < 1 or steps < stability_window:
        raise ValueError("need steps >= stability_window >= 1")
    if learner.kind != stream.kind:
        raise ValueError(f"{learner.name} consumes {learner.kind}, stream is {stream.kind}")
    if target is None and len(stream.targets) == 1:
        target = stream.targets[0]

    outputs: list = []
    flags: list[tuple[str, ...]] = []
    step_ok: list[bool] = []
    trace_rows: list[dict] = []
    seen: set[int] = set()
    state = learner.initial()
    items = stream.items()
    for n in range(1, steps + 1):
        item = next(items)
        if stream.kind == CONTRASTIVE:
            seen.update(item.elements())
        elif stream.kind == INFORMANT:
            seen.add(item[0])
        else:
            seen.add(item)
        state = learner.advance(state, item)
        step_flags: list[str] = []
        try:
            output = learner.read(state)
        except EmptySafeChoice as exc:
            output = None
            step_flags.append(f"empty-safe-choice: {exc}")
        info = learner.trace(state)
        if info.get("default"):
            step_flags.append("default-output")

        if learner.role == GENERATOR:
            novel = output is not None and output not in seen
            member = output is not None and (target is None or target.contains(output))
            if output is not None and not novel:
                step_flags.append("novelty-violation")
            if output is not None and target is not None and not member:
                step_flags.append("misclassified")
            step_ok.append(novel and member)
        elif target is not None:
            step_ok.append(output is not None and output.id == target.id)
        else:
            step_ok.append(output is not None)  # patched to stability below

        outputs.append(output)
        flags.append(tuple(step_flags))
        if collect_trace:
            row = {"step": n, "output": _output_repr(output)}
            row.update({k: v for k, v in info.items() if k != "default"})
            trace_rows.append(row)

    if learner.role == IDENTIFIER and target is None:
        # no designated target: a step is stable when it matches the final guess
        final = _output_repr(outputs[-1]) if outputs else None
        step_ok = [
            output is not None and _output_repr(output) == final for output in outputs
        ]

    converged_at = _stable_tail_start(tuple(step_ok), stability_window)
    return RunRecord(
        learner=learner.name,
        stream=stream.provenance,
        steps=steps,
        stability_window=stability_window,
        target=target.id if target is not None else None,
        outputs=tuple(_output_repr(o) for o in outputs),
        flags=tuple(flags),
        step_ok=tuple(step_ok),
        converged_at=converged_at,
        trace_rows=tuple(trace_rows),
    )


def _output_repr(output):
    if output is None:
        return None
    if isinstance(output, Hypothesis):
        return output.id
    return output


def _stable_tail_start(step_ok: tuple[bool, ...], window: int) -> int | None:
    n = len(step_ok)
    start = n + 1
    for i in range(n - 1, -1, -1):
        if step_ok[i]:
            start = i + 1
        else:
            break
    if start > n:
        return None
    if n - start + 1 < window:
        return None
    return start

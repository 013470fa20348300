"""The corruption reversal: pair data beat texts once an adversary appears.

A corrupted positive example is indistinguishable from a real one, but a
corrupted pair is structurally a non-crossing edge.  The defect number
counts the wrong-cut violations any clean presentation must show; when it
is infinite between all pairs, counting absences identifies the target
under every finite corruption budget.
"""

from crosslimit import (
    AbsenceCountIdentifier,
    BlockTextIdentifier,
    Pair,
    Prefix,
    block_class,
    canonical_contrastive,
    canonical_text,
    co_singleton_class,
    confusion_demo,
    corrupt,
    defect,
    EligibilityIdentifier,
    compute_telltales,
    run,
    validate,
)
from crosslimit.classes import block_elements
from crosslimit.streams import TEXT

fam = co_singleton_class()

# defect numbers: infinite for the co-singleton family
report = defect(fam.member(2), fam.member(6))
print("defect set h2 -> h6:", report.defect_set, "| defect number:", report.kappa)

# text identification collapses at one corruption: the plain enumeration of
# X is a 1-corrupted text for every co-singleton target at once
enumeration = Prefix(TEXT, tuple(range(10)))
budgets = [validate(enumeration, fam.member(s), horizon=10).budget_ok(1) for s in range(10)]
print("enumeration of X is a 1-corrupted text for every target below 10:", all(budgets))

# ...while absence counting identifies through any finite corruption
target = fam.member(3)
stream = corrupt(
    canonical_contrastive(target),
    [(4, Pair.of(0, 4)), (9, Pair.of(1, 5)), (15, Pair.of(2, 6))],
)
learner = AbsenceCountIdentifier(fam)
record = run(learner, stream, steps=120, stability_window=10, target=target)
print(f"absence count under 3 corruptions: converged at {record.converged_at} "
      f"to {record.final_output()}")

state = learner.initial()
for pair in stream.prefix(30).items:
    state = learner.advance(state, pair)
counts = learner.absence_counts(state)
print("absence counts after 30 steps (target stays bounded):",
      {x: counts[x] for x in sorted(counts)[:6]})

# the text side of the reversal: blocks of size budget+1
budget = 2
blocks = block_class(budget, 4)
victim = blocks.by_id("h2")
false_block = sorted(block_elements(budget, 1))[:budget]
text = corrupt(canonical_text(victim), [(3, false_block[0]), (8, false_block[1])])
record = run(BlockTextIdentifier(blocks), text, steps=60, stability_window=5, target=victim)
print(f"\nblock text identifier under {budget} corruptions: converged at "
      f"{record.converged_at} to {record.final_output()}")

# but the same class is contrastively confusable even with zero corruption
demo = confusion_demo(
    [blocks.by_id("h1"), blocks.by_id("h2")],
    EligibilityIdentifier(blocks, compute_telltales(blocks)),
    steps=40,
)
print("clean shared stream fails members:", demo.failed_members)

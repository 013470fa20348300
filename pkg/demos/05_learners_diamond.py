"""Learners across the witness zoo, and the diamond they trace out.

Identification and generation from pair data sit in a strict diamond over
classes with unbounded supports: contrastive identification below both
contrastive generation and text identification, both below text generation,
and the middle two incomparable.  Each corner is realized by a small class
and a learner that succeeds or provably cannot.
"""

from crosslimit import (
    ClosureGenerator,
    EligibilityIdentifier,
    EventualCoreGenerator,
    SafeCoreGenerator,
    augmented_class,
    canonical_contrastive,
    classify,
    closure_dimension,
    compute_telltales,
    disjoint_support_class,
    overlapping_cover_class,
    pinned_core_class,
    punctured_class,
    run,
    shared_presentation_pair,
)
from crosslimit.classes import punctured_hole

print("== corner verdicts (ctr_id, txt_id, ctr_gen, txt_gen) ==")
for name, cls in [
    ("disjoint", disjoint_support_class()),
    ("punctured(8)", punctured_class(8)),
    ("augmented(8)", augmented_class(8)),
    ("overlap-cover", overlapping_cover_class()),
]:
    verdict = classify(cls)
    mechanisms = {
        "ctr_gen": verdict.ctr_gen.mechanism,
        "ctr_id": verdict.ctr_id.mechanism,
    }
    print(f"{name:14s} {verdict.corner()}   {mechanisms}")

# eligibility identification where every incomparable pair overlaps and covers
overlap = overlapping_cover_class()
learner = EligibilityIdentifier(overlap, compute_telltales(overlap))
print("\n== eligibility on the overlapping-cover class ==")
for target in overlap.members:
    record = run(learner, canonical_contrastive(target), steps=25,
                 stability_window=5, target=target)
    print(f"target {target.id}: converged at {record.converged_at}, final {record.final_output()}")

# the same identifier cannot split a disjoint pair on their shared stream
pair = disjoint_support_class()
shared = shared_presentation_pair(*pair.members)
fixed = run(EligibilityIdentifier(pair, compute_telltales(pair)), shared,
            steps=20, stability_window=5)
print("\nshared-stream outputs are target-independent:", set(fixed.outputs))

# three generation mechanisms
print("\n== generators ==")
aug = augmented_class(6)
record = run(SafeCoreGenerator(aug), canonical_contrastive(aug.by_id("h3")),
             steps=20, stability_window=5, target=aug.by_id("h3"))
print("safe core on augmented: correct from step", record.converged_at)

punct = punctured_class(8)
record = run(EventualCoreGenerator(lambda m: punctured_hole(m)),
             canonical_contrastive(punct.by_id("h4")),
             steps=30, stability_window=5, target=punct.by_id("h4"))
print("eventual core on punctured: correct from step", record.converged_at)

pinned = pinned_core_class(3, (0,), (1,))
dim = closure_dimension(pinned).dimension
record = run(ClosureGenerator(pinned, dim), canonical_contrastive(pinned.members[0]),
             steps=20, stability_window=5, target=pinned.members[0])
print(f"closure generator (dimension {dim}): correct from step", record.converged_at)

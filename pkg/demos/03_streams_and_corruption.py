"""Presentations and corruption: replacement that preserves coverage.

Streams are pure index rules, so adversarial experiments replay exactly.
Corruption substitutes scripted items at scripted indices and re-emits the
displaced honest items at the next free slots: the bad-item count is exactly
the script length and positive-side coverage survives.
"""

from crosslimit import (
    Pair,
    canonical_contrastive,
    canonical_text,
    co_singleton_class,
    corrupt,
    synthetic_contrastive_from_text,
    validate,
)

target = co_singleton_class().member(3)

honest = canonical_contrastive(target)
print("honest star  :", [str(p) for p in honest.prefix(6).items])

corrupted = corrupt(honest, [(3, Pair.of(0, 4))])
prefix = corrupted.prefix(6)
print("one corrupted:", [str(p) for p in prefix.items])

report = validate(prefix, target, horizon=6)
print("violations at indices:", report.xor_violations)
print("within budget 1?", report.budget_ok(1), "| within budget 0?", report.budget_ok(0))
print("coverage deficit below 6:", report.coverage_deficit)

# corrupting a text with the hole itself turns it into the plain enumeration
text = corrupt(canonical_text(target), [(4, 3)])
print("\ncorrupted text:", list(text.prefix(8).items))
print("as a 1-corrupted text:", validate(text.prefix(8), target, horizon=8).xor_violations)

# texts simulate contrastive data by pairing with the least unseen example
for n in (2, 3, 5):
    synth = synthetic_contrastive_from_text(canonical_text(target).prefix(n))
    print(f"synthetic pairs after {n} text items:", [str(p) for p in synth.items])
print("(the partner settles at 3, the least example the text never shows)")

"""Edge-induced closure and the dimension that governs uniform generation.

The version space of an edge set keeps the hypotheses crossed by every
edge; intersecting their supports gives the certified positives.  An edge
set is hollow when those certificates never leave its own vertices; the
largest hollow size is the closure dimension, and dimension d means d+1
distinct edges are exactly what a uniform generator needs.
"""

from crosslimit import (
    EdgeSet,
    Pair,
    closure_dimension,
    contrastive_closure,
    edge_version_space,
    is_hollow,
    pinned_core_class,
    punctured_class,
    safe_set,
    sampled_contrastive,
    six_cell_class,
    augmented_class,
    disjoint_support_class,
)
from crosslimit.classes import punctured_hole

# safe sets certify novel positives before identification is possible
aug = augmented_class(5)
prefix = sampled_contrastive(aug.by_id("h2"), seed=1, horizon=30).prefix(8)
print("augmented safe set after 8 pairs:", safe_set(aug, prefix))

# the puncture ladder: hollow sets of every size
punctured = punctured_class(10)
for n in (1, 4, 10):
    ladder = EdgeSet.of(Pair.of(punctured_hole(i), 1) for i in range(1, n + 1))
    closure = contrastive_closure(punctured, ladder)
    print(f"ladder size {n}: closure {closure} | hollow? {is_hollow(punctured, ladder)}")
report = closure_dimension(punctured, max_size=10, vertex_horizon=24)
print("punctured dimension search:", report)

# explicit classes of few members get the exact cell analysis
for cls, label in [
    (pinned_core_class(3, (0,), (1,)), "pinned core {0} anchor {1}"),
    (pinned_core_class(3, (0, 3), (1, 4)), "pinned core {0,3} anchors {1,4}"),
    (augmented_class(5), "augmented(5)"),
    (disjoint_support_class(), "disjoint pair"),
    (six_cell_class(), "six-cell triple"),
]:
    print(f"{label:32s} -> {closure_dimension(cls)}")

# a hollow witness in detail
cls = pinned_core_class(3, (0,), (1,))
witness = closure_dimension(cls).witness
print("\nhollow witness:", witness)
print("version space:", [h.id for h in edge_version_space(cls, witness)])
print("closure:", contrastive_closure(cls, witness))
print("everything certified is already a vertex:", is_hollow(cls, witness))

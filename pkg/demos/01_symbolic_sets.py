"""The decidable set algebra: exact answers instead of horizon guesses.

Every region the theory manipulates (supports, intersections, complements)
is a union of residue classes adjusted by finite exceptions.  Emptiness,
finiteness, cardinality and least elements are all computed exactly, which
is what lets the geometry modules return verdicts instead of approximations.
"""

from crosslimit import SymbolicSet, parse_set_literal

evens = SymbolicSet.residue_class(2, {0})
odds = evens.complement()
print("evens:", evens)
print("odds :", odds)

# exceptions: remove 4 from the evens, add 1
tweaked = evens.difference(SymbolicSet.finite({4})).union(SymbolicSet.finite({1}))
print("evens - {4} + {1}:", tweaked)
print("  contains 4?", tweaked.contains(4), " contains 1?", tweaked.contains(1))

# the algebra is closed: operations renormalize to canonical form
a = parse_set_literal("mod 3 { 0, 1 }")
b = parse_set_literal("mod 2 { 1 } + { 0 }")
print("a & b:", a.intersect(b))
print("a | b:", a.union(b))

# exact size queries
cofinite = SymbolicSet.cofinite({7})
print("X - {7}: cardinality", cofinite.cardinality(), ", least element", cofinite.min_element())
print("{3, 9}: cardinality", SymbolicSet.finite({3, 9}).cardinality())

# canonicalization makes structural equality semantic
assert SymbolicSet.build(4, {0, 2}) == evens
print("mod 4 {0,2} canonicalizes to", SymbolicSet.build(4, {0, 2}))

# round-tripping the literal syntax used by class-spec files
literal = tweaked.literal()
assert parse_set_literal(literal) == tweaked
print("literal round-trip:", literal)

"""Truth-value pairs: tags, pooling evidence, and taking it back out.

A sentence's truth value is a pair (belief . disbelief). Belief is how
strongly the evidence confirms the sentence, disbelief how strongly it
refutes it; whatever is left over is simply unknown. This script walks
the pair algebra end to end.
"""

from pkb import TruthValue, apply_tag, combine, delta_mass, negate, uncombine

# A sentence with some evidence for it and a little against it.
tv = TruthValue(0.3, 0.2)
print(f"truth value          {tv}")

# Tags project the pair down to a single number per question.
for tag in ("t", "not", "unknown", "poss", "poss-not", "mass"):
    print(f"  {tag:<9} -> {apply_tag(tag, tv)}")

# Negation swaps the roles of the two components.
print(f"\nnegated              {negate(tv)}")

# Independent evidence sources pool through combination. Order never
# matters, and the vacuous pair (0 . 0) changes nothing.
first = TruthValue(0.3, 0.0)
second = TruthValue(0.0, 0.2)
pooled = combine(first, second)
print(f"\n{first} pooled with {second} -> {pooled}")
print(f"other order                          -> {combine(second, first)}")
print(f"pooled with (0 . 0)                  -> {combine(pooled, TruthValue(0, 0))}")

# Combination is invertible: removing one source's contribution leaves
# exactly what the remaining sources said. This is what makes exact
# retraction possible in the chaining engines.
residual = uncombine(pooled, second)
print(f"\nremoving {second} from {pooled} -> {residual}")

# The size of a change, used by the inference-cutoff machinery.
print(f"\nchange from {first} to {pooled}: {delta_mass(first, pooled):.4f}")

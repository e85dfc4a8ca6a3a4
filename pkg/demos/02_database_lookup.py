"""The probabilistic database: storing, negating, and tag/cutoff lookup.

Facts are stored once under their un-negated core: asserting a negation
stores the swapped pair, so a sentence and its negation can never drift
apart. Lookups name a tag and a cutoff and return the bindings whose
tagged value reaches the cutoff.
"""

from pkb import KnowledgeBase, TruthValue, format_bindings, parse_sentence

kb = KnowledgeBase()
kb.load_text(
    """
    (fact (foo fred) (0.3 . 0.2))
    (fact (foo harry) (0.7 . 0.0))
    """
)

# Confirmation of at least 0.5: only harry qualifies.
print("lookup (foo $x) t 0.5:")
for bindings, value in kb.lookup(parse_sentence("(foo $x)"), "t", 0.5):
    print(f"  {format_bindings(bindings)} -> {value}")

# Looking up a negation is looking up the disconfirmation of the core.
print("\nlookup (not (foo fred)) t 0.1:")
for _b, value in kb.lookup(parse_sentence("(not (foo fred))"), "t", 0.1):
    print(f"  value {value}")

# Other tag wrappers work the same way.
print("\nlookup (unknown (foo fred)) t 0.4:")
for _b, value in kb.lookup(parse_sentence("(unknown (foo fred))"), "t", 0.4):
    print(f"  value {value}")

# Asserting (not s) stores s with the pair swapped.
kb.stash(parse_sentence("(not (round earth))"), TruthValue(0.9, 0.05))
print(f"\nstored for (round earth): {kb.retrieve(parse_sentence('(round earth)'))}")

# Re-asserting pools with what is already there; replacement is a
# separate operation.
kb.stash(parse_sentence("(foo fred)"), TruthValue(0.2, 0.0))
print(f"(foo fred) after a second stash: {kb.retrieve(parse_sentence('(foo fred)'))}")
kb.set_truth(parse_sentence("(foo fred)"), TruthValue(0.5, 0.1))
print(f"(foo fred) after set_truth:      {kb.retrieve(parse_sentence('(foo fred)'))}")

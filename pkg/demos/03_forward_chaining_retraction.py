"""Forward chaining with exact retraction.

Rules carry their own truth pair: the value the consequence earns when
the premise holds outright. When a premise's value changes later, the
rule's old contribution is surgically removed (the combination rule is
invertible) and the new one pooled in; evidence from other sources is
untouched. A justification ledger records every firing to make that
possible.
"""

from pkb import KnowledgeBase, TruthValue, parse_sentence

kb = KnowledgeBase(trace=lambda line: print(f"    | {line}"))

print("adding rule (goo gets 0.9 of foo's belief) and some base evidence:")
kb.add_rule(parse_sentence("(foo $x)"), parse_sentence("(goo $x)"), TruthValue(0.9, 0.0))
kb.stash(parse_sentence("(goo fred)"), TruthValue(0.2, 0.1))  # independent evidence
kb.stash(parse_sentence("(foo fred)"), TruthValue(0.6, 0.2))

print(f"\n(goo fred) is now {kb.retrieve(parse_sentence('(goo fred)'))}")
print("justifications:")
for j in kb.why(parse_sentence("(goo fred)")):
    print(f"  rule={j.rule_id} premise={j.premise_tv_at_firing} contributed {j.contribution}")

print("\nnew information arrives: (foo fred) is actually (0.1 . 0.7)")
kb.set_truth(parse_sentence("(foo fred)"), TruthValue(0.1, 0.7))
print(f"\n(goo fred) settles at {kb.retrieve(parse_sentence('(goo fred)'))}")

# The same value a fresh database would compute from the final facts:
fresh = KnowledgeBase()
fresh.add_rule(parse_sentence("(foo $x)"), parse_sentence("(goo $x)"), TruthValue(0.9, 0.0))
fresh.stash(parse_sentence("(goo fred)"), TruthValue(0.2, 0.1))
fresh.stash(parse_sentence("(foo fred)"), TruthValue(0.1, 0.7))
print(f"fresh rebuild gives    {fresh.retrieve(parse_sentence('(goo fred)'))}")

# A rule too weak to matter is not even fired when the cutoff says so.
from pkb import EngineConfig

quiet = KnowledgeBase(config=EngineConfig(inference_cutoff=0.02))
quiet.add_rule(parse_sentence("(foo $x)"), parse_sentence("(goo $x)"), TruthValue(0.01, 0.0))
quiet.stash(parse_sentence("(foo fred)"), TruthValue(1.0, 0.0))
print(f"\nwith cutoff 0.02 a (0.01 . 0) rule leaves (goo fred) at "
      f"{quiet.retrieve(parse_sentence('(goo fred)'))}")

"""Meta-level control: directing which inference method answers what.

Control entries map goal patterns to methods. The first matching entry
wins; goals nothing matches fall back to a store lookup, then backward
chaining. The same table drives the `pkb query` command.
"""

from pkb import KnowledgeBase, parse_sentence, truep

kb = KnowledgeBase()
kb.load_text(
    """
    (control (crime $x) resolution)
    (control (foo $x) lookup)

    (fact (foo fred) (0.3 . 0.2))

    (rule (politician $p) (crook $p) (0.4 . 0.0))
    (fact (politician Jones) (1 . 0))

    (clause (or (crime theft)) (0.9 . 0.0))
    (clause (or (not (crime theft)) (crime conspiracy)) (0.8 . 0.1))
    """
)

print("dispatch table:")
for entry in kb.control_entries:
    print(f"  {entry.pattern} -> {entry.method}")

print(f"\n(foo fred)      -> {kb.dispatch(parse_sentence('(foo fred)'))}")
print(f"(crime theft)   -> {kb.dispatch(parse_sentence('(crime theft)'))}")
print(f"(crook Jones)   -> {kb.dispatch(parse_sentence('(crook Jones)'))} (falls back to lookup, then chaining)")

print("\ntruep (foo fred) t 0.2 via lookup:")
print(f"  {truep(kb, parse_sentence('(foo fred)'), 't', 0.2)}")

print("\ntruep (crime conspiracy) t 0.5 via resolution:")
print(f"  {truep(kb, parse_sentence('(crime conspiracy)'), 't', 0.5)}")

print("\ntruep (crook Jones) t 0.3 via the default cascade:")
print(f"  {truep(kb, parse_sentence('(crook Jones)'), 't', 0.3)}")

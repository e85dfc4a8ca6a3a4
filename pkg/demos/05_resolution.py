"""Ground probabilistic resolution on the joint model frame.

A clause's pair also says something about its negation, so clauses
resolve in two modes: on a shared atom of opposite sign (the classical
step) and of the same sign (both parents failing, or exactly one
holding, constrains the resolvent too). Values come from intersecting
the parents' mass over the models of their combined atoms; shared atoms
are handled exactly, not assumed independent.
"""

from pkb import Clause, EngineConfig, TruthValue, resolve, saturate, sym

P, Q, R = sym("p"), sym("q"), sym("r")

c1 = Clause.make([(P, True), (Q, True)], TruthValue(0.8, 0.1), support={"1"})
c2 = Clause.make([(P, False), (R, True)], TruthValue(0.6, 0.2), support={"2"})
print(f"parents:   {c1}")
print(f"           {c2}")
opposite = resolve(c1, c2, P)
print(f"opposite-sign resolvent on p: {opposite}")
print(f"  closed form a1*a2/(1-b1*b2) = {0.8 * 0.6 / (1 - 0.1 * 0.2):.10f}")

c3 = Clause.make([(P, True), (R, True)], TruthValue(0.6, 0.2), support={"2"})
same = resolve(c1, c3, P)
print(f"\nsame-sign resolvent on p:     {same}")
print(f"  closed form (a1*b2 + b1*a2, b1*b2) = ({0.8 * 0.2 + 0.1 * 0.6:.2f}, {0.1 * 0.2:.2f})")

# At certainty the classical rule falls out.
certain = resolve(
    Clause.make([(P, True), (Q, True)], TruthValue(1, 0), support={"1"}),
    Clause.make([(P, False), (R, True)], TruthValue(1, 0), support={"2"}),
    P,
)
print(f"\nat certainty: {certain}")

# Saturation closes a clause set and reads off a target, pooling only
# derivations with disjoint supporting clauses (independent evidence).
clauses = [
    Clause.make([(P, True)], TruthValue(0.9, 0.0), support={"1"}),
    Clause.make([(P, False), (Q, True)], TruthValue(0.8, 0.0), support={"2"}),
    Clause.make([(R, True)], TruthValue(0.9, 0.0), support={"3"}),
    Clause.make([(R, False), (Q, True)], TruthValue(0.5, 0.0), support={"4"}),
]
target = saturate(clauses, [(Q, True)], config=EngineConfig())
print(f"\ntwo independent routes to (q) pool to {target}")

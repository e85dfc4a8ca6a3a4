"""The probabilistic database.

Facts are stored once, under their negation-normalized core: asserting
``(not s)`` with value (a . b) stores ``s`` with (b . a), so a sentence
and its negation always describe one truth value. Each entry keeps two
pairs: ``base``, the evidence asserted directly about the sentence, and
``tv``, the base pooled with every live rule contribution. Rule firings
are recorded in a justification ledger keyed by (rule, ground bindings),
which is what allows a stale contribution to be removed exactly when
its premise changes.

Two assertion operations are provided because both behaviors are
needed: `stash` treats its argument as a new independent evidence
source and combines it in; `set_truth` replaces the directly asserted
evidence outright. Both trigger forward chaining on the resulting
change.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import NotFound, RangeError
from .terms import (
    Bindings,
    Compound,
    Symbol,
    Term,
    format_bindings,
    is_ground,
    normalize_negation,
    unify,
    variables_in,
)
from .truth import (
    TAG_DUAL,
    TAG_NAMES,
    VACUOUS,
    EngineConfig,
    TruthValue,
    apply_tag,
    combine,
    delta_mass,
    negate,
)

_AND = Symbol("and")


@dataclass
class FactRecord:
    """One stored sentence: direct evidence and the pooled value."""

    base: TruthValue
    tv: TruthValue


@dataclass
class Rule:
    """A conditional ``premise -> consequence`` carrying its own truth pair.

    The pair is the value the consequence earns when the premise holds
    outright; partial premises scale it down. A consequence written as
    ``(not c)`` is stored as ``c`` with the pair swapped.
    """

    id: str
    premise: Term
    consequence: Term
    rule_tv: TruthValue
    conjuncts: tuple  # of (core, positive) pairs


@dataclass
class Justification:
    """Record of one rule firing, precise enough to retract it later."""

    rule_id: str
    bindings: Bindings
    premise_tv_at_firing: TruthValue
    contribution: TruthValue
    consequence: Term


@dataclass(frozen=True)
class ControlEntry:
    """Meta-level directive: goals matching ``pattern`` use ``method``."""

    pattern: Term
    method: str
    priority: int


def binding_key(bindings: Bindings) -> tuple:
    """Hashable canonical key for a ground binding set."""
    return tuple(sorted(((v.name, t) for v, t in bindings.items()), key=lambda i: i[0]))


def make_rule(rule_id: str, premise: Term, consequence: Term, rule_tv: TruthValue) -> Rule:
    """Normalize and validate a rule.

    Splits an ``(and ...)`` premise into conjuncts, rewrites a negated
    consequence into core + swapped pair, and checks that firing the
    premise grounds the consequence.
    """
    cons_core, flipped = normalize_negation(consequence)
    if flipped:
        rule_tv = negate(rule_tv)
    if isinstance(premise, Compound) and premise.elements[0] == _AND:
        parts = premise.elements[1:]
        if not parts:
            raise ValueError("empty (and) premise")
    else:
        parts = (premise,)
    conjuncts = []
    premise_vars = set()
    for part in parts:
        core, neg = normalize_negation(part)
        conjuncts.append((core, not neg))
        premise_vars |= variables_in(core)
    missing = variables_in(cons_core) - premise_vars
    if missing:
        names = ", ".join(sorted("$" + v.name for v in missing))
        raise ValueError(f"rule {rule_id}: consequence variables {names} not bound by the premise")
    return Rule(rule_id, premise, cons_core, rule_tv, tuple(conjuncts))


def unwrap_query(pattern: Term, tag: str = "t") -> tuple[Term, str]:
    """Fold tag wrappers on a query pattern into an effective tag.

    ``(not p)`` flips the tag to its dual; an outer ``(unknown p)``,
    ``(poss p)`` etc. names the tag directly. Unwrapping stops when a
    wrapper cannot be folded into the tag accumulated so far.
    """
    while (
        isinstance(pattern, Compound)
        and len(pattern.elements) == 2
        and isinstance(pattern.elements[0], Symbol)
        and pattern.elements[0].name in TAG_NAMES
    ):
        name = pattern.elements[0].name
        if name == "not":
            tag = TAG_DUAL[tag]
        elif tag == "t":
            tag = name
        elif tag == "not":
            tag = TAG_DUAL[name]
        else:
            break
        pattern = pattern.elements[1]
    return pattern, tag


def _index_key(sentence: Term):
    if isinstance(sentence, Compound) and isinstance(sentence.elements[0], Symbol):
        return (sentence.elements[0].name, len(sentence.elements))
    if isinstance(sentence, Symbol):
        return (sentence.name, 0)
    return None


class KnowledgeBase:
    """Facts, rules, clauses, control entries and the justification ledger."""

    def __init__(self, config: EngineConfig | None = None, trace=None):
        self.config = config or EngineConfig()
        self.trace = trace  # callable taking one line of text, or None
        self._facts: dict[Term, FactRecord] = {}
        self._index: dict = {}
        self.rules: list[Rule] = []
        self.clauses: list = []
        self.control_entries: list[ControlEntry] = []
        self._ledger: dict[tuple, Justification] = {}
        self._by_consequence: dict[Term, set] = {}
        self._rule_count = 0
        self._clause_count = 0

    # -- storage ------------------------------------------------------------

    def _normalize(self, sentence: Term, tv: TruthValue) -> tuple[Term, TruthValue]:
        core, flipped = normalize_negation(sentence)
        if not is_ground(core):
            raise ValueError(f"cannot store non-ground sentence {core}")
        if not (isinstance(core, Symbol) or (isinstance(core, Compound) and isinstance(core.elements[0], Symbol))):
            raise ValueError(f"not a sentence: {core}")
        return core, (negate(tv) if flipped else tv)

    def _write(self, core: Term, record: FactRecord):
        if record.tv.is_vacuous() and record.base.is_vacuous():
            self._drop(core)
            return
        if core not in self._facts:
            self._index.setdefault(_index_key(core), {})[core] = None
        self._facts[core] = record

    def _drop(self, core: Term):
        if core in self._facts:
            del self._facts[core]
            bucket = self._index.get(_index_key(core))
            if bucket is not None:
                bucket.pop(core, None)

    def stash(self, sentence: Term, tv: TruthValue):
        """Combine a new piece of evidence into the sentence's entry."""
        core, tv = self._normalize(sentence, tv)
        if tv.is_vacuous():
            return
        record = self._facts.get(core)
        if record is None:
            record = FactRecord(VACUOUS, VACUOUS)
        old = record.tv
        new = combine(old, tv)
        self._write(core, FactRecord(combine(record.base, tv), new))
        self._changed(core, old, new)

    def set_truth(self, sentence: Term, tv: TruthValue):
        """Replace the directly asserted evidence for the sentence.

        Rule contributions recorded in the ledger stay in force; the
        entry's pooled value is rebuilt from the new base plus those
        contributions, and the change is propagated forward.
        """
        core, tv = self._normalize(sentence, tv)
        record = self._facts.get(core)
        old = record.tv if record else VACUOUS
        new = tv
        for j in self._justifications_for(core):
            new = combine(new, j.contribution)
        self._write(core, FactRecord(tv, new))
        if delta_mass(old, new) > 0.0:
            self._changed(core, old, new)

    def _set_combined(self, core: Term, new_tv: TruthValue):
        """Adjust an entry's pooled value (chaining only; base unchanged)."""
        record = self._facts.get(core)
        base = record.base if record else VACUOUS
        self._write(core, FactRecord(base, new_tv))

    def _changed(self, core: Term, old: TruthValue, new: TruthValue, depth: int = 0):
        from .forward import propagate_change

        propagate_change(self, core, old, new, self.config, depth)

    # -- reads --------------------------------------------------------------

    def retrieve(self, sentence: Term) -> TruthValue:
        """Exact three-valued read: (0 . 0) for sentences never stored."""
        core, flipped = normalize_negation(sentence)
        record = self._facts.get(core)
        tv = record.tv if record else VACUOUS
        return negate(tv) if flipped else tv

    def retrieve_core(self, core: Term) -> TruthValue:
        record = self._facts.get(core)
        return record.tv if record else VACUOUS

    def _candidates(self, pattern: Term):
        key = _index_key(pattern)
        if key is None:
            return list(self._facts)
        return list(self._index.get(key, ()))

    def match_facts(self, pattern: Term, use_base: bool = False):
        """Bindings and truth values of every stored fact unifying with
        ``pattern`` (no tag filtering)."""
        out = []
        for sentence in self._candidates(pattern):
            theta = unify(pattern, sentence, {})
            if theta is None:
                continue
            record = self._facts[sentence]
            out.append((theta, record.base if use_base else record.tv))
        return out

    def lookup(self, pattern: Term, tag: str = "t", cutoff: float = 1.0):
        """Stored-fact query: every binding whose tagged value reaches
        the cutoff.

        The pattern may carry tag wrappers, e.g. looking up
        ``(not (foo fred))`` is looking up ``(foo fred)`` under the
        ``not`` tag. Sentences never stored yield no answers.
        """
        if not 0.0 <= cutoff <= 1.0:
            raise RangeError(f"cutoff must be in [0, 1], got {cutoff!r}")
        core, tag = unwrap_query(pattern, tag)
        answers = []
        for theta, tv in self.match_facts(core):
            value = apply_tag(tag, tv)
            if value >= cutoff:
                answers.append((theta, value))
        return answers

    # -- rules, clauses, control ----------------------------------------------

    def add_rule(self, premise: Term, consequence: Term, rule_tv: TruthValue, rule_id: str | None = None) -> Rule:
        """Store a rule and fire it on everything already present."""
        if rule_id is None:
            self._rule_count += 1
            rule_id = f"r{self._rule_count}"
        rule = make_rule(rule_id, premise, consequence, rule_tv)
        self.rules.append(rule)
        from .forward import fire_rule

        fire_rule(self, rule, self.config)
        return rule

    def add_clause(self, literals, tv: TruthValue):
        from .resolution import Clause

        self._clause_count += 1
        clause = Clause.make(literals, tv, support=frozenset({f"c{self._clause_count}"}))
        self.clauses.append(clause)
        return clause

    def add_control(self, pattern: Term, method: str) -> ControlEntry:
        entry = ControlEntry(pattern, method, len(self.control_entries))
        self.control_entries.append(entry)
        return entry

    def dispatch(self, goal: Term) -> str | None:
        """Method named by the first control entry matching the goal."""
        from .terms import rename_apart

        for entry in self.control_entries:
            (pattern,) = rename_apart([entry.pattern])
            if unify(pattern, goal, {}) is not None:
                return entry.method
        return None

    # -- justification ledger -------------------------------------------------

    def record_justification(self, j: Justification):
        key = (j.rule_id, binding_key(j.bindings))
        self._ledger[key] = j
        self._by_consequence.setdefault(j.consequence, set()).add(key)

    def find_justification(self, rule_id: str, bindings: Bindings) -> Justification | None:
        return self._ledger.get((rule_id, binding_key(bindings)))

    def retract_justification(self, rule_id: str, bindings: Bindings) -> TruthValue:
        """Remove a firing record, returning its contribution for inversion."""
        key = (rule_id, binding_key(bindings))
        j = self._ledger.pop(key, None)
        if j is None:
            raise NotFound(f"no justification for {rule_id} at {binding_key(bindings)}")
        refs = self._by_consequence.get(j.consequence)
        if refs is not None:
            refs.discard(key)
            if not refs:
                del self._by_consequence[j.consequence]
        return j.contribution

    def _justifications_for(self, consequence: Term):
        keys = self._by_consequence.get(consequence, ())
        return [self._ledger[k] for k in sorted(keys, key=repr)]

    def justifications_for_rule(self, rule_id: str):
        return [j for (rid, _), j in self._ledger.items() if rid == rule_id]

    def why(self, sentence: Term):
        """Live justifications whose consequence matches the sentence."""
        core, _ = normalize_negation(sentence)
        out = []
        for j in self._ledger.values():
            if unify(core, j.consequence, {}) is not None:
                out.append(j)
        out.sort(key=lambda j: (j.rule_id, format_bindings(j.bindings)))
        return out

    # -- loading ----------------------------------------------------------------

    def set_variable(self, name: str, value: float):
        """Adjust one engine threshold by its surface name."""
        fields = {
            "inference-cutoff": "inference_cutoff",
            "accept-as-true": "accept_as_true",
            "max-chain-depth": "max_chain_depth",
        }
        if name not in fields:
            raise ValueError(f"unknown variable {name!r}; expected one of {', '.join(fields)}")
        if name == "max-chain-depth":
            value = int(value)
        self.config = replace(self.config, **{fields[name]: value})

    def load(self, statements):
        from .sexpr import (
            ClauseStatement,
            ControlStatement,
            FactStatement,
            RuleStatement,
            SetVarStatement,
        )

        for stmt in statements:
            if isinstance(stmt, FactStatement):
                self.stash(stmt.sentence, stmt.tv)
            elif isinstance(stmt, RuleStatement):
                self.add_rule(stmt.premise, stmt.consequence, stmt.tv)
            elif isinstance(stmt, ClauseStatement):
                self.add_clause(stmt.literals, stmt.tv)
            elif isinstance(stmt, ControlStatement):
                self.add_control(stmt.pattern, stmt.method)
            elif isinstance(stmt, SetVarStatement):
                self.set_variable(stmt.name, stmt.value)
            else:
                raise TypeError(f"not a statement: {stmt!r}")

    def load_text(self, text: str):
        from .sexpr import parse_kb

        self.load(parse_kb(text))

    def load_file(self, path):
        with open(path, "r", encoding="utf-8") as handle:
            self.load_text(handle.read())

    def _emit(self, line: str):
        if self.trace is not None:
            self.trace(line)

    def facts(self):
        """Snapshot of (sentence, record) pairs in insertion order."""
        return [(s, FactRecord(r.base, r.tv)) for s, r in self._facts.items()]

"""Probabilistic knowledge base with belief/disbelief truth values.

Sentences are stored with evidence pairs (belief . disbelief), queried
by tag and cutoff, chained forward with exact retraction of stale rule
contributions, proved backward over an agenda that accumulates evidence
from every applicable source, and resolved clause-against-clause on a
joint model frame. A meta-level control table decides which inference
method answers which goals.
"""

from .backward import default_priority, prove, truep
from .errors import (
    DepthExceeded,
    IterationBoundExceeded,
    NotCertainRemovable,
    NotFound,
    NoValidResidual,
    ParseError,
    PkbError,
    RangeError,
    TautologicalResolvent,
    TotalConflict,
)
from .forward import propagate_change
from .kb import (
    ControlEntry,
    FactRecord,
    Justification,
    KnowledgeBase,
    Rule,
    make_rule,
    unwrap_query,
)
from .resolution import Clause, resolve, saturate
from .sexpr import (
    ClauseStatement,
    ControlStatement,
    FactStatement,
    RuleStatement,
    SetVarStatement,
    parse_kb,
    parse_sentence,
    parse_truth,
    print_statement,
)
from .terms import (
    Compound,
    Number,
    Symbol,
    Term,
    Variable,
    compound,
    format_bindings,
    is_ground,
    normalize_negation,
    rename_apart,
    substitute,
    sym,
    unify,
    var,
    variables_in,
)
from .truth import (
    FALSE,
    TAG_NAMES,
    TRUE,
    VACUOUS,
    EngineConfig,
    TruthValue,
    apply_tag,
    combine,
    conjoin,
    delta_mass,
    negate,
    propagate,
    uncombine,
)

__all__ = [
    "Clause",
    "Compound",
    "ControlEntry",
    "ClauseStatement",
    "ControlStatement",
    "DepthExceeded",
    "EngineConfig",
    "FALSE",
    "FactRecord",
    "FactStatement",
    "IterationBoundExceeded",
    "Justification",
    "KnowledgeBase",
    "NotCertainRemovable",
    "NotFound",
    "NoValidResidual",
    "Number",
    "ParseError",
    "PkbError",
    "RangeError",
    "Rule",
    "RuleStatement",
    "SetVarStatement",
    "Symbol",
    "TAG_NAMES",
    "TRUE",
    "TautologicalResolvent",
    "Term",
    "TotalConflict",
    "TruthValue",
    "VACUOUS",
    "Variable",
    "apply_tag",
    "combine",
    "compound",
    "conjoin",
    "default_priority",
    "delta_mass",
    "format_bindings",
    "is_ground",
    "make_rule",
    "negate",
    "normalize_negation",
    "parse_kb",
    "parse_sentence",
    "parse_truth",
    "print_statement",
    "propagate",
    "propagate_change",
    "prove",
    "rename_apart",
    "resolve",
    "saturate",
    "substitute",
    "sym",
    "truep",
    "unify",
    "unwrap_query",
    "uncombine",
    "var",
    "variables_in",
]

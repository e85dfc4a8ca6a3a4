"""Truth-value pairs and the evidence calculus built on them.

A sentence's truth value is a pair (belief . disbelief): belief is the
extent to which the available evidence confirms the sentence, disbelief
the extent to which it disconfirms it. Both lie in [0, 1] and their sum
never exceeds 1; the residue 1 - belief - disbelief is the mass left
uncommitted ("unknown"). Pairs print in dotted notation, e.g.
``(0.3 . 0.2)``.

Independent evidence about one sentence is pooled with `combine`, the
two-outcome Dempster rule: each source distributes mass over
{confirms, disconfirms, uncommitted}, the product masses of the nine
cells are intersected, the two contradictory cells are discarded, and
the rest is renormalized. The rule is commutative, associative, has the
vacuous pair (0 . 0) as identity, and is invertible: `uncombine` removes
one source's contribution from a pooled value without disturbing the
others, which is what makes exact retraction possible elsewhere in the
package.

`propagate` pushes a premise value through a rule pair, `conjoin` pools
conjunct values inside a premise, and the six tag functions project a
pair down to the single number a query asks about.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoValidResidual, NotCertainRemovable, RangeError, TotalConflict

# Arithmetic drift this small is clamped back into range; anything larger
# is treated as a logic bug and rejected.
DRIFT_TOLERANCE = 1e-12

# A solved residual must reproduce the original combination this closely.
_RESIDUAL_CHECK = 1e-6

TAG_NAMES = ("t", "not", "unknown", "poss", "poss-not", "mass")

# Tag of the negated pair, for rewriting queries wrapped in (not ...).
TAG_DUAL = {
    "t": "not",
    "not": "t",
    "poss": "poss-not",
    "poss-not": "poss",
    "unknown": "unknown",
    "mass": "mass",
}


def _clean(value: float, name: str) -> float:
    value = float(value)
    if value != value or value in (float("inf"), float("-inf")):
        raise RangeError(f"{name} must be a finite real, got {value!r}")
    if value < 0.0:
        if value < -DRIFT_TOLERANCE:
            raise RangeError(f"{name} = {value!r} is below 0")
        return 0.0
    if value > 1.0:
        if value > 1.0 + DRIFT_TOLERANCE:
            raise RangeError(f"{name} = {value!r} is above 1")
        return 1.0
    return value


@dataclass(frozen=True)
class TruthValue:
    """An evidence pair (belief . disbelief) with belief + disbelief <= 1."""

    belief: float
    disbelief: float

    def __post_init__(self):
        a = _clean(self.belief, "belief")
        b = _clean(self.disbelief, "disbelief")
        if a + b > 1.0:
            if a + b > 1.0 + DRIFT_TOLERANCE:
                raise RangeError(f"belief + disbelief = {a + b!r} exceeds 1")
            b = 1.0 - a  # shave the float excess off the disbelief side
        object.__setattr__(self, "belief", a)
        object.__setattr__(self, "disbelief", b)

    @property
    def unknown(self) -> float:
        return 1.0 - (self.belief + self.disbelief)

    @property
    def mass(self) -> float:
        return self.belief + self.disbelief

    def is_vacuous(self) -> bool:
        return self.belief == 0.0 and self.disbelief == 0.0

    def is_certain(self) -> bool:
        """Fully confirmed (1 . 0) or fully disconfirmed (0 . 1)."""
        return (self.belief == 1.0 and self.disbelief == 0.0) or (
            self.belief == 0.0 and self.disbelief == 1.0
        )

    def __str__(self):
        return f"({format_real(self.belief)} . {format_real(self.disbelief)})"


VACUOUS = TruthValue(0.0, 0.0)
TRUE = TruthValue(1.0, 0.0)
FALSE = TruthValue(0.0, 1.0)


def format_real(x: float) -> str:
    """Shortest decimal text that parses back to exactly x."""
    if x == int(x):
        return str(int(x))
    return repr(x)


def apply_tag(tag: str, tv: TruthValue) -> float:
    """Project a truth pair to the single number named by ``tag``.

    t is the confirmation, not the disconfirmation, unknown the
    uncommitted residue, poss / poss-not the extent to which the
    sentence is possibly true / possibly false, and mass the total
    evidential commitment.
    """
    a, b = tv.belief, tv.disbelief
    if tag == "t":
        return a
    if tag == "not":
        return b
    if tag == "unknown":
        return 1.0 - (a + b)
    if tag == "poss":
        return 1.0 - b
    if tag == "poss-not":
        return 1.0 - a
    if tag == "mass":
        return a + b
    raise ValueError(f"unknown tag {tag!r}; expected one of {TAG_NAMES}")


def negate(tv: TruthValue) -> TruthValue:
    """Evidence for the negated sentence: swap the pair."""
    return TruthValue(tv.disbelief, tv.belief)


def conflict(x: TruthValue, y: TruthValue) -> float:
    """Mass the two sources assign to contradictory outcomes."""
    return x.belief * y.disbelief + x.disbelief * y.belief


def combine(x: TruthValue, y: TruthValue) -> TruthValue:
    """Pool two independent evidence sources about one sentence.

    Raises TotalConflict when one source fully confirms what the other
    fully disconfirms (all product mass falls in contradictory cells).
    """
    k = conflict(x, y)
    if k >= 1.0:
        raise TotalConflict(f"cannot combine {x} with {y}")
    a1, b1, u1 = x.belief, x.disbelief, x.unknown
    a2, b2, u2 = y.belief, y.disbelief, y.unknown
    belief = a1 * a2 + a1 * u2 + u1 * a2
    disbelief = b1 * b2 + b1 * u2 + u1 * b2
    unknown = u1 * u2
    # The surviving mass equals 1 - k in exact arithmetic; dividing by
    # the computed sum keeps the result inside the simplex even when
    # near-total conflict amplifies rounding error.
    norm = belief + disbelief + unknown
    return TruthValue(belief / norm, disbelief / norm)


def uncombine(total: TruthValue, component: TruthValue) -> TruthValue:
    """Invert `combine`: the residual r with combine(r, component) = total.

    The defining equations are linear in r once the component is fixed,
    so this is a 2x2 solve. A certain component is not removable (the
    system degenerates), and when the solved residual falls outside the
    valid region, or the system is singular with no recoverable point,
    NoValidResidual is raised so the caller can rebuild the accumulation
    from its parts instead.
    """
    if component.is_certain():
        raise NotCertainRemovable(f"cannot remove certain component {component}")
    ac, bc = component.belief, component.disbelief
    uc = component.unknown
    at, bt = total.belief, total.disbelief

    m11 = at * bc + uc
    m12 = ac * (at - 1.0)
    m21 = bc * (bt - 1.0)
    m22 = bt * ac + uc
    r1 = at - ac
    r2 = bt - bc
    det = m11 * m22 - m12 * m21

    if abs(det) > DRIFT_TOLERANCE:
        ar = (r1 * m22 - m12 * r2) / det
        br = (m11 * r2 - r1 * m21) / det
    else:
        # Singular system (the component carries full mass): the valid
        # residuals form a line. Take the least-norm point on it.
        p, q, rhs = max(((m11, m12, r1), (m21, m22, r2)), key=lambda row: row[0] ** 2 + row[1] ** 2)
        n2 = p * p + q * q
        if n2 <= DRIFT_TOLERANCE:
            ar, br = 0.0, 0.0
        else:
            ar = p * rhs / n2
            br = q * rhs / n2

    # Clamp the solved point into the simplex; whether it is genuinely
    # a residual is decided by recombining below, so a solution pushed
    # slightly outside by an ill-conditioned solve is not rejected.
    ar = min(max(ar, 0.0), 1.0)
    br = min(max(br, 0.0), 1.0)
    if ar + br > 1.0:
        scale = ar + br
        ar, br = ar / scale, br / scale
    try:
        residual = TruthValue(ar, br)
        check = combine(residual, component)
    except TotalConflict as exc:
        raise NoValidResidual(f"no residual for {component} inside {total}") from exc
    if (
        abs(check.belief - total.belief) > _RESIDUAL_CHECK
        or abs(check.disbelief - total.disbelief) > _RESIDUAL_CHECK
    ):
        raise NoValidResidual(
            f"residual {residual} recombines to {check}, not {total}"
        )
    return residual


def propagate(premise_tv: TruthValue, rule_tv: TruthValue) -> TruthValue:
    """Contribution a rule makes to its consequence given its premise value.

    The rule pair is read as a conditional: it scales with the belief in
    the premise only, so disconfirmed premise instances contribute
    nothing (a non-instance of the premise is not evidence about the
    consequence).
    """
    return TruthValue(
        premise_tv.belief * rule_tv.belief,
        premise_tv.belief * rule_tv.disbelief,
    )


def conjoin(x: TruthValue, y: TruthValue) -> TruthValue:
    """Truth pair of a conjunction of independently supported conjuncts.

    Belief multiplies; disbelief pools like a probabilistic OR (either
    conjunct failing fails the conjunction). The result is always a
    valid pair because each belief is bounded by 1 - disbelief.
    """
    return TruthValue(
        x.belief * y.belief,
        x.disbelief + y.disbelief - x.disbelief * y.disbelief,
    )


def delta_mass(old: TruthValue, new: TruthValue) -> float:
    """Size of a truth-value change: L1 distance of the pairs, in [0, 2]."""
    return abs(new.belief - old.belief) + abs(new.disbelief - old.disbelief)


@dataclass
class EngineConfig:
    """Tunable thresholds shared by the inference engines.

    inference_cutoff: a rule whose (re)firing would shift its
        consequence by less mass than this is skipped.
    accept_as_true: once a goal's confirmation or disconfirmation
        reaches this level, goal-directed proving stops looking for
        further evidence about it.
    max_chain_depth: hard bound on chaining recursion.
    """

    inference_cutoff: float = 0.0
    accept_as_true: float = 1.0
    max_chain_depth: int = 64

    def __post_init__(self):
        if not 0.0 <= self.inference_cutoff <= 1.0:
            raise RangeError(f"inference_cutoff must be in [0, 1], got {self.inference_cutoff!r}")
        if not 0.0 < self.accept_as_true <= 1.0:
            raise RangeError(f"accept_as_true must be in (0, 1], got {self.accept_as_true!r}")
        if self.max_chain_depth < 1:
            raise RangeError(f"max_chain_depth must be positive, got {self.max_chain_depth!r}")

""" Registry and evaluators for the LEL and IE bounds of derived graphs.

    Each BoundId names one formula. Formulas are written out term by term
    without simplification; a transcription slip then shows up as a
    sandwich or equality failure instead of being absorbed.

    Conventions:
        A = n(r - 2)/2 * sqrt(2)        (R-graph constant-eigenvalue part)
        B = n(r - 2)/2 * sqrt(2r + 2)   (Q-graph L-spectrum constant part)
        C = n(r - 2)/2 * sqrt(2r - 2)   (Q-graph Q-spectrum constant part)
        m = n r1 r2 / (r1 + r2)         (semiregular edge count)

    The prior line-graph LEL upper bound is printed in the literature with
    a factor 2 n r1 r1; it is transcribed here as 2 n r1 r2, the value its
    derivation (2m / (n - 2)) forces.

    The Q-graph IE bounds are usually printed with B as their constant
    term. The signless spectrum of Q(G) repeats 2r - 2, not 2r + 2, so
    both use C; with B the lower bound exceeds IE(Q(K_n)) for r >= 3.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import enum
import logging
import math
from dataclasses import dataclass

# Custom
from models.exceptions import (
    InapplicableMap,
    MissingInput,
    NotApplicable,
    StandingAssumptionViolated
)
from models.invariants import laplacian_top_equal, signless_tail_equal
from models.ozeki import OzekiInstance
from models.spectral import CLAMP_TOL, SpectrumKind

##########
# Logger #
##########
logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)


#########
# Types #
#########
class Side(enum.Enum):
    UPPER = 'upper'
    LOWER = 'lower'


class BoundId(str, enum.Enum):
    LEMMA23_LOWER = 'LEMMA23_LOWER'
    LEMMA23_UPPER = 'LEMMA23_UPPER'
    THM31_UPPER = 'THM31_UPPER'
    THM31_LOWER = 'THM31_LOWER'
    COR32_UPPER = 'COR32_UPPER'
    COR32_LOWER = 'COR32_LOWER'
    PIRZADA_R_LOWER = 'PIRZADA_R_LOWER'
    PIRZADA_R_UPPER = 'PIRZADA_R_UPPER'
    THM33_UPPER = 'THM33_UPPER'
    THM33_LOWER = 'THM33_LOWER'
    COR34_UPPER = 'COR34_UPPER'
    COR34_LOWER = 'COR34_LOWER'
    PIRZADA_Q_LOWER = 'PIRZADA_Q_LOWER'
    PIRZADA_Q_UPPER = 'PIRZADA_Q_UPPER'
    PIRZADA_LINE_UPPER = 'PIRZADA_LINE_UPPER'
    THM35_LOWER = 'THM35_LOWER'
    THM41_UPPER = 'THM41_UPPER'
    THM41_LOWER = 'THM41_LOWER'
    THM42_UPPER = 'THM42_UPPER'
    THM42_LOWER = 'THM42_LOWER'
    WANGYANG_LINE_UPPER = 'WANGYANG_LINE_UPPER'
    THM43_LOWER = 'THM43_LOWER'

    @property
    def entry(self):
        return REGISTRY[self]

    @property
    def invariant(self):
        return self.entry.invariant

    @property
    def target(self):
        return self.entry.target

    @property
    def side(self):
        return self.entry.side


@dataclass(frozen=True)
class BoundParams:
    """ n, m, degree data and the optional base LEL a formula may need. """
    n: int
    m: int = None
    r: int = None
    r1: int = None
    r2: int = None
    lel_base: float = None

    def __post_init__(self):
        if self.r is not None:
            m = self.n * self.r / 2
        elif self.r1 is not None and self.r2 is not None:
            if self.r1 + self.r2 == 0:
                raise InapplicableMap("r1 + r2 must be positive")
            m = self.n * self.r1 * self.r2 / (self.r1 + self.r2)
        else:
            return
        if self.m is None:
            if m != int(m):
                raise InapplicableMap(
                    f"n={self.n} with the given degrees gives non-integer m")
            object.__setattr__(self, 'm', int(m))
        elif self.m != m:
            raise InapplicableMap(
                f"Inconsistent params: m={self.m}, degrees imply m={m:g}")


    @classmethod
    def from_class(cls, g, cls_, lel_base=None):
        """ All degree data a graph's classification supports. """
        r = cls_.r if cls_.is_regular else None
        degrees = cls_.line_degrees or (None, None)
        return cls(n=g.n, m=g.m, r=r, r1=degrees[0], r2=degrees[1],
            lel_base=lel_base)


@dataclass(frozen=True)
class BoundResult:
    id: BoundId
    value: float
    side: Side
    applicable: bool = True
    reason: str = ""
    equality_expected: bool = False


class _NegativeRadicand(Exception):
    pass


def _sqrt(value):
    if value < 0:
        if value > -CLAMP_TOL:
            return 0.0
        raise _NegativeRadicand(value)
    return math.sqrt(value)


############
# Formulas #
############
def _lemma23_lower(p):
    n, r = p.n, p.r
    return n * r / _sqrt(r + 1)


def _lemma23_upper(p):
    n, r = p.n, p.r
    return _sqrt(r + 1) + _sqrt((n - 2) * (n * r - r - 1))


def _thm31_upper(p, lel=None):
    n, r = p.n, p.r
    lel = p.lel_base if lel is None else lel
    return (n * (r - 2) / 2 * SQRT2 + _sqrt(r + 2)
        + (n - 1) * _sqrt(r + 2 + n * r / (n - 1) + 2 * SQRT3 / (n - 1) * lel))


def _thm31_lower(p, lel=None):
    n, r = p.n, p.r
    lel = p.lel_base if lel is None else lel
    return (n * (r - 2) / 2 * SQRT2 + _sqrt(r + 2)
        + (n - 1) * _sqrt(3 / 4 * (r + 2) + n * r / (n - 1)
            + 2 * SQRT3 / (n - 1) * lel))


def _cor32_upper(p):
    return _thm31_upper(p, lel=_lemma23_upper(p))


def _cor32_lower(p):
    return _thm31_lower(p, lel=_lemma23_lower(p))


def _pirzada_r_lower(p):
    n, r = p.n, p.r
    return n * (r - 2) / 2 * SQRT2 + n * _sqrt(r + 2)


def _pirzada_r_upper(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * SQRT2 + _sqrt(r + 2)
        + (n - 1) * (_sqrt(3 * r) + SQRT2))


def _thm33_upper(p, lel=None):
    n, r = p.n, p.r
    lel = p.lel_base if lel is None else lel
    return (n * (r - 2) / 2 * _sqrt(2 * r + 2) + _sqrt(r + 2)
        + (n - 1) * _sqrt(r + 2 + n * r / (n - 1)
            + 2 * _sqrt(r + 1) / (n - 1) * lel))


def _thm33_lower(p):
    n, r, lel = p.n, p.r, p.lel_base
    return (n * (r - 2) / 2 * _sqrt(2 * r + 2) + _sqrt(r + 2)
        + (n - 1) * _sqrt(r + 2 + n * r / (n - 1)
            + 2 * _sqrt(r + 1) / (n - 1) * lel - 3 / 4 * r))


def _cor34_upper(p):
    return _thm33_upper(p, lel=_lemma23_upper(p))


def _cor34_lower(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * _sqrt(2 * r + 2) + _sqrt(r + 2)
        + (n - 1) * _sqrt((3 * n / (n - 1) + 1 / 4) * r + 2))


def _pirzada_q_lower(p):
    n, r = p.n, p.r
    return n * (r - 2) / 2 * _sqrt(2 * r + 2) + n * _sqrt(r + 2)


def _pirzada_q_upper(p):
    n, r = p.n, p.r
    return (n - 1) * _sqrt(r) + _sqrt(r + 2) + (n * r - 2) * _sqrt(2 * r + 2) / 2


def _pirzada_line_upper(p):
    n, r1, r2 = p.n, p.r1, p.r2
    return ((n * r1 * r2 / (r1 + r2) - n + 1) * _sqrt(r1 + r2)
        + (n - 2) * _sqrt((n - 1) / (n - 2) * (r1 + r2)
            - 2 * n * r1 * r2 / ((n - 2) * (r1 + r2))))


def _thm35_lower(p):
    n, r1, r2 = p.n, p.r1, p.r2
    return ((n * r1 * r2 / (r1 + r2) - n + 1) * _sqrt(r1 + r2)
        + (n - 2) * _sqrt((3 * n - 2) / (4 * n - 8) * (r1 + r2)
            - 2 * n * r1 * r2 / ((n - 2) * (r1 + r2))))


def _thm41_upper(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * SQRT2 + _sqrt(3 * r + 2 + 4 * _sqrt(r))
        + (n - 1) * _sqrt((2 * n - 3) / (n - 1) * r
            + 2 * _sqrt((3 * n - 4) / (n - 1) * r) + 2))


def _thm41_lower(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * SQRT2 + _sqrt(3 * r + 2 + 4 * _sqrt(r))
        + (n - 1) * _sqrt(((2 * n - 3) / (n - 1) - (2 - SQRT3) / 2) * r
            + 2 * _sqrt(((3 * n - 4) / (n - 1) - (3 - 2 * SQRT2) / 2) * r)
            + 2))


def _thm42_upper(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * _sqrt(2 * r - 2)
        + _sqrt(5 * r - 2 + 4 * _sqrt(r * (r - 1)))
        + (n - 1) * _sqrt((4 * n - 5) / (n - 1) * r
            + 2 * _sqrt((3 * n - 4) / (n - 1) * r * (r - 1)) - 2))


def _thm42_lower(p):
    n, r = p.n, p.r
    return (n * (r - 2) / 2 * _sqrt(2 * r - 2)
        + _sqrt(5 * r - 2 + 4 * _sqrt(r * (r - 1)))
        + (n - 1) * _sqrt(((4 * n - 5) / (n - 1) - 1 / 4) * r
            + 2 * _sqrt(((3 * n - 4) / (n - 1) - (3 - 2 * SQRT2) / 2)
                * r * (r - 1)) - 2))


def _wangyang_line_upper(p):
    n, r1, r2 = p.n, p.r1, p.r2
    return ((n * r1 * r2 / (r1 + r2) - n + 1) * _sqrt(r1 + r2 - 4)
        + _sqrt(2 * (r1 + r2) - 4)
        + (n - 2) * _sqrt((n - 3) / (n - 2) * (r1 + r2)
            + 2 * n * r1 * r2 / ((n - 2) * (r1 + r2)) - 4))


def _thm43_lower(p):
    n, r1, r2 = p.n, p.r1, p.r2
    return ((n * r1 * r2 / (r1 + r2) - n + 1) * _sqrt(r1 + r2 - 4)
        + _sqrt(2 * (r1 + r2) - 4)
        + (n - 2) * _sqrt((3 * n - 10) / (4 * n - 8) * (r1 + r2)
            + 2 * n * r1 * r2 / ((n - 2) * (r1 + r2)) - 4))


############
# Registry #
############
@dataclass(frozen=True)
class BoundEntry:
    invariant: str
    target: str
    side: Side
    inputs: tuple
    formula: object
    equality_at_complete: bool = False
    strict: bool = False
    description: str = ""


_REG = ('n', 'r')
_REG_LEL = ('n', 'r', 'lel_base')
_SEMI = ('n', 'r1', 'r2')

REGISTRY = {
    BoundId.LEMMA23_LOWER: BoundEntry('LEL', 'base', Side.LOWER, _REG,
        _lemma23_lower, True, False, "nr / sqrt(r+1)"),
    BoundId.LEMMA23_UPPER: BoundEntry('LEL', 'base', Side.UPPER, _REG,
        _lemma23_upper, True, False, "sqrt(r+1) + sqrt((n-2)(nr-r-1))"),
    BoundId.THM31_UPPER: BoundEntry('LEL', 'rgraph', Side.UPPER, _REG_LEL,
        _thm31_upper, True, False, "R-graph LEL upper bound from LEL(G)"),
    BoundId.THM31_LOWER: BoundEntry('LEL', 'rgraph', Side.LOWER, _REG_LEL,
        _thm31_lower, False, False, "R-graph LEL lower bound from LEL(G)"),
    BoundId.COR32_UPPER: BoundEntry('LEL', 'rgraph', Side.UPPER, _REG,
        _cor32_upper, True, False, "R-graph LEL upper bound in n, r"),
    BoundId.COR32_LOWER: BoundEntry('LEL', 'rgraph', Side.LOWER, _REG,
        _cor32_lower, False, True, "R-graph LEL lower bound in n, r"),
    BoundId.PIRZADA_R_LOWER: BoundEntry('LEL', 'rgraph', Side.LOWER, _REG,
        _pirzada_r_lower, False, True, "prior R-graph LEL lower bound"),
    BoundId.PIRZADA_R_UPPER: BoundEntry('LEL', 'rgraph', Side.UPPER, _REG,
        _pirzada_r_upper, False, False, "prior R-graph LEL upper bound"),
    BoundId.THM33_UPPER: BoundEntry('LEL', 'qgraph', Side.UPPER, _REG_LEL,
        _thm33_upper, True, False, "Q-graph LEL upper bound from LEL(G)"),
    BoundId.THM33_LOWER: BoundEntry('LEL', 'qgraph', Side.LOWER, _REG_LEL,
        _thm33_lower, False, True, "Q-graph LEL lower bound from LEL(G)"),
    BoundId.COR34_UPPER: BoundEntry('LEL', 'qgraph', Side.UPPER, _REG,
        _cor34_upper, True, False, "Q-graph LEL upper bound in n, r"),
    BoundId.COR34_LOWER: BoundEntry('LEL', 'qgraph', Side.LOWER, _REG,
        _cor34_lower, False, True, "Q-graph LEL lower bound in n, r"),
    BoundId.PIRZADA_Q_LOWER: BoundEntry('LEL', 'qgraph', Side.LOWER, _REG,
        _pirzada_q_lower, False, True, "prior Q-graph LEL lower bound"),
    BoundId.PIRZADA_Q_UPPER: BoundEntry('LEL', 'qgraph', Side.UPPER, _REG,
        _pirzada_q_upper, False, False, "prior Q-graph LEL upper bound"),
    BoundId.PIRZADA_LINE_UPPER: BoundEntry('LEL', 'line', Side.UPPER, _SEMI,
        _pirzada_line_upper, False, False, "prior line-graph LEL upper bound"),
    BoundId.THM35_LOWER: BoundEntry('LEL', 'line', Side.LOWER, _SEMI,
        _thm35_lower, False, False, "line-graph LEL lower bound"),
    BoundId.THM41_UPPER: BoundEntry('IE', 'rgraph', Side.UPPER, _REG,
        _thm41_upper, True, False, "R-graph IE upper bound"),
    BoundId.THM41_LOWER: BoundEntry('IE', 'rgraph', Side.LOWER, _REG,
        _thm41_lower, False, True, "R-graph IE lower bound"),
    BoundId.THM42_UPPER: BoundEntry('IE', 'qgraph', Side.UPPER, _REG,
        _thm42_upper, True, False, "Q-graph IE upper bound"),
    BoundId.THM42_LOWER: BoundEntry('IE', 'qgraph', Side.LOWER, _REG,
        _thm42_lower, False, True, "Q-graph IE lower bound"),
    BoundId.WANGYANG_LINE_UPPER: BoundEntry('IE', 'line', Side.UPPER, _SEMI,
        _wangyang_line_upper, False, False, "prior line-graph IE upper bound"),
    BoundId.THM43_LOWER: BoundEntry('IE', 'line', Side.LOWER, _SEMI,
        _thm43_lower, False, False, "line-graph IE lower bound"),
}


##############
# Evaluation #
##############
def _check_inputs(bound_id, params, skip=()):
    entry = bound_id.entry
    for name in entry.inputs:
        if name in skip:
            continue
        if getattr(params, name) is None:
            if name in ('r', 'r1', 'r2'):
                raise NotApplicable(
                    f"{bound_id.value} needs a "
                    f"{'regular' if name == 'r' else 'semiregular'} graph")
            raise MissingInput(bound_id.value, name)
    if 'r' in entry.inputs and params.r < 2:
        raise StandingAssumptionViolated(
            f"{bound_id.value} assumes r >= 2, got r={params.r}")
    if 'r1' in entry.inputs and params.r1 + params.r2 < 4:
        raise StandingAssumptionViolated(
            f"{bound_id.value} assumes r1 + r2 >= 4, "
            f"got {params.r1} + {params.r2}")


def equality_expected(bound_id, params, base=None):
    """ True for the equality bounds when the base graph is K_n.

        Given the base spectra (keyed by SpectrumKind) the complete graph
        is recognised from them: mu_1 = ... = mu_{n-1} for the LEL bounds
        and q_2 = ... = q_n for the IE bounds. Without spectra it falls
        back to r = n - 1.
    """
    if not bound_id.entry.equality_at_complete or params.r is None:
        return False
    if base is None:
        return params.r == params.n - 1
    if bound_id.entry.invariant == 'LEL':
        return laplacian_top_equal(base[SpectrumKind.LAPLACIAN])
    return signless_tail_equal(base[SpectrumKind.SIGNLESS])


def evaluate_bound(bound_id, params, base=None):
    """ Evaluate one registry formula at params.

        Raises MissingInput or NotApplicable. A radicand below the clamp
        threshold yields applicable=False instead of raising. base, if
        given, holds the base spectra used to decide equality_expected.
    """
    bound_id = BoundId(bound_id)
    _check_inputs(bound_id, params)
    entry = bound_id.entry
    try:
        value = float(entry.formula(params))
    except _NegativeRadicand as e:
        logger.debug("%s: negative radicand %r", bound_id.value, e.args[0])
        return BoundResult(bound_id, float('nan'), entry.side,
            applicable=False, reason="negative radicand")
    except ZeroDivisionError:
        return BoundResult(bound_id, float('nan'), entry.side,
            applicable=False, reason="division by zero (n too small)")
    return BoundResult(
        id=bound_id,
        value=value,
        side=entry.side,
        equality_expected=equality_expected(bound_id, params, base)
    )


def applicable_bounds(cls, target, invariant):
    """ Registry members matching the invariant, target and class. """
    if target == 'line':
        matches_class = cls.line_degrees is not None
    else:
        matches_class = cls.is_regular
    if not matches_class:
        return []
    return [
        bound_id for bound_id, entry in REGISTRY.items()
        if entry.target == target and entry.invariant == invariant
    ]


###################
# Proof Instances #
###################
def _box_regular_lel_r(r):
    return _sqrt(r + 2), _sqrt(3 * r + 2 + 2 * _sqrt(6 * r))


def _box_regular_lel_q(r):
    return _sqrt(r + 2), _sqrt(3 * r + 2 + 2 * _sqrt(2 * r * (r + 1)))


def _box_regular_ie_r(r):
    return _sqrt(r + 2 + 2 * _sqrt(2 * r)), _sqrt(3 * r + 2 + 4 * _sqrt(r))


def _box_regular_ie_q(r):
    return (_sqrt(3 * r - 2 + 2 * _sqrt(2 * r * (r - 1))),
        _sqrt(5 * r - 2 + 4 * _sqrt(r * (r - 1))))


# id -> (spectrum kind, refined, terms(values, params), box(params))
PROOF_BOXES = {
    BoundId.THM31_LOWER: (
        SpectrumKind.LAPLACIAN, False,
        lambda vals, p: [_sqrt(p.r + 2 + mu + 2 * _sqrt(3 * mu))
                         for mu in vals[:-1]],
        lambda p: _box_regular_lel_r(p.r)),
    BoundId.THM33_LOWER: (
        SpectrumKind.LAPLACIAN, False,
        lambda vals, p: [_sqrt(p.r + 2 + mu + 2 * _sqrt((p.r + 1) * mu))
                         for mu in vals[:-1]],
        lambda p: _box_regular_lel_q(p.r)),
    BoundId.THM41_LOWER: (
        SpectrumKind.SIGNLESS, False,
        lambda vals, p: [_sqrt(p.r + 2 + q + 2 * _sqrt(2 * p.r + q))
                         for q in vals[1:]],
        lambda p: _box_regular_ie_r(p.r)),
    BoundId.THM42_LOWER: (
        SpectrumKind.SIGNLESS, False,
        lambda vals, p: [
            _sqrt(3 * p.r - 2 + q + 2 * _sqrt(p.r * (2 * p.r - 2 + q) - q))
            for q in vals[1:]],
        lambda p: _box_regular_ie_q(p.r)),
    BoundId.THM35_LOWER: (
        SpectrumKind.LAPLACIAN, True,
        lambda vals, p: [_sqrt(p.r1 + p.r2 - mu) for mu in vals[1:-1]],
        lambda p: (0.0, _sqrt(p.r1 + p.r2))),
    BoundId.THM43_LOWER: (
        SpectrumKind.SIGNLESS, True,
        lambda vals, p: [_sqrt(p.r1 + p.r2 - 4 + q) for q in vals[1:-1]],
        lambda p: (_sqrt(p.r1 + p.r2 - 4), _sqrt(2 * (p.r1 + p.r2) - 4))),
}


def proof_instance(bound_id, sp, params):
    """ The Ozeki box a lower-bound proof builds from the base spectrum.

        Returns (OzekiInstance, refined). a holds the per-eigenvalue terms
        of the exact invariant and b is all ones with q = Q = 1.
    """
    bound_id = BoundId(bound_id)
    if bound_id not in PROOF_BOXES:
        raise NotApplicable(f"{bound_id.value} has no Ozeki proof box")
    kind, refined, terms, box = PROOF_BOXES[bound_id]
    if sp.kind is not kind:
        raise NotApplicable(
            f"{bound_id.value} needs a {kind.value} spectrum")
    _check_inputs(bound_id, params, skip=("lel_base",))
    vals = sorted(sp.values, reverse=True)
    a = tuple(terms(vals, params))
    low, high = box(params)
    inst = OzekiInstance(a=a, b=(1.0,) * len(a), p=low, P=high, q=1.0, Q=1.0)
    return inst, refined

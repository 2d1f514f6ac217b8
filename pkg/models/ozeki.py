""" Ozeki's inequality on the Cauchy-Schwarz defect, and its refinement.

    For tuples with 0 < p <= a_i <= P and 0 < q <= b_i <= Q:

        sum(a^2) * sum(b^2) - sum(a*b)^2 <= n^2 / 4 * (P*Q - p*q)^2

    The refined form admits p = 0 or q = 0 provided P*Q != 0 and
    (1 + p/P)(1 + q/Q) >= 2.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import logging
from dataclasses import dataclass

# Third party
import numpy as np

# Custom
from models.exceptions import BoundsViolated, RefinementInapplicable

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Constants #
#############
HOLD_TOL = 1e-9


@dataclass(frozen=True)
class OzekiInstance:
    a: tuple
    b: tuple
    p: float
    P: float
    q: float
    Q: float

    @property
    def refinement_product(self):
        return (1 + self.p / self.P) * (1 + self.q / self.Q)


@dataclass(frozen=True)
class OzekiResult:
    lhs: float
    rhs: float
    holds: bool


def _check_box(values, low, high, which, box_tol):
    for idx, value in enumerate(values):
        if value < low - box_tol or value > high + box_tol:
            raise BoundsViolated(which, idx, value, low, high)


def ozeki_check(inst, refined=False, tol=HOLD_TOL, box_tol=1e-9):
    """ Evaluate both sides of the inequality for one instance.

        Raises BoundsViolated when an entry leaves its box and
        RefinementInapplicable when the refined gate fails.
    """
    if len(inst.a) != len(inst.b):
        raise ValueError(
            f"Tuple lengths differ: {len(inst.a)} and {len(inst.b)}")
    if refined:
        # The refined form allows p = 0 or q = 0 but not negative edges
        if min(inst.p, inst.q) < 0:
            raise BoundsViolated('box', 0, min(inst.p, inst.q), 0, '+inf')
        if inst.P * inst.Q == 0:
            raise RefinementInapplicable(float('nan'))
        if inst.refinement_product < 2 - box_tol:
            raise RefinementInapplicable(inst.refinement_product)
    elif min(inst.p, inst.q) <= 0:
        raise BoundsViolated('box', 0, min(inst.p, inst.q), 0, '+inf')
    _check_box(inst.a, inst.p, inst.P, 'a', box_tol)
    _check_box(inst.b, inst.q, inst.Q, 'b', box_tol)

    a = np.asarray(inst.a, dtype=float)
    b = np.asarray(inst.b, dtype=float)
    n = len(a)
    lhs = float(np.dot(a, a) * np.dot(b, b) - np.dot(a, b) ** 2)
    rhs = 0.25 * n * n * (inst.P * inst.Q - inst.p * inst.q) ** 2
    holds = lhs <= rhs + tol
    if not holds:
        logger.warning("Ozeki inequality fails: lhs=%.12g rhs=%.12g", lhs, rhs)
    return OzekiResult(lhs, rhs, holds)

""" Laplacian-energy-like invariant and incidence energy.

    LEL(G) = sum of sqrt(mu_i) over all but the single smallest Laplacian
    eigenvalue. IE(G) = sum of sqrt(q_i) over every signless Laplacian
    eigenvalue, which equals the sum of singular values of the incidence
    matrix.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import enum
import logging
from dataclasses import dataclass

# Third party
import numpy as np

# Custom
from models.exceptions import KindMismatch, NegativeEigenvalue
from models.spectral import CLAMP_TOL, SpectrumKind

##########
# Logger #
##########
logger = logging.getLogger(__name__)


##################
# InvariantValue #
##################
class Source(enum.Enum):
    DIRECT = 'DirectEigen'
    CLOSED_FORM = 'ClosedForm'


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: float
    source: Source = Source.DIRECT

    def __post_init__(self):
        if self.value < 0:
            raise NegativeEigenvalue(self.value, what=f"{self.name} value")


def _roots(values, clamp_tol):
    arr = np.asarray(values, dtype=float)
    low = arr.min() if arr.size else 0.0
    if low < -clamp_tol:
        raise NegativeEigenvalue(float(low))
    return np.sqrt(np.clip(arr, 0.0, None))


def lel(sp, source=Source.DIRECT, clamp_tol=CLAMP_TOL):
    """ Laplacian-energy-like invariant of a Laplacian spectrum. """
    if sp.kind is not SpectrumKind.LAPLACIAN:
        raise KindMismatch(sp.kind.value, SpectrumKind.LAPLACIAN.value)
    values = sorted(sp.values, reverse=True)[:-1]
    return InvariantValue('LEL', float(np.sum(_roots(values, clamp_tol))),
        source)


def ie(sp, source=Source.DIRECT, clamp_tol=CLAMP_TOL):
    """ Incidence energy of a signless Laplacian spectrum. """
    if sp.kind is not SpectrumKind.SIGNLESS:
        raise KindMismatch(sp.kind.value, SpectrumKind.SIGNLESS.value)
    return InvariantValue('IE', float(np.sum(_roots(sp.values, clamp_tol))),
        source)


INVARIANTS = {
    'LEL': (SpectrumKind.LAPLACIAN, lel),
    'IE': (SpectrumKind.SIGNLESS, ie),
}


#########################
# Complete-graph Checks #
#########################
def laplacian_top_equal(sp, tol=1e-8):
    """ True when mu_1 = ... = mu_{n-1}. """
    top = sorted(sp.values, reverse=True)[:-1]
    return not top or max(top) - min(top) <= tol


def signless_tail_equal(sp, tol=1e-8):
    """ True when q_2 = ... = q_n. """
    tail = sorted(sp.values, reverse=True)[1:]
    return not tail or max(tail) - min(tail) <= tol

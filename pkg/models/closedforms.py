""" Closed-form spectra of derived graphs from the base graph's spectrum.

    For an r-regular G of order n with m edges every base eigenvalue x
    yields a root pair of a quadratic, plus one constant eigenvalue of
    multiplicity m - n:

        R(G), L-spectrum:  2^(m-n),    s = r + 2 + x,    disc = s^2 - 12x
        R(G), Q-spectrum:  2^(m-n),    s = r + 2 + x,    disc = s^2 - 4(2r + x)
        Q(G), L-spectrum:  (2r+2)^(m-n), s = r + 2 + x,  disc = s^2 - 4x(r + 1)
        Q(G), Q-spectrum:  (2r-2)^(m-n), s = 3r - 2 + x,
                           disc = s^2 - 4r(2r - 2 + x) + 4x

    with roots (s +/- sqrt(disc)) / 2. For a connected (r1, r2)-semiregular
    G the line graph spectra are shifts of the base spectrum:

        L(G), L-spectrum:  (r1+r2)^(m-n),   r1 + r2 - mu_i
        L(G), Q-spectrum:  (r1+r2-4)^(m-n), r1 + r2 - 4 + q_i

    The usually quoted L-polynomial of R(G) carries (x - r - 2)^n; its degree
    only reaches n + m with exponent 1, which is also what the root-pair
    form forces. char_poly_eval uses exponent 1.

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
    BadLength,
    InapplicableMap,
    KindMismatch,
    NegativeDiscriminant
)
from models.spectral import CLAMP_TOL, Spectrum, SpectrumKind

##########
# Logger #
##########
logger = logging.getLogger(__name__)

##############
# BaseParams #
##############
@dataclass(frozen=True)
class BaseParams:
    """ n, m and the degree data of the base graph. """
    n: int
    m: int
    r: int = None
    r1: int = None
    r2: int = None

    def __post_init__(self):
        if self.r is not None:
            if 2 * self.m != self.n * self.r:
                raise InapplicableMap(
                    f"Inconsistent regular params: 2m={2 * self.m}, "
                    f"nr={self.n * self.r}")
        elif self.r1 is not None and self.r2 is not None:
            if self.m * (self.r1 + self.r2) != self.n * self.r1 * self.r2:
                raise InapplicableMap(
                    f"Inconsistent semiregular params: m={self.m} but "
                    f"n*r1*r2/(r1+r2)={self.n * self.r1 * self.r2}/"
                    f"{self.r1 + self.r2}")
        else:
            raise InapplicableMap("BaseParams needs r or (r1, r2)")


    @property
    def is_regular(self):
        return self.r is not None


    @classmethod
    def regular(cls, g, cls_):
        """ Params for the R-/Q-graph maps; needs an r-regular g. """
        if not cls_.is_regular:
            raise InapplicableMap(f"{g.label or 'graph'} is not regular")
        return cls(n=g.n, m=g.m, r=cls_.r)


    @classmethod
    def semiregular(cls, g, cls_):
        """ Params for the line-graph maps; needs (r1, r2)-semiregular g. """
        degrees = cls_.line_degrees
        if degrees is None:
            raise InapplicableMap(f"{g.label or 'graph'} is not semiregular")
        return cls(n=g.n, m=g.m, r1=degrees[0], r2=degrees[1])


    @classmethod
    def from_class(cls, g, cls_, target='rgraph'):
        """ Params for the maps of one derived-graph target. """
        if target == 'line':
            return cls.semiregular(g, cls_)
        return cls.regular(g, cls_)


###########
# Helpers #
###########
def _sqrt(value, clamp_tol=CLAMP_TOL):
    """ sqrt with values in (-clamp_tol, 0) read as 0. """
    if value < 0.0:
        if value > -clamp_tol:
            return 0.0
        raise NegativeDiscriminant(value)
    return math.sqrt(value)


def _check(sp, p, kind, regular):
    if sp.kind is not kind:
        raise KindMismatch(sp.kind.value, kind.value)
    if regular and not p.is_regular:
        raise InapplicableMap("Map needs a regular base graph")
    if not regular and p.is_regular:
        raise InapplicableMap("Map needs semiregular params (r1, r2)")
    if len(sp) != p.n:
        raise BadLength(len(sp), p.n)
    if p.m < p.n:
        raise InapplicableMap(
            f"m - n = {p.m - p.n} < 0 (stars and r < 2 are excluded)")


########
# Maps #
########
@dataclass(frozen=True)
class QuadraticMap:
    """ One root-pair spectral map for R(G) or Q(G). """
    name: str
    kind: SpectrumKind
    constant: object
    centre: object
    disc: object
    product: object


QUADRATIC_MAPS = {
    'rgraph_l': QuadraticMap(
        name='rgraph_l',
        kind=SpectrumKind.LAPLACIAN,
        constant=lambda r: 2,
        centre=lambda r, x: r + 2 + x,
        disc=lambda r, x: (r + 2 + x) ** 2 - 12 * x,
        product=lambda r, x: 3 * x,
    ),
    'rgraph_q': QuadraticMap(
        name='rgraph_q',
        kind=SpectrumKind.SIGNLESS,
        constant=lambda r: 2,
        centre=lambda r, x: r + 2 + x,
        disc=lambda r, x: (r + 2 + x) ** 2 - 4 * (2 * r + x),
        product=lambda r, x: 2 * r + x,
    ),
    'qgraph_l': QuadraticMap(
        name='qgraph_l',
        kind=SpectrumKind.LAPLACIAN,
        constant=lambda r: 2 * r + 2,
        centre=lambda r, x: r + 2 + x,
        disc=lambda r, x: (r + 2 + x) ** 2 - 4 * x * (r + 1),
        product=lambda r, x: x * (r + 1),
    ),
    'qgraph_q': QuadraticMap(
        name='qgraph_q',
        kind=SpectrumKind.SIGNLESS,
        constant=lambda r: 2 * r - 2,
        centre=lambda r, x: 3 * r - 2 + x,
        disc=lambda r, x: (3 * r - 2 + x) ** 2 - 4 * r * (2 * r - 2 + x) + 4 * x,
        product=lambda r, x: r * (2 * r - 2 + x) - x,
    ),
}


def root_pairs(name, sp, p, clamp_tol=CLAMP_TOL):
    """ Return [(plus, minus)] root pairs, one per base eigenvalue. """
    qmap = QUADRATIC_MAPS[name]
    _check(sp, p, qmap.kind, regular=True)
    pairs = []
    for x in sp.values:
        s = qmap.centre(p.r, x)
        root = _sqrt(qmap.disc(p.r, x), clamp_tol)
        pairs.append(((s + root) / 2.0, (s - root) / 2.0))
    return pairs


def _quadratic_spectrum(name, sp, p, clamp_tol):
    qmap = QUADRATIC_MAPS[name]
    pairs = root_pairs(name, sp, p, clamp_tol)
    values = [float(qmap.constant(p.r))] * (p.m - p.n)
    for plus, minus in pairs:
        values.extend((plus, minus))
    logger.debug("%s: %d base values -> %d values", name, len(sp), len(values))
    return Spectrum.from_values(qmap.kind, values, clamp_tol=clamp_tol)


def rgraph_l_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ L-spectrum of R(G) from the L-spectrum of an r-regular G. """
    return _quadratic_spectrum('rgraph_l', sp, p, clamp_tol)


def rgraph_q_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ Q-spectrum of R(G) from the Q-spectrum of an r-regular G. """
    return _quadratic_spectrum('rgraph_q', sp, p, clamp_tol)


def qgraph_l_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ L-spectrum of Q(G) from the L-spectrum of an r-regular G. """
    return _quadratic_spectrum('qgraph_l', sp, p, clamp_tol)


def qgraph_q_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ Q-spectrum of Q(G) from the Q-spectrum of an r-regular G. """
    return _quadratic_spectrum('qgraph_q', sp, p, clamp_tol)


def line_l_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ L-spectrum of L(G) for a connected semiregular G (not a star). """
    _check(sp, p, SpectrumKind.LAPLACIAN, regular=False)
    s = p.r1 + p.r2
    values = [float(s)] * (p.m - p.n) + [s - mu for mu in sp.values]
    return Spectrum.from_values(SpectrumKind.LAPLACIAN, values,
        clamp_tol=clamp_tol)


def line_q_spectrum(sp, p, clamp_tol=CLAMP_TOL):
    """ Q-spectrum of L(G) for a connected semiregular G (not a star). """
    _check(sp, p, SpectrumKind.SIGNLESS, regular=False)
    s = p.r1 + p.r2
    values = [float(s - 4)] * (p.m - p.n) + [s - 4 + q for q in sp.values]
    return Spectrum.from_values(SpectrumKind.SIGNLESS, values,
        clamp_tol=clamp_tol)


# (target, spectrum kind) -> map
SPECTRAL_MAPS = {
    ('rgraph', SpectrumKind.LAPLACIAN): rgraph_l_spectrum,
    ('rgraph', SpectrumKind.SIGNLESS): rgraph_q_spectrum,
    ('qgraph', SpectrumKind.LAPLACIAN): qgraph_l_spectrum,
    ('qgraph', SpectrumKind.SIGNLESS): qgraph_q_spectrum,
    ('line', SpectrumKind.LAPLACIAN): line_l_spectrum,
    ('line', SpectrumKind.SIGNLESS): line_q_spectrum,
}


##############################
# Characteristic Polynomials #
##############################
class CharPolyKind(enum.Enum):
    L_R = 'L∘R'
    Q_R = 'Q∘R'
    L_Q = 'L∘Q'
    Q_Q = 'Q∘Q'


CHAR_POLY_INPUT = {
    CharPolyKind.L_R: SpectrumKind.LAPLACIAN,
    CharPolyKind.Q_R: SpectrumKind.SIGNLESS,
    CharPolyKind.L_Q: SpectrumKind.LAPLACIAN,
    CharPolyKind.Q_Q: SpectrumKind.SIGNLESS,
}


def char_poly_eval(kind, x, sp, p):
    """ Evaluate the factored characteristic polynomial of R(G) or Q(G).

        L-forms take the base L-spectrum and run their product over
        mu_1..mu_{n-1}; Q-forms take the base Q-spectrum, use the
        q_1 = 2r factor explicitly and run over q_2..q_n.
    """
    kind = CharPolyKind(kind)
    expected = CHAR_POLY_INPUT[kind]
    if sp.kind is not expected:
        raise KindMismatch(sp.kind.value, expected.value)
    if not p.is_regular:
        raise InapplicableMap("Characteristic polynomials need a regular G")
    if len(sp) != p.n:
        raise BadLength(len(sp), p.n)
    r, n, m = p.r, p.n, p.m
    vals = sp.values

    if kind is CharPolyKind.L_R:
        value = x * (x - 2) ** (m - n) * (x - r - 2)
        for mu in vals[:n - 1]:
            value *= (x - 2) * (x - r - mu) - 2 * r + mu
    elif kind is CharPolyKind.Q_R:
        value = (x - 2) ** (m - n) * (x ** 2 - (2 + 3 * r) * x + 4 * r)
        for q in vals[1:]:
            value *= (x - 2) * (x - r - q) - q
    elif kind is CharPolyKind.L_Q:
        value = x * (x - 2 * r - 2) ** (m - n) * (x - r - 2)
        for mu in vals[:n - 1]:
            value *= (x - r) * (x - 2 - mu) - 2 * r + mu
    else:
        value = (x - 2 * r + 2) ** (m - n) * ((x - r) * (x - 4 * r + 2) - 2 * r)
        for q in vals[1:]:
            value *= (x - r) * (x - 2 * r + 2 - q) - q
    return float(value)


def spectrum_product(x, sp):
    """ prod(x - lambda) over a spectrum. """
    value = 1.0
    for lam in sp.values:
        value *= x - lam
    return value


########################
# Collapsed Invariants #
########################
def collapsed_invariant(target, invariant, sp, p, clamp_tol=CLAMP_TOL):
    """ LEL or IE of a derived graph straight from the base spectrum.

        Each root pair collapses as sqrt(a+) + sqrt(a-) =
        sqrt(s + 2 sqrt(product)), so no derived spectrum is formed.
    """
    sq = lambda value: _sqrt(value, clamp_tol)
    vals = sp.values
    key = (target, invariant)
    if target in ('rgraph', 'qgraph'):
        expected = (SpectrumKind.LAPLACIAN if invariant == 'LEL'
            else SpectrumKind.SIGNLESS)
        _check(sp, p, expected, regular=True)
        r, n, m = p.r, p.n, p.m
    else:
        expected = (SpectrumKind.LAPLACIAN if invariant == 'LEL'
            else SpectrumKind.SIGNLESS)
        _check(sp, p, expected, regular=False)
        s, n, m = p.r1 + p.r2, p.n, p.m

    if key == ('rgraph', 'LEL'):
        return (sum(sq(r + 2 + mu + 2 * sq(3 * mu)) for mu in vals[:n - 1])
            + (m - n) * math.sqrt(2) + math.sqrt(r + 2))
    if key == ('qgraph', 'LEL'):
        return (sum(sq(r + 2 + mu + 2 * sq((r + 1) * mu)) for mu in vals[:n - 1])
            + (m - n) * math.sqrt(2 * r + 2) + math.sqrt(r + 2))
    if key == ('rgraph', 'IE'):
        return (sum(sq(r + 2 + q + 2 * sq(2 * r + q)) for q in vals[1:])
            + (m - n) * math.sqrt(2) + math.sqrt(3 * r + 2 + 4 * math.sqrt(r)))
    if key == ('qgraph', 'IE'):
        return (sum(sq(3 * r - 2 + q + 2 * sq(r * (2 * r - 2 + q) - q))
                    for q in vals[1:])
            + (m - n) * sq(2 * r - 2)
            + sq(5 * r - 2 + 4 * sq(r * (r - 1))))
    if key == ('line', 'LEL'):
        return ((m - n + 1) * math.sqrt(s)
            + sum(sq(s - mu) for mu in vals[1:n - 1]))
    if key == ('line', 'IE'):
        return ((m - n + 1) * sq(s - 4) + sq(2 * s - 4)
            + sum(sq(s - 4 + q) for q in vals[1:n - 1]))
    raise ValueError(f"No collapsed form for {target} {invariant}")

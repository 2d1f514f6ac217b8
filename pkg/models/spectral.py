""" Laplacian, signless Laplacian and incidence matrices and their spectra.

    Eigenvalues come from a cyclic Jacobi solver on the dense symmetric
    matrix. Each sweep visits every off-diagonal pair once using the
    round-robin ordering, so the rotations of one round touch disjoint
    index pairs and are applied together as whole-row/column updates.

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
from models.exceptions import NoConvergence, NumericalAnomaly

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Constants #
#############
EIG_TOL = 1e-12
CLAMP_TOL = 1e-9
MAX_SWEEPS = 100

############
# Spectrum #
############
class SpectrumKind(enum.Enum):
    LAPLACIAN = 'laplacian'
    SIGNLESS = 'signless_laplacian'


@dataclass(frozen=True)
class Spectrum:
    """ Eigenvalue multiset sorted descending, multiplicities repeated. """
    kind: SpectrumKind
    values: tuple

    @classmethod
    def from_values(cls, kind, values, clamp_tol=CLAMP_TOL):
        """ Sort descending and snap |v| < clamp_tol to exactly 0.

            A value below -clamp_tol raises NumericalAnomaly: both
            matrix kinds are positive semidefinite.
        """
        cleaned = []
        for value in values:
            value = float(value)
            if value < -clamp_tol:
                raise NumericalAnomaly(value)
            cleaned.append(0.0 if abs(value) < clamp_tol else value)
        return cls(kind, tuple(sorted(cleaned, reverse=True)))


    def __len__(self):
        return len(self.values)


    def __iter__(self):
        return iter(self.values)


    @property
    def total(self):
        return float(np.sum(self.values))


    def multiplicities(self, tol=1e-8):
        """ Group values into (value, count) pairs, descending. """
        groups = []
        for value in self.values:
            if groups and abs(groups[-1][0] - value) <= tol:
                groups[-1][1] += 1
            else:
                groups.append([value, 1])
        return [(value, count) for value, count in groups]


    def deviation(self, other):
        """ Max elementwise gap between two sorted multisets. """
        if len(self) != len(other):
            return float('inf')
        if not len(self):
            return 0.0
        return float(np.max(np.abs(
            np.asarray(self.values) - np.asarray(other.values))))


############
# Matrices #
############
def adjacency(g):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian(g):
    """ L = D - A. """
    return np.diag(np.asarray(g.degrees, dtype=float)) - adjacency(g)


def signless_laplacian(g):
    """ Q = D + A. """
    return np.diag(np.asarray(g.degrees, dtype=float)) + adjacency(g)


def incidence(g):
    """ n x m 0/1 matrix; entry (v, e) is 1 iff v is an endpoint of e. """
    b = np.zeros((g.n, g.m))
    for idx, (u, v) in enumerate(g.edges):
        b[u, idx] = 1.0
        b[v, idx] = 1.0
    return b


##########
# Jacobi #
##########
def _round_robin(n):
    """ Rounds of disjoint (p, q) index arrays covering every pair once. """
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [
            (min(players[i], players[size - 1 - i]),
             max(players[i], players[size - 1 - i]))
            for i in range(size // 2)
        ]
        # Index n is the bye when n is odd
        pairs = [(p, q) for p, q in pairs if q < n]
        if pairs:
            p_idx, q_idx = zip(*pairs)
            rounds.append((np.array(p_idx), np.array(q_idx)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_diagonalize(mtx, tol=EIG_TOL, max_sweeps=MAX_SWEEPS):
    """ Return the eigenvalues of a symmetric matrix, unsorted.

        Converged when the off-diagonal Frobenius norm is at most
        tol * ||mtx||_F. Raises NoConvergence after max_sweeps sweeps.
    """
    a = np.array(mtx, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("Matrix is not symmetric")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)

    threshold = tol * float(np.linalg.norm(a))
    rounds = _round_robin(n)
    for sweep in range(max_sweeps):
        if _off_norm(a) <= threshold:
            logger.debug("Jacobi converged after %d sweeps (n=%d)", sweep, n)
            return np.diag(a).copy()
        for p, q in rounds:
            apq = a[p, q]
            rotate = apq != 0.0
            if not rotate.any():
                continue
            safe = np.where(rotate, apq, 1.0)
            theta = (a[q, q] - a[p, p]) / (2.0 * safe)
            t = np.where(theta >= 0.0, 1.0, -1.0) / (
                np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(rotate, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            # Columns: A <- A J
            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = col_p * c - col_q * s
            a[:, q] = col_p * s + col_q * c

            # Rows: A <- J^T A
            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q

    off = _off_norm(a)
    if off <= threshold:
        return np.diag(a).copy()
    raise NoConvergence(max_sweeps, off)


def eigenvalues(mtx, kind, tol=EIG_TOL, max_sweeps=MAX_SWEEPS,
                clamp_tol=CLAMP_TOL):
    """ Spectrum of a Laplacian-type matrix, sorted descending. """
    values = jacobi_diagonalize(mtx, tol=tol, max_sweeps=max_sweeps)
    trace = float(np.trace(mtx))
    order = len(values)
    if abs(float(np.sum(values)) - trace) > 10 * tol * max(order, 1) * max(
            1.0, abs(trace)):
        logger.warning("Eigenvalue sum %.15g drifts from trace %.15g",
            float(np.sum(values)), trace)
    return Spectrum.from_values(kind, values, clamp_tol=clamp_tol)


def spectrum(g, kind, tol=EIG_TOL, max_sweeps=MAX_SWEEPS, clamp_tol=CLAMP_TOL):
    """ L- or Q-spectrum of a graph. """
    kind = SpectrumKind(kind)
    if kind is SpectrumKind.LAPLACIAN:
        mtx = laplacian(g)
    else:
        mtx = signless_laplacian(g)
    return eigenvalues(mtx, kind, tol=tol, max_sweeps=max_sweeps,
        clamp_tol=clamp_tol)


def singular_values(b, tol=EIG_TOL, max_sweeps=MAX_SWEEPS, clamp_tol=CLAMP_TOL):
    """ Singular values of B via the smaller Gram matrix, descending. """
    b = np.asarray(b, dtype=float)
    rows, cols = b.shape
    gram = b @ b.T if rows <= cols else b.T @ b
    squares = Spectrum.from_values(
        SpectrumKind.SIGNLESS,
        jacobi_diagonalize(gram, tol=tol, max_sweeps=max_sweeps),
        clamp_tol=clamp_tol
    )
    return tuple(float(np.sqrt(value)) for value in squares.values)

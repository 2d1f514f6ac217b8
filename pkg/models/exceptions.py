""" Exceptions raised by the graph, spectral, bound and CLI layers.

    Every error the application can raise derives from GraphEnergyError
    so the controller can catch them at the command boundary.

    Last edited: October 17, 2026
"""

##############
# Exceptions #
##############
class GraphEnergyError(Exception):
    """ Base class for all application errors. """
    title = "Error"
    remedy = ""


################
# Graph Errors #
################
class InvalidGraph(GraphEnergyError):
    title = "Invalid Graph"
    remedy = "Supply a simple undirected graph (no loops, no repeated edges)."


class SelfLoop(InvalidGraph):
    def __init__(self, u):
        self.u = u
        super().__init__(f"Self-loop at vertex {u}")


class DuplicateEdge(InvalidGraph):
    def __init__(self, u, v):
        self.u = u
        self.v = v
        super().__init__(f"Duplicate edge {{{u}, {v}}}")


class VertexOutOfRange(InvalidGraph):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"Vertex {vertex} is outside [0, {n})")


class EmptyEdgeSet(GraphEnergyError):
    title = "Empty Edge Set"
    remedy = "The line graph needs at least one edge."

    def __init__(self):
        super().__init__("Graph has no edges")


class EdgeListFormatError(GraphEnergyError):
    title = "Edge List Format"
    remedy = "First line: vertex count n; then one 'u v' pair per line."

    def __init__(self, line_no, text, reason):
        self.line_no = line_no
        self.text = text
        super().__init__(f"Line {line_no}: {reason} ({text!r})")


#################
# Family Errors #
#################
class FamilySpecError(GraphEnergyError):
    title = "Invalid Family"
    remedy = ("Use name:params, e.g. complete:3..7 or "
        "random_regular:n=12,r=3,seed=42.")


class InfeasibleSpec(FamilySpecError):
    title = "Infeasible Family"


class GenerationExhausted(GraphEnergyError):
    title = "Generation Exhausted"
    remedy = "Try another seed or raise max_resamples in the settings file."

    def __init__(self, label, attempts):
        self.label = label
        self.attempts = attempts
        super().__init__(
            f"No simple connected sample of {label} after {attempts} draws")


###################
# Spectral Errors #
###################
class NoConvergence(GraphEnergyError):
    title = "No Convergence"
    remedy = "Loosen eig_tol or raise max_sweeps in the settings file."

    def __init__(self, sweeps, off_norm):
        self.sweeps = sweeps
        self.off_norm = off_norm
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})")


class NumericalAnomaly(GraphEnergyError):
    title = "Numerical Anomaly"

    def __init__(self, value, what="eigenvalue"):
        self.value = value
        super().__init__(f"Negative {what} {value:.3e} below clamp threshold")


class NegativeEigenvalue(NumericalAnomaly):
    pass


class NegativeDiscriminant(NumericalAnomaly):
    def __init__(self, value):
        super().__init__(value, what="discriminant")


class BadLength(GraphEnergyError):
    title = "Bad Spectrum Length"

    def __init__(self, got, expected):
        self.got = got
        self.expected = expected
        super().__init__(f"Spectrum has {got} values, expected {expected}")


class KindMismatch(GraphEnergyError):
    title = "Spectrum Kind Mismatch"

    def __init__(self, got, expected):
        super().__init__(f"Got a {got} spectrum where {expected} is needed")


class InapplicableMap(GraphEnergyError):
    title = "Inapplicable Map"
    remedy = ("Spectral maps need a regular graph, or a connected "
        "semiregular graph that is not a star.")


################
# Bound Errors #
################
class MissingInput(GraphEnergyError):
    title = "Missing Input"

    def __init__(self, bound_id, name):
        super().__init__(f"{bound_id} requires '{name}'")


class NotApplicable(GraphEnergyError):
    title = "Not Applicable"


class StandingAssumptionViolated(NotApplicable):
    remedy = "The results assume r >= 2 (regular) or r1 + r2 >= 4 (semiregular)."


class BoundsViolated(GraphEnergyError):
    title = "Ozeki Box Violated"

    def __init__(self, which, index, value, low, high):
        self.which = which
        self.index = index
        super().__init__(
            f"{which}[{index}] = {value!r} outside [{low!r}, {high!r}]")


class RefinementInapplicable(GraphEnergyError):
    title = "Refinement Inapplicable"

    def __init__(self, product):
        self.product = product
        super().__init__(f"(1 + p/P)(1 + q/Q) = {product!r} < 2")

""" Simple undirected graphs, edge-list I/O and regularity classification.

    A Graph is immutable once built. Vertices are 0..n-1 and edges are
    stored once as (u, v) with u < v in lexicographic order; the position
    of an edge in that list is its edge index.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import enum
import logging
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

# Custom
from models.exceptions import (
    DuplicateEdge,
    EdgeListFormatError,
    InvalidGraph,
    SelfLoop,
    VertexOutOfRange
)

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#########
# Graph #
#########
@dataclass(frozen=True)
class Graph:
    """ Vertex count, sorted adjacency lists and canonical edge list. """
    n: int
    adj: tuple
    edges: tuple
    label: str = field(default="", compare=False)

    @property
    def m(self):
        return len(self.edges)


    @property
    def degrees(self):
        return tuple(len(nbrs) for nbrs in self.adj)


    def incident_edges(self):
        """ Return, for each vertex, the indices of the edges touching it. """
        inc = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append(idx)
            inc[v].append(idx)
        return inc


    def relabel(self, label):
        """ Return the same graph carrying a new label. """
        return Graph(self.n, self.adj, self.edges, label)


def from_edge_list(n, pairs, label=""):
    """ Validate a list of vertex pairs and build a Graph.

        Raises SelfLoop, DuplicateEdge or VertexOutOfRange. Pairs are
        compared unordered, so (0, 1) and (1, 0) are duplicates.
    """
    if n < 0:
        raise InvalidGraph(f"Vertex count must be non-negative, got {n}")

    seen = set()
    for u, v in pairs:
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise VertexOutOfRange(vertex, n)
        if u == v:
            raise SelfLoop(u)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)

    edges = tuple(sorted(seen))
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    return Graph(n=n, adj=adj, edges=edges, label=label)


#################
# Edge List I/O #
#################
def _strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_edge_list(lines, label=""):
    """ Parse edge-list text: the first data line is n, then 'u v' lines.

        '#' starts a comment and blank lines are ignored. Errors carry
        the 1-based line number of the offending line.
    """
    n = None
    pairs = []
    seen = set()
    for line_no, raw in enumerate(lines, start=1):
        text = _strip_comment(raw)
        if not text:
            continue
        tokens = text.split()

        # Vertex count
        if n is None:
            if len(tokens) != 1:
                raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                    "expected a single vertex count")
            try:
                n = int(tokens[0])
            except ValueError:
                raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                    "vertex count is not an integer") from None
            if n < 0:
                raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                    "vertex count is negative")
            continue

        # Edge lines
        if len(tokens) != 2:
            raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                "expected two vertex indices")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                "vertex index is not an integer") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                f"vertex out of range [0, {n})")
        if u == v:
            raise EdgeListFormatError(line_no, raw.rstrip('\n'), "self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListFormatError(line_no, raw.rstrip('\n'),
                "duplicate edge")
        seen.add(key)
        pairs.append((u, v))

    if n is None:
        raise EdgeListFormatError(0, "", "no vertex count found")
    return from_edge_list(n, pairs, label=label)


def read_edge_list(filepath):
    """ Read a Graph from an edge-list file. """
    filepath = Path(filepath)
    logger.debug("Reading edge list from %s", filepath)
    with open(filepath, 'r') as f:
        return parse_edge_list(f, label=filepath.stem)


def format_edge_list(g):
    """ Return the canonical edge-list text of g. """
    lines = [f"# {g.label or 'graph'}: n={g.n} m={g.m}", str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g, filepath):
    """ Write g to an edge-list file that reads back to the same graph. """
    logger.debug("Writing edge list to %s", filepath)
    with open(filepath, 'w', newline='\n') as f:
        f.write(format_edge_list(g))


##################
# Classification #
##################
class Regularity(enum.Enum):
    REGULAR = 'regular'
    SEMIREGULAR = 'semiregular'
    IRREGULAR = 'irregular'


@dataclass(frozen=True)
class RegularityClass:
    """ Regular(r), Semiregular(r1, r2, parts) or Irregular. """
    variant: Regularity
    connected: bool
    r: int = None
    r1: int = None
    r2: int = None
    parts: tuple = None
    bipartite: bool = False

    @property
    def is_regular(self):
        return self.variant is Regularity.REGULAR


    @property
    def is_semiregular(self):
        return self.variant is Regularity.SEMIREGULAR


    @property
    def line_degrees(self):
        """ (r1, r2) when g is (r1, r2)-semiregular, else None.

            A bipartite r-regular graph counts as (r, r)-semiregular.
        """
        if self.is_semiregular:
            return (self.r1, self.r2)
        if self.is_regular and self.bipartite and self.r > 0:
            return (self.r, self.r)
        return None


    def describe(self):
        if self.is_regular:
            text = f"Regular({self.r})"
        elif self.is_semiregular:
            text = f"Semiregular({self.r1},{self.r2})"
        else:
            text = "Irregular"
        return text + ("" if self.connected else ", disconnected")


    def as_dict(self):
        return {
            'variant': self.variant.value,
            'r': self.r,
            'r1': self.r1,
            'r2': self.r2,
            'connected': self.connected,
            'bipartite': self.bipartite,
        }


def components(g):
    """ Return the connected components of g as lists of vertices. """
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def is_connected(g):
    return len(components(g)) <= 1


def _two_colour(g, comp):
    """ BFS 2-colouring of one component; None if it has an odd cycle. """
    colour = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in colour:
                colour[v] = 1 - colour[u]
                queue.append(v)
            elif colour[v] == colour[u]:
                return None
    return colour


def classify(g):
    """ Classify g as Regular, Semiregular or Irregular.

        Semiregular parts are reported with part 1 holding the higher
        degree, so r1 >= r2. A bipartite regular graph is reported as
        Regular with its bipartition in parts.
    """
    logger.debug("Classifying graph %s", g.label or "<unlabelled>")
    degrees = g.degrees
    comps = components(g)
    connected = len(comps) <= 1

    # Colour every component and orient it high-degree side first
    bipartite = True
    sides_per_comp = []
    for comp in comps:
        colour = _two_colour(g, comp)
        if colour is None:
            bipartite = False
            break
        sides = ([v for v in comp if colour[v] == 0],
                 [v for v in comp if colour[v] == 1])
        if sides[1] and degrees[sides[0][0]] < degrees[sides[1][0]]:
            sides = (sides[1], sides[0])
        sides_per_comp.append(sides)

    parts = None
    if bipartite:
        parts = (
            tuple(sorted(v for sides in sides_per_comp for v in sides[0])),
            tuple(sorted(v for sides in sides_per_comp for v in sides[1]))
        )

    if len(set(degrees)) <= 1:
        r = degrees[0] if degrees else 0
        return RegularityClass(Regularity.REGULAR, connected, r=r,
            parts=parts, bipartite=bipartite)

    irregular = RegularityClass(Regularity.IRREGULAR, connected,
        bipartite=bipartite)
    if not bipartite:
        return irregular
    degree_pair = None
    for sides in sides_per_comp:
        if not sides[1]:
            # Isolated vertex beside non-empty components
            return irregular
        side_degrees = [{degrees[v] for v in side} for side in sides]
        if any(len(ds) != 1 for ds in side_degrees):
            return irregular
        pair = (side_degrees[0].pop(), side_degrees[1].pop())
        if degree_pair is None:
            degree_pair = pair
        elif degree_pair != pair:
            return irregular

    r1, r2 = degree_pair
    return RegularityClass(
        Regularity.SEMIREGULAR,
        connected,
        r1=r1,
        r2=r2,
        parts=parts,
        bipartite=True
    )


def is_star(g, cls):
    """ True for K(1,k): a connected semiregular graph with m = n - 1. """
    return cls.line_degrees is not None and cls.connected and g.m == g.n - 1


def regular_assumptions(cls):
    """ Standing assumptions an R-/Q-graph result needs that cls violates. """
    if not cls.is_regular:
        return ["regular"]
    if cls.r < 2:
        return ["r >= 2"]
    return []


def line_assumptions(g, cls):
    """ Standing assumptions a line-graph result needs that g violates.

        The semiregular results assume r1 + r2 >= 4, a connected graph
        (so that mu_1 = r1 + r2 and q_n = 0) and m >= n, which rules out
        stars.
    """
    degrees = cls.line_degrees
    if degrees is None:
        return ["semiregular"]
    violated = []
    if sum(degrees) < 4:
        violated.append("r1 + r2 >= 4")
    if not cls.connected:
        violated.append("connected")
    elif is_star(g, cls):
        violated.append("not a star")
    return violated

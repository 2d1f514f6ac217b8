""" Line graph, R-graph and Q-graph constructions.

    Derived-graph vertex order is fixed: vertex i of L(G) is edge i of G;
    R(G) and Q(G) keep the original vertices 0..n-1 and put the vertex
    of edge i at n + i.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import logging
from itertools import combinations

# Custom
from models.exceptions import EmptyEdgeSet
from models.graphmodel import from_edge_list

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Functions #
#############
def _adjacent_edge_pairs(g):
    """ Pairs of edge indices sharing an endpoint.

        In a simple graph two distinct edges share at most one vertex,
        so each pair appears exactly once.
    """
    pairs = []
    for inc in g.incident_edges():
        pairs.extend(combinations(inc, 2))
    return pairs


def line_graph(g):
    """ Vertices are the edges of g, adjacent iff they share an endpoint. """
    logger.debug("Building line graph of %s", g.label)
    if g.m == 0:
        raise EmptyEdgeSet()
    return from_edge_list(g.m, _adjacent_edge_pairs(g), label=f"L({g.label})")


def r_graph(g):
    """ Keep g and join a new vertex w_i to both ends of each edge e_i. """
    logger.debug("Building R-graph of %s", g.label)
    pairs = list(g.edges)
    for idx, (u, v) in enumerate(g.edges):
        w = g.n + idx
        pairs.append((u, w))
        pairs.append((v, w))
    return from_edge_list(g.n + g.m, pairs, label=f"R({g.label})")


def q_graph(g):
    """ Subdivide every edge by w_i and join w_i ~ w_j when e_i, e_j meet. """
    logger.debug("Building Q-graph of %s", g.label)
    pairs = []
    for idx, (u, v) in enumerate(g.edges):
        w = g.n + idx
        pairs.append((u, w))
        pairs.append((v, w))
    pairs.extend((g.n + i, g.n + j) for i, j in _adjacent_edge_pairs(g))
    return from_edge_list(g.n + g.m, pairs, label=f"Q({g.label})")


# Derived-graph kinds, keyed as they appear on the command line
DERIVED = {
    'line': line_graph,
    'rgraph': r_graph,
    'qgraph': q_graph,
}


def derive(g, kind):
    """ Return the derived graph named by kind ('base' returns g). """
    if kind == 'base':
        return g
    return DERIVED[kind](g)

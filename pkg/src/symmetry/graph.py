#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import itertools

from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Tuple

import networkx as nx

from src.api.errors import PreconditionError
from src.geometry import Point
from src.geometry import PointSet

__all__ = ['SymGraph', 'build_symmetry_graph', 'coordinate_values', 'POINT', 'COORD']

# Node kinds. Point nodes are ('point', p), coordinate nodes ('coord', v, j)
POINT = 'point'
COORD = 'coord'


class SymGraph(NamedTuple):
    """ Colored bipartite graph of X and Y: point nodes (colored 'X'
    or 'Y') on one side, (value, coordinate) nodes colored by value on
    the other; z is linked to (v, j) iff the shifted z_j equals v.
    """
    graph: nx.Graph
    X: PointSet
    Y: PointSet
    shift: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.X.dim

    def shifted(self, p: Point) -> Point:
        return tuple(c - m for c, m in zip(p, self.shift))

    def unshifted(self, q: Point) -> Point:
        return tuple(c + m for c, m in zip(q, self.shift))

    def coordinate_profile(self, j: int) -> Tuple:
        """ Sorted (value, #X neighbours, #Y neighbours) of the nodes
        of coordinate j. Coordinates swapped by a symmetry share it.
        """
        result = []
        for node in self.graph.nodes:
            if node[0] != COORD or node[2] != j:
                continue
            colors = [self.graph.nodes[n]['color'] for n in self.graph.neighbors(node)]
            result.append((node[1], colors.count('X'), colors.count('Y')))
        return tuple(sorted(result))


def build_symmetry_graph(X: PointSet, Y: PointSet, translate: bool = True) -> SymGraph:
    """ Builds the graph after shifting every coordinate by minus its
    smallest value over X and Y (no shift if translate is False).
    """
    if X.dim != Y.dim:
        raise PreconditionError('X and Y have different dimensions')
    if not X.is_disjoint(Y):
        raise PreconditionError('X and Y must be disjoint')

    d = X.dim
    points = list(itertools.chain(X, Y))
    if translate and points:
        shift = tuple(min(p[j] for p in points) for j in range(d))
    else:
        shift = (0, ) * d

    g = nx.Graph()
    colors: Dict[Point, str] = {}
    colors.update((p, 'X') for p in X)
    colors.update((p, 'Y') for p in Y)
    for p in points:
        g.add_node((POINT, p), color=colors[p])
        for j, v in enumerate(p):
            value = v - shift[j]
            g.add_node((COORD, value, j), color=value)
            g.add_edge((POINT, p), (COORD, value, j))

    return SymGraph(g, X, Y, shift)


def coordinate_values(g: SymGraph) -> List[Tuple]:
    """ Values present per coordinate, as sorted tuples
    """
    result: List[set] = [set() for _ in range(g.dim)]
    for node in g.graph.nodes:
        if node[0] == COORD:
            result[node[2]].add(node[1])
    return [tuple(sorted(v)) for v in result]

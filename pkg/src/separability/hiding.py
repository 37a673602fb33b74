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

from typing import List
from typing import Optional
from typing import Tuple

import networkx as nx

from src.geometry import FacetList
from src.geometry import Point
from src.geometry import PointSet
from src.geometry import convex_hull_facets
from src.geometry import segment_hits_hull

__all__ = ['hiding_pairs', 'hiding_graph', 'max_hiding_set_bruteforce']


def _in_affine_hull(y, H: FacetList) -> bool:
    return all(e.value(y) == e.b for e in H.equations)


def hiding_pairs(X: PointSet, Y: PointSet, H: Optional[FacetList] = None) -> List[Tuple[Point, Point]]:
    """ Unordered pairs of Y (within aff(X)) whose segment meets conv(X),
    in Y order.
    """
    if H is None:
        H = convex_hull_facets(X)

    candidates = [y for y in Y if _in_affine_hull(y, H)]
    return [(y1, y2) for y1, y2 in itertools.combinations(candidates, 2) if segment_hits_hull(y1, y2, H)]


def hiding_graph(X: PointSet, Y: PointSet) -> nx.Graph:
    """ Graph on the points of Y within aff(X); edges are hiding pairs
    """
    H = convex_hull_facets(X)
    g = nx.Graph()
    g.add_nodes_from(y for y in Y if _in_affine_hull(y, H))
    g.add_edges_from(hiding_pairs(X, Y, H))
    return g


def max_hiding_set_bruteforce(X: PointSet, Y: PointSet) -> int:
    """ Size of a largest hiding set within Y (maximum clique of the
    hiding graph). Exponential; meant for small instances.
    """
    g = hiding_graph(X, Y)
    return max((len(c) for c in nx.find_cliques(g)), default=0)

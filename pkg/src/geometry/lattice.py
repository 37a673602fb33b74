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

from typing import Sequence
from typing import Tuple

from .hull import convex_hull_facets
from .hull import integer_points_in_hull
from .points import PointSet

__all__ = ['bounding_box', 'is_lattice_convex', 'l1_neighborhood', 'l1_distance']


def bounding_box(S: PointSet, margin: int = 0) -> Tuple[Tuple, Tuple]:
    lo = tuple(min(p[j] for p in S) - margin for j in range(S.dim))
    hi = tuple(max(p[j] for p in S) + margin for j in range(S.dim))
    return lo, hi


def is_lattice_convex(S: PointSet) -> bool:
    """ True iff every integer point of conv(S) is in S
    """
    inside = integer_points_in_hull(convex_hull_facets(S), bounding_box(S))
    return inside.as_set() == S.as_set()


def l1_distance(p: Sequence, q: Sequence):
    return sum(abs(a - b) for a, b in zip(p, q))


def l1_neighborhood(X: PointSet, radius: int) -> PointSet:
    """ Integer points outside X within l1-distance radius of X,
    in lexicographic order.
    """
    lo, hi = bounding_box(X, radius)
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    result = [
        p for p in itertools.product(*ranges)
        if p not in X and min(l1_distance(p, x) for x in X) <= radius
    ]
    return PointSet(result, dim=X.dim, role='Y')

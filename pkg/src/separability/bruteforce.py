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

from src.api.errors import RcUndefinedError
from src.geometry import PointSet

from .oracle import eps_separable

__all__ = ['separable_sets', 'maximal_separable_sets', 'rc_bruteforce']


def separable_sets(X: PointSet, Y: PointSet, eps) -> List[frozenset]:
    """ Every nonempty subset of Y that can be cut off by one inequality.
    Subsets of separable sets are separable, so only separable sets
    are extended (by points later in Y order).
    """
    points = list(Y)
    result = []
    stack = [((), -1)]
    while stack:
        members, last = stack.pop()
        for j in range(len(points) - 1, last, -1):
            candidate = members + (points[j], )
            if eps_separable(X, candidate, eps) is not None:
                result.append(frozenset(candidate))
                stack.append((candidate, j))

    return sorted(result, key=lambda s: (len(s), sorted(s)))


def maximal_separable_sets(X: PointSet, Y: PointSet, eps) -> List[frozenset]:
    sets = separable_sets(X, Y, eps)
    known = set(sets)
    return [s for s in sets if not any(s | {y} in known for y in Y if y not in s)]


def rc_bruteforce(X: PointSet, Y: PointSet, eps) -> int:
    """ Fewest separable sets covering Y, by exhaustive search over
    covers with maximal separable sets of increasing size.
    """
    if not len(Y):
        return 0

    for y in Y:
        if eps_separable(X, [y], eps) is None:
            raise RcUndefinedError(y, eps)

    universe = Y.as_set()
    maximal = maximal_separable_sets(X, Y, eps)
    for size in range(1, len(Y) + 1):
        for cover in itertools.combinations(maximal, size):
            if frozenset().union(*cover) == universe:
                return size

    raise AssertionError('singletons always cover Y')

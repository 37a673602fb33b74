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
import math

from fractions import Fraction

from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

from src.api.constants import SENSE
from src.api.constants import STATUS
from src.exactlp import LinearProgram
from src.exactlp import solve

from .linalg import dot
from .linalg import normalize_inf
from .linalg import nullspace
from .linalg import rref
from .linalg import sub
from .points import Inequality
from .points import Point
from .points import PointSet

__all__ = [
    'FacetList',
    'convex_hull_facets',
    'segment_hits_hull',
    'integer_points_in_hull',
    'hulls_intersect',
    'in_convex_hull'
]


class FacetList(NamedTuple):
    """ Outer description of conv(S): facets within aff(S) plus the
    equations of aff(S) (a . x = b for each stored Inequality).
    """
    facets: Tuple[Inequality, ...]
    equations: Tuple[Inequality, ...]
    dim_of_hull: int
    dim: int

    def contains(self, p: Sequence) -> bool:
        return all(f.contains(p) for f in self.facets) and all(e.value(p) == e.b for e in self.equations)

    def as_inequalities(self) -> List[Inequality]:
        """ The facets followed by both directions of every equation
        """
        result = list(self.facets)
        for e in self.equations:
            result.append(e)
            result.append(e.negated())
        return result

    def __len__(self):
        return len(self.facets)


def _affine_hull(points: Sequence[Tuple[Fraction, ...]], dim: int):
    p0 = points[0]
    directions, _ = rref([sub(p, p0) for p in points[1:]], dim)
    normals = nullspace(directions, dim)
    equations = []
    for c in normals:
        c = normalize_inf(c)
        equations.append(Inequality(c, dot(c, p0)))
    return [tuple(d) for d in directions], equations


def convex_hull_facets(S: PointSet) -> FacetList:
    """ Exact facet description of conv(S) within aff(S).

    Every facet is the hyperplane (inside aff(S)) through r affinely
    independent points of S, r = dim aff(S), that leaves all of S on one
    side. Candidate tuples whose points already lie on a known facet are
    skipped.
    """
    points = [tuple(Fraction(c) for c in p) for p in S]
    d = S.dim
    if not points:
        return FacetList((), (), -1, d)

    directions, equations = _affine_hull(points, d)
    r = len(directions)
    found = {}
    if r > 0:
        for combo in itertools.combinations(range(len(points)), r):
            chosen = [points[i] for i in combo]
            if any(all(f.value(p) == f.b for p in chosen) for f in found.values()):
                continue

            q0 = chosen[0]
            system = [[dot(sub(q, q0), v) for v in directions] for q in chosen[1:]]
            coeffs = nullspace(system, r)
            if len(coeffs) != 1:
                continue  # not affinely independent

            a = tuple(sum((c * v[j] for c, v in zip(coeffs[0], directions)), Fraction(0)) for j in range(d))
            b = dot(a, q0)
            values = [dot(a, p) for p in points]
            if all(v <= b for v in values):
                facet = Inequality(a, b).normalized()
            elif all(v >= b for v in values):
                facet = Inequality(a, b).negated().normalized()
            else:
                continue
            found[facet] = facet

    return FacetList(tuple(sorted(found)), tuple(equations), r, d)


def segment_hits_hull(y1: Sequence, y2: Sequence, H: FacetList) -> bool:
    """ Whether the segment conv({y1, y2}) meets the polytope H.
    Points of the segment are l*y1 + (1-l)*y2 for l in [0, 1]; every facet
    and equation restricts l to an interval.
    """
    lo, hi = Fraction(0), Fraction(1)
    direction = sub(y1, y2)

    for f in H.facets:
        coef = dot(f.a, direction)
        rhs = f.b - dot(f.a, y2)
        if coef > 0:
            hi = min(hi, rhs / coef)
        elif coef < 0:
            lo = max(lo, rhs / coef)
        elif rhs < 0:
            return False

    for e in H.equations:
        coef = dot(e.a, direction)
        rhs = e.b - dot(e.a, y2)
        if coef == 0:
            if rhs != 0:
                return False
        else:
            lo = max(lo, rhs / coef)
            hi = min(hi, rhs / coef)

    return lo <= hi


def integer_points_in_hull(H: FacetList, bbox: Tuple[Sequence, Sequence]) -> PointSet:
    """ All integer points of the box satisfying the facets and equations
    """
    lo, hi = bbox
    ranges = [range(math.ceil(a), math.floor(b) + 1) for a, b in zip(lo, hi)]
    return PointSet((p for p in itertools.product(*ranges) if H.contains(p)), dim=H.dim)


def _convex_combination_lp(groups: Sequence[Sequence[Sequence]], dim: int) -> LinearProgram:
    """ Feasibility LP: one convex combination per group, all equal
    """
    lp = LinearProgram(SENSE.min_)
    weights = []
    for points in groups:
        idx = [lp.add_variable(0, 0, None) for _ in points]
        lp.add_row({i: 1 for i in idx}, SENSE.eq, 1)
        weights.append(idx)

    first, first_points = weights[0], groups[0]
    for idx, points in zip(weights[1:], groups[1:]):
        for j in range(dim):
            row = {}
            for i, p in zip(first, first_points):
                row[i] = row.get(i, 0) + Fraction(p[j])
            for i, p in zip(idx, points):
                row[i] = row.get(i, 0) - Fraction(p[j])
            lp.add_row(row, SENSE.eq, 0)
    return lp


def hulls_intersect(P: Iterable[Sequence], Q: Iterable[Sequence], dim: int) -> bool:
    """ Whether conv(P) and conv(Q) have a common point (exact LP)
    """
    P, Q = list(P), list(Q)
    if not P or not Q:
        return False
    return solve(_convex_combination_lp([P, Q], dim)).status == STATUS.optimal


def in_convex_hull(p: Point, Q: Iterable[Sequence], dim: int) -> bool:
    return hulls_intersect([p], Q, dim)

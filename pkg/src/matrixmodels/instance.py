#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from fractions import Fraction

from typing import List
from typing import NamedTuple
from typing import Optional

from src.api.config import OPTIONS
from src.api.errors import InvalidInstanceError
from src.api.errors import NotLatticeConvexError
from src.api.errors import RcUndefinedError
from src.geometry import FacetList
from src.geometry import Inequality
from src.geometry import PointSet
from src.geometry import convex_hull_facets
from src.geometry import is_lattice_convex
from src.geometry import linf_radius
from src.separability import eps_separable

__all__ = ['RcInstance', 'make_instance', 'big_m']


def big_m(dim: int, rho_X, rho_Y, eps) -> Fraction:
    return dim * (Fraction(rho_X) + Fraction(rho_Y)) + Fraction(eps)


class RcInstance(NamedTuple):
    X: PointSet
    Y: PointSet
    eps: Fraction
    k: int
    M: Fraction
    rho_X: Fraction
    rho_Y: Fraction
    facets: FacetList

    @property
    def dim(self) -> int:
        return self.X.dim

    @property
    def b_bound(self) -> Fraction:
        """ Bound on |b| of a normalized inequality: d * rho_X """
        return self.dim * self.rho_X

    @property
    def facet_inequalities(self) -> List[Inequality]:
        return self.facets.as_inequalities()

    def with_k(self, k: int) -> 'RcInstance':
        return self._replace(k=k)

    def __str__(self):
        return 'RcInstance(d=%i, |X|=%i, |Y|=%i, eps=%s, k=%i)' % (self.dim, len(self.X), len(self.Y), self.eps, self.k)


def make_instance(X: PointSet, Y: PointSet, eps=None, k: Optional[int] = None, check: bool = True) -> RcInstance:
    """ Builds an instance. k defaults to the number of inequalities of
    the outer description of conv(X) (facets plus affine hull equations).
    With check, X must be lattice-convex, disjoint from Y, and every point
    of Y must be separable on its own.
    """
    eps = Fraction(OPTIONS.eps if eps is None else eps)
    if eps <= 0:
        raise InvalidInstanceError('eps must be positive, got %s' % eps)
    if not len(X):
        raise InvalidInstanceError('X is empty')
    if X.dim != Y.dim:
        raise InvalidInstanceError('X has dimension %i but Y has dimension %i' % (X.dim, Y.dim))
    if not X.is_disjoint(Y):
        raise InvalidInstanceError('X and Y are not disjoint')

    if check:
        if not X.is_integral() or not Y.is_integral():
            raise InvalidInstanceError('points must be integral')
        if not is_lattice_convex(X):
            raise NotLatticeConvexError()
        for y in Y:
            if eps_separable(X, [y], eps) is None:
                raise RcUndefinedError(y, eps)

    facets = convex_hull_facets(X)
    if k is None:
        k = len(facets.as_inequalities())
    if k < 1 and len(Y):
        raise InvalidInstanceError('k must be positive')

    rho_X, rho_Y = linf_radius(X), linf_radius(Y)
    return RcInstance(X, Y, eps, k, big_m(X.dim, rho_X, rho_Y, eps), rho_X, rho_Y, facets)

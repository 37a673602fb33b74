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
from functools import lru_cache

from typing import Iterable
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.constants import SENSE
from src.api.errors import PreconditionError
from src.exactlp import LinearProgram
from src.exactlp import solve
from src.geometry import Inequality
from src.geometry import PointSet
from src.geometry import linf_radius
from src.geometry.points import make_point

__all__ = ['SeparationInstance', 'eps_separable', 'separation_lp', 'cache_info', 'cache_clear']


class SeparationInstance(NamedTuple):
    """ Can the points F be cut off from X by one inequality with margin eps?
    """
    X: PointSet
    F: Tuple
    eps: Fraction
    rho_X: Fraction

    @classmethod
    def make(cls, X: PointSet, F: Iterable[Sequence], eps) -> 'SeparationInstance':
        F = tuple(make_point(p) for p in F)
        eps = Fraction(eps)
        if eps <= 0:
            raise PreconditionError('eps must be positive')
        if any(p in X for p in F):
            raise PreconditionError('points to separate must not belong to X')
        return cls(X, F, eps, linf_radius(X))

    def solve(self) -> Optional[Inequality]:
        return _separable(self.X.points, self.X.dim, frozenset(self.F), self.eps)


def separation_lp(X: Sequence[Sequence], dim: int, F: Iterable[Sequence], eps: Fraction) -> LinearProgram:
    """ Feasibility LP over (a, b) with a in [-1, 1]^d, b in [-d rho, d rho]:
    a.x <= b on X and a.y >= b + eps on F.
    """
    bound = dim * linf_radius(X)
    lp = LinearProgram(SENSE.min_)
    a = [lp.add_variable(0, -1, 1, 'a%i' % (j + 1)) for j in range(dim)]
    b = lp.add_variable(0, -bound, bound, 'b')

    for x in X:
        row = {a[j]: x[j] for j in range(dim)}
        row[b] = -1
        lp.add_row(row, SENSE.le, 0)

    for y in sorted(F):
        row = {a[j]: y[j] for j in range(dim)}
        row[b] = -1
        lp.add_row(row, SENSE.ge, eps)

    return lp


@lru_cache(maxsize=1 << 16)
def _separable(X: Tuple, dim: int, F: frozenset, eps: Fraction) -> Optional[Inequality]:
    lp = separation_lp(X, dim, F, eps)
    result = solve(lp)
    if not result.is_optimal:
        return None

    ineq = Inequality(tuple(result.primal[:dim]), result.primal[dim])
    assert ineq.is_valid_for(X) and all(ineq.separates(y, eps) for y in F), 'separation oracle returned a bad witness'
    return ineq


def eps_separable(X: PointSet, F: Iterable[Sequence], eps) -> Optional[Inequality]:
    """ Returns an inequality a.x <= b, valid for X, with a.y >= b + eps
    for every y in F (a in [-1, 1]^d, b in [-d rho_X, d rho_X]),
    or None if there is no such inequality.
    """
    return SeparationInstance.make(X, F, eps).solve()


def cache_info():
    return _separable.cache_info()


def cache_clear():
    _separable.cache_clear()

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

from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.errors import InvalidInstanceError
from src.api.utils import fraction_str

from .linalg import dot
from .linalg import normalize_inf

__all__ = ['Point', 'PointSet', 'Inequality', 'linf_radius', 'make_point']

# Lattice points are tuples of ints; hull tests may use Fractions
Point = Tuple


def make_point(coords: Iterable) -> Point:
    """ Canonical point: ints where the value is integral, Fractions otherwise
    """
    result = []
    for c in coords:
        c = Fraction(c)
        result.append(c.numerator if c.denominator == 1 else c)
    return tuple(result)


class PointSet:
    """ An ordered set of distinct points of the same dimension.
    The role ('X' or 'Y') is informative only.
    """
    def __init__(self, points: Iterable[Sequence] = (), dim: Optional[int] = None, role: Optional[str] = None):
        self.points: Tuple[Point, ...] = tuple(make_point(p) for p in points)
        if dim is None:
            if not self.points:
                raise InvalidInstanceError('dimension of an empty point set is unknown')
            dim = len(self.points[0])

        if dim < 1:
            raise InvalidInstanceError('dimension must be positive')

        self.dim = dim
        self.role = role
        self._index: Dict[Point, int] = {}
        for i, p in enumerate(self.points):
            if len(p) != dim:
                raise InvalidInstanceError('point %s has not dimension %i' % (p, dim))
            if p in self._index:
                raise InvalidInstanceError('duplicated point %s' % (p, ))
            self._index[p] = i

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __contains__(self, p) -> bool:
        return make_point(p) in self._index

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and self.points == other.points

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return 'PointSet(%s, dim=%i)' % (list(self.points), self.dim)

    def index(self, p) -> int:
        return self._index[make_point(p)]

    def as_set(self):
        return frozenset(self.points)

    def subset(self, points: Iterable[Sequence], role: Optional[str] = None) -> 'PointSet':
        return PointSet(points, dim=self.dim, role=role if role is not None else self.role)

    def is_disjoint(self, other: 'PointSet') -> bool:
        return not any(p in self._index for p in other)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for p in self.points for c in p)


class Inequality(NamedTuple):
    """ The inequality a . x <= b
    """
    a: Tuple[Fraction, ...]
    b: Fraction

    @classmethod
    def make(cls, a: Iterable, b) -> 'Inequality':
        return cls(tuple(Fraction(x) for x in a), Fraction(b))

    def value(self, p: Sequence) -> Fraction:
        return dot(self.a, p)

    def contains(self, p: Sequence) -> bool:
        return self.value(p) <= self.b

    def is_valid_for(self, points: Iterable[Sequence]) -> bool:
        return all(self.contains(p) for p in points)

    def separates(self, y: Sequence, eps) -> bool:
        """ Whether y violates the inequality by at least eps
        """
        return self.value(y) >= self.b + eps

    @property
    def norm_inf(self) -> Fraction:
        return max((abs(x) for x in self.a), default=Fraction(0))

    def normalized(self) -> 'Inequality':
        top = self.norm_inf
        if top == 0:
            return self
        return Inequality(normalize_inf(self.a), self.b / top)

    def negated(self) -> 'Inequality':
        return Inequality(tuple(-x for x in self.a), -self.b)

    def permuted(self, pi: Sequence[int]) -> 'Inequality':
        """ Coordinate j of the result is coordinate pi^-1(j) of a,
        i.e. the image of a under the coordinate permutation pi.
        """
        a = [Fraction(0)] * len(self.a)
        for j, c in enumerate(self.a):
            a[pi[j]] = c
        return Inequality(tuple(a), self.b)

    def __str__(self):
        terms = ' '.join('%s*x%i' % (fraction_str(c), j + 1) for j, c in enumerate(self.a) if c)
        return '%s <= %s' % (terms or '0', fraction_str(self.b))


def linf_radius(S: Iterable[Sequence]) -> Fraction:
    """ Largest sup-norm of the points (0 for an empty set)
    """
    return Fraction(max((abs(c) for p in S for c in p), default=0))

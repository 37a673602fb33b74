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
import json

from fractions import Fraction

from typing import Any
from typing import Dict
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from src.api.config import OPTIONS
from src.api.errors import InvalidInstanceError
from src.api.utils import fraction_str
from src.api.utils import open_file
from src.api.utils import parse_fraction
from src.api.utils import read_txt_file
from src.geometry import Point
from src.geometry import PointSet
from src.geometry import l1_neighborhood
from src.matrixmodels import RcInstance
from src.matrixmodels import make_instance

from .errors import InstanceFormatError

__all__ = ['YSOURCE', 'InstanceSpec', 'complement_in_cube', 'load_instance', 'save_instance']


class YSOURCE:
    """ How the points to cut off are obtained
    """
    explicit = 'explicit'
    l1_radius = 'l1_radius'
    binary_complement = 'binary_complement'


def complement_in_cube(X: PointSet) -> PointSet:
    """ The 0/1 points of dimension X.dim not in X, in lexicographic order
    """
    return PointSet((p for p in itertools.product((0, 1), repeat=X.dim) if p not in X), dim=X.dim, role='Y')


class InstanceSpec(NamedTuple):
    """ A named instance: explicit X and a source for Y.
    Y is either an explicit tuple of points, the l1-neighborhood of X
    of a given radius, or the binary complement of X.
    group tags the instance family for aggregation.
    """
    name: str
    dim: int
    X: Tuple[Point, ...]
    Y: Optional[Tuple[Point, ...]] = None
    l1_radius: Optional[int] = None
    binary_complement: bool = False
    eps: Optional[Fraction] = None
    group: str = YSOURCE.explicit

    @property
    def y_source(self) -> str:
        if self.binary_complement:
            return YSOURCE.binary_complement
        if self.l1_radius is not None:
            return YSOURCE.l1_radius
        return YSOURCE.explicit

    @property
    def margin(self) -> Fraction:
        return Fraction(OPTIONS.eps if self.eps is None else self.eps)

    def point_sets(self) -> Tuple[PointSet, PointSet]:
        X = PointSet(self.X, dim=self.dim, role='X')
        source = self.y_source
        if source == YSOURCE.binary_complement:
            return X, complement_in_cube(X)
        if source == YSOURCE.l1_radius:
            return X, l1_neighborhood(X, self.l1_radius)
        return X, PointSet(self.Y or (), dim=self.dim, role='Y')

    def to_instance(self, k: Optional[int] = None, check: bool = True) -> RcInstance:
        X, Y = self.point_sets()
        return make_instance(X, Y, self.margin, k, check)

    def with_eps(self, eps) -> 'InstanceSpec':
        return self._replace(eps=Fraction(eps))

    def to_json(self) -> Dict[str, Any]:
        result = {
            'name': self.name,
            'dim': self.dim,
            'eps': fraction_str(self.margin),
            'group': self.group,
            'X': [list(p) for p in self.X]
        }
        source = self.y_source
        if source == YSOURCE.binary_complement:
            result['Y'] = YSOURCE.binary_complement
        elif source == YSOURCE.l1_radius:
            result['Y'] = {YSOURCE.l1_radius: self.l1_radius}
        else:
            result['Y'] = [list(p) for p in self.Y or ()]
        return result

    @classmethod
    def from_json(cls, data: Any, fname: Optional[str] = None) -> 'InstanceSpec':
        if not isinstance(data, dict):
            raise InstanceFormatError('expected a JSON object', fname)

        for field in ('name', 'dim', 'X', 'Y'):
            if field not in data:
                raise InstanceFormatError("missing field '%s'" % field, fname)

        dim = data['dim']
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise InstanceFormatError("'dim' must be a positive integer", fname)

        eps = None
        if data.get('eps') is not None:
            eps = parse_fraction(data['eps'])
            if eps is None or eps <= 0:
                raise InstanceFormatError("'eps' must be a positive rational, got %r" % data['eps'], fname)

        X = _points(data['X'], dim, 'X', fname)
        if not X:
            raise InstanceFormatError("'X' is empty", fname)
        spec = cls(str(data['name']), dim, X, eps=eps, group=str(data.get('group', YSOURCE.explicit)))

        y = data['Y']
        if y == YSOURCE.binary_complement:
            return spec._replace(binary_complement=True)
        if isinstance(y, dict):
            radius = y.get(YSOURCE.l1_radius)
            if set(y) != {YSOURCE.l1_radius} or not isinstance(radius, int) or radius < 1:
                raise InstanceFormatError("'Y' must be {\"l1_radius\": positive integer}", fname)
            return spec._replace(l1_radius=radius)
        return spec._replace(Y=_points(y, dim, 'Y', fname))


def _points(data: Any, dim: int, role: str, fname: Optional[str]) -> Tuple[Point, ...]:
    if not isinstance(data, list):
        raise InstanceFormatError("'%s' must be a list of points" % role, fname)

    result = []
    for p in data:
        if not isinstance(p, list) or len(p) != dim:
            raise InstanceFormatError('point %r of %s has not dimension %i' % (p, role, dim), fname)
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in p):
            raise InstanceFormatError('point %r of %s is not integral' % (p, role), fname)
        result.append(tuple(p))

    if len(set(result)) != len(result):
        raise InstanceFormatError('duplicated points in %s' % role, fname)
    return tuple(result)


def load_instance(fname: str) -> InstanceSpec:
    """ Reads an instance JSON file. Point sets are checked for shape
    only; use InstanceSpec.to_instance() to validate the geometry.
    """
    try:
        data = json.loads(read_txt_file(fname))
    except ValueError as e:
        raise InstanceFormatError('not valid JSON (%s)' % e, fname)

    spec = InstanceSpec.from_json(data, fname)
    try:
        spec.point_sets()
    except InvalidInstanceError as e:
        raise InstanceFormatError(e.msg, fname)
    return spec


def save_instance(spec: InstanceSpec, fname: str):
    with open_file(fname, 'wt', 'utf-8') as f:
        json.dump(spec.to_json(), f, indent=2)
        f.write('\n')

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
import os

from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.utils import read_txt_file

from .errors import InstanceFormatError
from .errors import SboxFormatError
from .instances import InstanceSpec

__all__ = [
    'SHAPES',
    'cube_vertices',
    'cross_polytope',
    'standard_simplex',
    'generate_basic',
    'generate_downcld',
    'sample_downcld_family',
    'sbox_graph',
    'read_sbox'
]


def cube_vertices(d: int) -> List[Tuple[int, ...]]:
    return list(itertools.product((0, 1), repeat=d))


def cross_polytope(d: int) -> List[Tuple[int, ...]]:
    """ The origin and the points +-e_i """
    result = [(0, ) * d]
    for i in range(d):
        for sign in (-1, 1):
            result.append(tuple(sign if j == i else 0 for j in range(d)))
    return result


def standard_simplex(d: int) -> List[Tuple[int, ...]]:
    """ The origin and the unit vectors """
    return [(0, ) * d] + [tuple(int(j == i) for j in range(d)) for i in range(d)]


SHAPES = {
    'cube': cube_vertices,
    'cross': cross_polytope,
    'simplex': standard_simplex
}


def generate_basic(shape: str, d: int, radius: int = 1, eps=None) -> InstanceSpec:
    """ X is the lattice points of the shape, Y its l1-neighborhood
    """
    if shape not in SHAPES:
        raise InstanceFormatError("unknown shape '%s' (use one of: %s)" % (shape, ', '.join(SHAPES)))
    if d < 1:
        raise InstanceFormatError('dimension must be positive, got %i' % d)
    if radius < 1:
        raise InstanceFormatError('radius must be positive, got %i' % radius)

    return InstanceSpec('%s-d%i-r%i' % (shape, d, radius), d, tuple(SHAPES[shape](d)), l1_radius=radius,
                        eps=eps, group=shape)


def generate_downcld(antichain: Iterable[Iterable[int]], d: Optional[int] = None, radius: int = 1,
                     eps=None, name: Optional[str] = None) -> InstanceSpec:
    """ X is the down-closed family of 0/1 points generated by the antichain
    (subsets of {1, ..., d}): every subset of a member, as a characteristic
    vector. The family must be full-dimensional, that is, every element of
    {1, ..., d} must belong to some member.
    """
    members = [frozenset(m) for m in antichain]
    if not members:
        raise InstanceFormatError('the antichain is empty')

    elements = frozenset().union(*members)
    if d is None:
        d = max(elements, default=0)
    if d < 1:
        raise InstanceFormatError('dimension must be positive')
    if any(not isinstance(i, int) or not 1 <= i <= d for i in elements):
        raise InstanceFormatError('antichain members must be subsets of {1, ..., %i}' % d)

    for A, B in itertools.combinations(members, 2):
        if A <= B or B <= A:
            raise InstanceFormatError('not an antichain: %s and %s are comparable' % (sorted(A), sorted(B)))

    missing = sorted(set(range(1, d + 1)) - elements)
    if missing:
        raise InstanceFormatError('the family is not full-dimensional: no member contains %s' % missing)

    X = set()
    for m in members:
        items = sorted(m)
        for size in range(len(items) + 1):
            for subset in itertools.combinations(items, size):
                X.add(tuple(int(j + 1 in subset) for j in range(d)))

    if name is None:
        name = 'downcld-d%i-%s-r%i' % (d, '_'.join(''.join(str(i) for i in sorted(m)) for m in members), radius)
    return InstanceSpec(name, d, tuple(sorted(X)), l1_radius=radius, eps=eps, group='downcld')


def sample_downcld_family(d: int) -> List[List[List[int]]]:
    """ A deterministic family of antichains of {1, ..., d}:
      * for each k = 1 .. d, all the k-subsets (k = 1 gives the simplex,
        k = d the cube);
      * for each j = 2 .. d - 1, the set {1, ..., j} together with the
        singletons {j + 1}, ..., {d}.
    """
    ground = range(1, d + 1)
    result = [[list(c) for c in itertools.combinations(ground, k)] for k in range(1, d + 1)]
    for j in range(2, d):
        result.append([list(range(1, j + 1))] + [[i] for i in range(j + 1, d + 1)])
    return result


def sbox_graph(table: Sequence[int]) -> List[str]:
    """ The graph {(x, S(x))} of an n-bit S-box as 0/1 strings of length 2n,
    most significant bit first.
    """
    n = max(len(table) - 1, 1).bit_length()
    if len(table) != 2 ** n:
        raise SboxFormatError('an S-box table must have a power of two entries, got %i' % len(table))
    if any(not 0 <= v < 2 ** n for v in table):
        raise SboxFormatError('S-box values must be %i-bit' % n)

    return ['{0:0{n}b}{1:0{n}b}'.format(x, v, n=n) for x, v in enumerate(table)]


def _parse_sbox(lines: Iterable[str], fname: Optional[str]) -> List[Tuple[int, ...]]:
    points = []
    seen = set()
    length = None
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if any(c not in '01' for c in line):
            raise SboxFormatError("'%s' is not a 0/1 string" % line, fname, lineno)
        if length is None:
            length = len(line)
            if length % 2:
                raise SboxFormatError('vectors must have even length, got %i' % length, fname, lineno)
        elif len(line) != length:
            raise SboxFormatError('expected length %i, got %i' % (length, len(line)), fname, lineno)

        p = tuple(int(c) for c in line)
        if p in seen:
            raise SboxFormatError("duplicated vector '%s'" % line, fname, lineno)
        seen.add(p)
        points.append(p)

    if not points:
        raise SboxFormatError('no vectors found', fname)
    return points


def read_sbox(fname: str, eps=None, name: Optional[str] = None) -> InstanceSpec:
    """ An S-box file lists the graph of the S-box, one 0/1 vector per line.
    X is the listed vectors, Y the remaining 0/1 points.
    Empty lines and lines starting with # are ignored.
    """
    points = _parse_sbox(read_txt_file(fname).splitlines(), fname)
    if name is None:
        name = 'sbox-%s' % os.path.splitext(os.path.basename(fname))[0]
    return InstanceSpec(name, len(points[0]), tuple(points), binary_complement=True, eps=eps, group='sbox')

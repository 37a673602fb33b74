#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Coordinate permutations keeping (shifted) X and Y invariant.

Candidates are drawn from S_d, filtered by the coordinate profiles of
the symmetry graph, and verified exactly on the point sets.
"""

import itertools

from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from src.api import errmsg
from src.api.debug import __DEBUG__
from src.geometry import Point
from src.geometry import PointSet

from .graph import SymGraph
from .graph import build_symmetry_graph

__all__ = [
    'PointPermutation',
    'apply_permutation',
    'automorphism_generators',
    'detect_symmetries',
    'compose',
    'closure',
    'MAX_ENUMERATION_DIM'
]

# Largest dimension for which S_d is enumerated
MAX_ENUMERATION_DIM = 8

Perm = Tuple[int, ...]


class PointPermutation(NamedTuple):
    """ pi permutes coordinates (coordinate j goes to pi[j]); phi and
    psi are the induced permutations of the indices of Y and X:
    phi[i] is the index of the image of Y[i].
    """
    pi: Perm
    phi: Perm
    psi: Perm

    @property
    def is_identity(self) -> bool:
        return all(j == p for j, p in enumerate(self.pi))


def apply_permutation(pi: Sequence[int], q: Sequence) -> Point:
    result = [0] * len(q)
    for j, c in enumerate(q):
        result[pi[j]] = c
    return tuple(result)


def _compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """ p after q """
    return tuple(p[i] for i in q)


def compose(p: PointPermutation, q: PointPermutation) -> PointPermutation:
    """ The permutation applying q first, then p
    """
    return PointPermutation(_compose(p.pi, q.pi), _compose(p.phi, q.phi), _compose(p.psi, q.psi))


def closure(generators: Iterable[Sequence[int]]) -> Set[Perm]:
    """ All elements of the group generated by the given permutations
    """
    generators = [tuple(g) for g in generators]
    if not generators:
        return set()

    identity = tuple(range(len(generators[0])))
    group = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for g in generators:
                r = _compose(g, p)
                if r not in group:
                    group.add(r)
                    new.append(r)
        frontier = new
    return group


def _induced(g: SymGraph, pi: Perm, S: PointSet) -> Optional[Perm]:
    """ Index permutation of S induced by pi on shifted coordinates,
    or None if pi does not map S onto itself.
    """
    result = []
    for p in S:
        image = g.unshifted(apply_permutation(pi, g.shifted(p)))
        if image not in S:
            return None
        result.append(S.index(image))
    return tuple(result)


def automorphism_generators(g: SymGraph) -> List[PointPermutation]:
    """ A generating set of the nontrivial coordinate symmetries of
    (X, Y) after the shift of the graph. Empty when only the identity
    keeps both sets invariant.
    """
    d = g.dim
    if d > MAX_ENUMERATION_DIM:
        errmsg.warning('symmetry detection skipped in dimension %i' % d)
        return []

    profiles = [g.coordinate_profile(j) for j in range(d)]
    identity = tuple(range(d))
    found: List[PointPermutation] = []
    group: Set[Perm] = {identity}

    for pi in itertools.permutations(range(d)):
        if pi in group or any(profiles[j] != profiles[pi[j]] for j in range(d)):
            continue

        phi = _induced(g, pi, g.Y)
        psi = _induced(g, pi, g.X) if phi is not None else None
        if psi is None:
            continue

        found.append(PointPermutation(pi, phi, psi))
        group = closure(p.pi for p in found)

    __DEBUG__('symmetry: %i generators, group order %i' % (len(found), len(group)), 1)
    return found


def detect_symmetries(X: PointSet, Y: PointSet, translate: bool = True) -> List[PointPermutation]:
    return automorphism_generators(build_symmetry_graph(X, Y, translate))

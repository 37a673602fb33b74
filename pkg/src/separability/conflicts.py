#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from typing import Iterable
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

from src.api.errors import PreconditionError
from src.geometry import PointSet
from src.geometry.points import make_point

from .oracle import eps_separable

__all__ = ['ConflictCertificate', 'sparsify_conflict', 'is_minimal_conflict']


class ConflictCertificate(NamedTuple):
    """ A set of points that cannot be cut off from X by one inequality
    """
    members: Tuple
    minimal: bool

    @property
    def key(self) -> frozenset:
        return frozenset(self.members)

    def __len__(self):
        return len(self.members)


def sparsify_conflict(X: PointSet, F: Iterable[Sequence], eps) -> ConflictCertificate:
    """ Inclusion-wise minimal inseparable subset of F.

    Points are added in the given order until the set becomes
    inseparable; then each member is dropped if the rest stays
    inseparable.
    """
    F = [make_point(p) for p in F]
    if eps_separable(X, F, eps) is not None:
        raise PreconditionError('cannot sparsify a separable set')

    members = []
    for y in F:
        members.append(y)
        if eps_separable(X, members, eps) is None:
            break

    for y in list(members):
        rest = [p for p in members if p != y]
        if eps_separable(X, rest, eps) is None:
            members = rest

    return ConflictCertificate(tuple(members), True)


def is_minimal_conflict(X: PointSet, members: Sequence[Sequence], eps) -> bool:
    """ Checks the conflict and its minimality with the oracle
    """
    members = list(members)
    if eps_separable(X, members, eps) is not None:
        return False
    return all(eps_separable(X, [p for p in members if p != y], eps) is not None for y in members)

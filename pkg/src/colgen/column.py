#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from typing import Dict
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.errors import InternalError
from src.api.errors import RcUndefinedError
from src.geometry import Inequality
from src.geometry import Point
from src.matrixmodels import RcInstance
from src.separability import eps_separable

__all__ = ['Column', 'ColumnPool', 'initial_columns']


class Column(NamedTuple):
    """ A set of points of Y (in Y order) with an inequality cutting
    them off from X with margin eps.
    """
    members: Tuple[Point, ...]
    witness: Inequality
    id: int

    @property
    def key(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, y) -> bool:
        return y in self.members

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return 'I%i%s' % (self.id, list(self.members))


class ColumnPool:
    """ All columns generated for an instance, deduplicated by member set.
    Column ids are consecutive, in insertion order.
    """
    def __init__(self, inst: RcInstance):
        self.inst = inst
        self.columns: List[Column] = []
        self._by_key: Dict[frozenset, int] = {}

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __getitem__(self, i) -> Column:
        return self.columns[i]

    def find(self, members: Iterable[Point]) -> Optional[Column]:
        i = self._by_key.get(frozenset(members))
        return None if i is None else self.columns[i]

    def add(self, members: Iterable[Point], witness: Optional[Inequality] = None) -> Tuple[Column, bool]:
        """ Adds a column unless one with the same members exists.
        Returns the column and whether it is new. The witness (computed
        with the oracle if not given) is checked exactly.
        """
        members = set(members)
        ordered = tuple(y for y in self.inst.Y if y in members)
        if len(ordered) != len(members):
            raise InternalError('column has points outside Y')

        known = self.find(ordered)
        if known is not None:
            return known, False

        if witness is None:
            witness = eps_separable(self.inst.X, ordered, self.inst.eps)
            if witness is None:
                raise InternalError('column %s is not separable' % (list(ordered), ))

        if witness.norm_inf > 1 or not witness.is_valid_for(self.inst.X) or \
                not all(witness.separates(y, self.inst.eps) for y in ordered):
            raise InternalError('bad witness %s for column %s' % (witness, list(ordered)))

        column = Column(ordered, witness, len(self.columns))
        self._by_key[column.key] = column.id
        self.columns.append(column)
        return column, True

    def covering(self, y: Point) -> List[Column]:
        return [c for c in self.columns if y in c]


def _cut_off(inst: RcInstance, ineq: Inequality) -> Sequence[Point]:
    return [y for y in inst.Y if ineq.separates(y, inst.eps)]


def initial_columns(inst: RcInstance, pool: Optional[ColumnPool] = None) -> ColumnPool:
    """ Sets cut off by the outer description of conv(X), then singletons
    """
    pool = pool if pool is not None else ColumnPool(inst)
    for ineq in inst.facet_inequalities:
        members = _cut_off(inst, ineq)
        if members:
            pool.add(members, ineq)

    for y in inst.Y:
        witness = eps_separable(inst.X, [y], inst.eps)
        if witness is None:
            raise RcUndefinedError(y, inst.eps)
        pool.add([y], witness)

    return pool

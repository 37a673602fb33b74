#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" The restricted master problem
    min sum z[I]   s.t.   sum_{I containing y} z[I] >= 1   for y in Y
over the enabled columns, plus one artificial variable per row with
cost |Y| + 1 which keeps the LP feasible after branching.
"""

from fractions import Fraction

from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.constants import RF
from src.api.constants import SENSE
from src.api.errors import PreconditionError
from src.exactlp import LinearProgram
from src.exactlp import LpSolution
from src.exactlp import solve
from src.geometry import Point
from src.matrixmodels import RcInstance

from .column import Column
from .column import ColumnPool

__all__ = [
    'RFDecision',
    'MasterState',
    'apply_branching',
    'master_lp',
    'solve_master_lp',
    'master_values',
    'artificial_cost',
    'ColgenData',
    'path_decisions'
]


class RFDecision(NamedTuple):
    """ y1 and y2 are covered by different sets (differ) or
    always by the same sets (together)
    """
    y1: Point
    y2: Point
    mode: str

    @classmethod
    def make(cls, y1, y2, mode: str) -> 'RFDecision':
        if y1 == y2:
            raise PreconditionError('branching needs two different points')
        if mode not in (RF.differ, RF.together):
            raise PreconditionError("unknown branching mode '%s'" % mode)
        return cls(y1, y2, mode)

    def allows(self, members: Iterable[Point]) -> bool:
        members = set(members)
        has1, has2 = self.y1 in members, self.y2 in members
        if self.mode == RF.differ:
            return not (has1 and has2)
        return has1 == has2

    def __str__(self):
        return '%s(%s, %s)' % (self.mode, self.y1, self.y2)


class MasterState:
    """ Column pool plus the decisions along the current tree path
    """
    def __init__(self, pool: ColumnPool, decisions: Tuple[RFDecision, ...] = ()):
        self.pool = pool
        self.decisions = tuple(decisions)

    def is_enabled(self, column: Column) -> bool:
        return all(d.allows(column.members) for d in self.decisions)

    @property
    def enabled(self) -> List[Column]:
        return [c for c in self.pool if self.is_enabled(c)]

    @property
    def disabled(self) -> List[int]:
        return [c.id for c in self.pool if not self.is_enabled(c)]


def apply_branching(state: MasterState, decision: RFDecision) -> MasterState:
    return MasterState(state.pool, state.decisions + (decision, ))


def artificial_cost(n: int) -> int:
    return n + 1


def master_lp(state: MasterState) -> Tuple[LinearProgram, List[Column]]:
    """ LP of the enabled columns. Variables are the |Y| artificials
    followed by the columns; row y is the covering row of Y[y].
    """
    Y = state.pool.inst.Y
    lp = LinearProgram(SENSE.min_)
    cost = artificial_cost(len(Y))
    for y in range(len(Y)):
        lp.add_variable(cost, 0, None, 'art%i' % (y + 1))

    columns = state.enabled
    rows: List[dict] = [{y: 1} for y in range(len(Y))]
    for column in columns:
        var = lp.add_variable(1, 0, None, 'z%i' % column.id)
        for p in column.members:
            rows[Y.index(p)][var] = 1

    for row in rows:
        lp.add_row(row, SENSE.ge, 1)
    return lp, columns


def solve_master_lp(state: MasterState) -> LpSolution:
    """ Exact optimum of the restricted master; duals are the alpha_y
    of the covering rows.
    """
    lp, _ = master_lp(state)
    return solve(lp)


def master_values(state: MasterState, sol: LpSolution) -> Tuple[List[Fraction], List[Tuple[Column, Fraction]]]:
    """ Artificial values and (column, z) of the enabled columns """
    n = len(state.pool.inst.Y)
    columns = state.enabled
    return sol.primal[:n], list(zip(columns, sol.primal[n:]))


class ColgenData(NamedTuple):
    """ MipModel.data of the branch-and-price model: the |Y| artificials
    come first, then one variable per pool column, in id order.
    """
    inst: RcInstance
    pool: ColumnPool
    hiding: List[Tuple[Point, Point]]

    @property
    def num_artificials(self) -> int:
        return len(self.inst.Y)

    def column_of(self, var: int) -> Optional[Column]:
        if var < self.num_artificials:
            return None
        return self.pool[var - self.num_artificials]

    def var_of(self, column: Column) -> int:
        return self.num_artificials + column.id


def path_decisions(path: Sequence) -> List[RFDecision]:
    """ The decisions among the annotations of a node path """
    return [a for a in path if isinstance(a, RFDecision)]

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Branching on pairs of points: either y1 and y2 lie in different sets
of the cover, or every set holds both or none of them.
"""

from fractions import Fraction

from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

from src.api.constants import RF
from src.api.errors import InternalError
from src.mipcore import BranchingRule
from src.mipcore import Child
from src.mipcore import NodeContext
from src.mipcore import PropagationResult
from src.mipcore import Propagator

from .column import Column
from .master import ColgenData
from .master import RFDecision
from .master import path_decisions

__all__ = ['theta', 'ryan_foster_select', 'RyanFosterBranching', 'DecisionPropagator']


def theta(z: Fraction) -> Fraction:
    return Fraction(1, 2) - min(z, 1 - z)


def ryan_foster_select(z_star: Sequence[Tuple[Column, Fraction]]) -> Tuple[RFDecision, RFDecision]:
    """ Among fractional columns I, J that intersect and differ, the pair
    of largest theta(I) + theta(J) (smallest ids on ties); y1 is the
    smallest point of I & J, y2 the smallest of I ^ J. Returns the
    differ and the together decision.
    """
    fractional = sorted(((c, z) for c, z in z_star if z.denominator != 1), key=lambda cz: cz[0].id)
    best, best_score = None, None
    for n, (I, zI) in enumerate(fractional):
        for J, zJ in fractional[n + 1:]:
            common, diff = I.key & J.key, I.key ^ J.key
            if not common or not diff:
                continue
            score = theta(zI) + theta(zJ)
            if best_score is None or score > best_score:
                best, best_score = (common, diff), score

    if best is None:
        raise InternalError('no pair of fractional columns to branch on')

    common, diff = best
    y1, y2 = min(common), min(diff)
    return RFDecision.make(y1, y2, RF.differ), RFDecision.make(y1, y2, RF.together)


class RyanFosterBranching(BranchingRule):
    name = 'ryan-foster'

    def branch(self, ctx: NodeContext) -> List[Child]:
        data: ColgenData = ctx.model.data
        z_star = []
        for var, value in enumerate(ctx.x):
            column = data.column_of(var)
            if column is not None and value:
                z_star.append((column, value))

        return [Child({}, [], decision) for decision in ryan_foster_select(z_star)]


class DecisionPropagator(Propagator):
    """ Fixes to 0 the columns violating a decision of the node path
    """
    name = 'ryan-foster-decisions'

    def propagate(self, ctx: NodeContext) -> PropagationResult:
        decisions = path_decisions(ctx.node.path)
        if not decisions:
            return PropagationResult.nothing()

        data: ColgenData = ctx.model.data
        fixings: Dict[int, Fraction] = {}
        for column in data.pool:
            var = data.var_of(column)
            if ctx.ub[var] == 0:
                continue
            if not all(d.allows(column.members) for d in decisions):
                fixings[var] = Fraction(0)
        return PropagationResult(fixings, False)

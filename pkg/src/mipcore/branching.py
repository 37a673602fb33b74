#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import math

from fractions import Fraction

from typing import List
from typing import NamedTuple
from typing import Sequence

from src.api.errors import PreconditionError
from src.exactlp import LpSolution

from .node import Node
from .plugins import BranchingRule
from .plugins import Child
from .plugins import NodeContext

__all__ = ['BranchingDecision', 'branch_most_fractional', 'MostFractionalBranching']


class BranchingDecision(NamedTuple):
    var: int
    value: Fraction
    children: List[Child]


def branch_most_fractional(node: Node, solution: LpSolution, integer: Sequence[bool],
                           lb: Sequence[Fraction], ub: Sequence[Fraction]) -> BranchingDecision:
    """ Branches on the integer variable whose value is farthest from
    integrality (lowest index on ties): a down child (x <= floor) and
    an up child (x >= ceil), within the node bounds lb/ub.
    """
    best, best_score = None, Fraction(0)
    for j, (v, is_int) in enumerate(zip(solution.primal, integer)):
        if not is_int or v.denominator == 1:
            continue
        f = v - math.floor(v)
        score = min(f, 1 - f)
        if score > best_score:
            best, best_score = j, score

    if best is None:
        raise PreconditionError('no fractional integer variable to branch on (node %i)' % node.id)

    v = solution.primal[best]
    down = Child({best: (lb[best], Fraction(math.floor(v)))}, [], ('down', best), best)
    up = Child({best: (Fraction(math.ceil(v)), ub[best])}, [], ('up', best), best)
    return BranchingDecision(best, v, [down, up])


class MostFractionalBranching(BranchingRule):
    name = 'most-fractional'

    def branch(self, ctx: NodeContext) -> List[Child]:
        return branch_most_fractional(ctx.node, ctx.solution, ctx.model.integer, ctx.lb, ctx.ub).children

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Geometric propagation on the s variables of one inequality index i.
Both propagators only act at nodes created by branching on some s[y][i],
and then only on that index.
"""

from fractions import Fraction

from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence

from src.geometry import Point
from src.geometry import hulls_intersect
from src.geometry import in_convex_hull
from src.mipcore import NodeContext
from src.mipcore import PropagationResult
from src.mipcore import Propagator

from .instance import RcInstance
from .variables import VariableMap

__all__ = ['convexity_propagate', 'intersection_propagate', 'ConvexityPropagator', 'IntersectionPropagator']

Bounds = Sequence[Optional[Fraction]]


def _fixed_ones(inst: RcInstance, vm: VariableMap, lb: Bounds, i: int) -> List[Point]:
    return [inst.Y[y] for y in range(len(inst.Y)) if lb[vm.s[y][i]] == 1]


def convexity_propagate(inst: RcInstance, vm: VariableMap, lb: Bounds, ub: Bounds, i: int) -> PropagationResult:
    """ Points of Y in the convex hull of F_i = {y : s[y][i] fixed to 1}
    are cut off by any inequality cutting off F_i: fix them to 1, or prune
    if one of them is fixed to 0.
    """
    F = _fixed_ones(inst, vm, lb, i)
    if len(F) < 2:
        return PropagationResult.nothing()

    fixings: Dict[int, Fraction] = {}
    for y, point in enumerate(inst.Y):
        var = vm.s[y][i]
        if lb[var] == 1 or not in_convex_hull(point, F, inst.dim):
            continue
        if ub[var] == 0:
            return PropagationResult.prune()
        fixings[var] = Fraction(1)

    return PropagationResult(fixings, False)


def intersection_propagate(inst: RcInstance, vm: VariableMap, lb: Bounds, ub: Bounds, i: int) -> PropagationResult:
    """ An unfixed s[y][i] is fixed to 0 when conv(F_i + y) meets conv(X)
    """
    F = _fixed_ones(inst, vm, lb, i)
    if not F:
        return PropagationResult.nothing()

    fixings: Dict[int, Fraction] = {}
    for y, point in enumerate(inst.Y):
        var = vm.s[y][i]
        if lb[var] == ub[var]:
            continue
        if hulls_intersect(F + [point], inst.X, inst.dim):
            fixings[var] = Fraction(0)

    return PropagationResult(fixings, False)


class _BranchedIndexPropagator(Propagator):
    def __init__(self, inst: RcInstance, vm: VariableMap):
        self.inst = inst
        self.vm = vm

    def propagate(self, ctx: NodeContext) -> PropagationResult:
        branched = self.vm.s_of(ctx.node.branched_var)
        if branched is None:
            return PropagationResult.nothing()
        return self.run(ctx.lb, ctx.ub, branched[1])

    def run(self, lb: Bounds, ub: Bounds, i: int) -> PropagationResult:
        raise NotImplementedError


class ConvexityPropagator(_BranchedIndexPropagator):
    name = 'convexity'

    def run(self, lb: Bounds, ub: Bounds, i: int) -> PropagationResult:
        return convexity_propagate(self.inst, self.vm, lb, ub, i)


class IntersectionPropagator(_BranchedIndexPropagator):
    name = 'intersection'

    def run(self, lb: Bounds, ub: Bounds, i: int) -> PropagationResult:
        return intersection_propagate(self.inst, self.vm, lb, ub, i)

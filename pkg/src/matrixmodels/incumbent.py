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

from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.constants import SYM
from src.geometry import Inequality

from .enhancements import EnhancementOptions
from .instance import RcInstance
from .variables import VariableMap

__all__ = ['solution_from_inequalities', 'facet_solution']


def _assign(inst: RcInstance, ineqs: Sequence[Inequality]) -> Tuple[List[Inequality], List[Tuple[int, ...]], str]:
    """ Keeps the inequalities cutting off some point of Y, with their
    0/1 columns (cut off with margin eps, in Y order).
    """
    used, columns = [], []
    for ineq in ineqs:
        if ineq.norm_inf > 1 or abs(ineq.b) > inst.b_bound or not ineq.is_valid_for(inst.X):
            continue
        column = tuple(int(ineq.separates(y, inst.eps)) for y in inst.Y)
        if any(column):
            used.append(ineq)
            columns.append(column)

    covered = [any(col[y] for col in columns) for y in range(len(inst.Y))]
    if not all(covered):
        y = inst.Y[covered.index(False)]
        return [], [], 'point %s is not cut off' % (y, )
    if len(used) > inst.k:
        return [], [], 'needs %i inequalities, k is %i' % (len(used), inst.k)
    return used, columns, ''


def solution_from_inequalities(inst: RcInstance, vm: VariableMap, ineqs: Sequence[Inequality],
                               opts: Optional[EnhancementOptions] = None) -> Tuple[Optional[List[Fraction]], str]:
    """ A model solution using the given inequalities, ordered so the
    symmetry handling rows of opts hold. Returns (solution, '') or
    (None, reason).
    """
    opts = opts or EnhancementOptions()
    used, columns, reason = _assign(inst, ineqs)
    if reason:
        return None, reason

    order = list(range(len(used)))
    if opts.sym == SYM.advanced:
        order.sort(key=lambda i: columns[i], reverse=True)
    elif opts.coefficient_sorting and vm.has_geometry:
        order.sort(key=lambda i: used[i].a[0], reverse=True)

    x = [Fraction(0)] * vm.size
    for pos, i in enumerate(order):
        x[vm.u[pos]] = Fraction(1)
        for y, value in enumerate(columns[i]):
            x[vm.s[y][pos]] = Fraction(value)
        if vm.has_geometry:
            for j, c in enumerate(used[i].a):
                x[vm.a[pos][j]] = c
            x[vm.b[pos]] = used[i].b

    if vm.has_geometry:
        for pos in range(len(used), vm.k):
            x[vm.b[pos]] = inst.b_bound

    return x, ''


def facet_solution(inst: RcInstance, vm: VariableMap,
                   opts: Optional[EnhancementOptions] = None) -> Tuple[Optional[List[Fraction]], str]:
    """ Solution given by the outer description of conv(X)
    """
    return solution_from_inequalities(inst, vm, inst.facet_inequalities, opts)

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

from src.api.constants import MODEL
from src.api.errors import InternalError
from src.api.errors import PreconditionError
from src.geometry import Inequality
from src.separability import eps_separable

from .instance import RcInstance
from .variables import VariableMap

__all__ = ['extract_relaxation', 'relaxation_from_sets', 'verify_relaxation']


def relaxation_from_sets(inst: RcInstance, sets: Sequence[Sequence]) -> List[Inequality]:
    """ One oracle witness per set of points of Y. An empty set gets
    the trivial inequality 0 <= d rho_X.
    """
    result = []
    for F in sets:
        if not F:
            result.append(Inequality.make([0] * inst.dim, inst.b_bound))
            continue
        witness = eps_separable(inst.X, F, inst.eps)
        if witness is None:
            raise InternalError('selected set %s is not separable' % (sorted(F), ))
        result.append(witness)
    return result


def extract_relaxation(inst: RcInstance, kind: str, vm: VariableMap, x: Sequence[Fraction]) -> List[Inequality]:
    """ The inequalities of a model solution: the used rows (a, b) of the
    compact model; oracle witnesses of the used columns of s otherwise.
    """
    if kind == MODEL.compact:
        return [Inequality(tuple(x[var] for var in vm.a[i]), x[vm.b[i]]) for i in range(vm.k) if x[vm.u[i]] == 1]

    if kind == MODEL.cut:
        sets = [[inst.Y[y] for y in range(vm.n) if x[vm.s[y][i]] == 1] for i in range(vm.k) if x[vm.u[i]] == 1]
        return relaxation_from_sets(inst, sets)

    raise PreconditionError("cannot extract a relaxation from a '%s' model" % kind)


def verify_relaxation(inst: RcInstance, ineqs: Sequence[Inequality]) -> Optional[str]:
    """ Exact re-check. Returns None if every inequality is normalized and
    valid for X and every point of Y is cut off by one of them with margin
    eps; otherwise the reason.
    """
    for n, ineq in enumerate(ineqs):
        if len(ineq.a) != inst.dim:
            return 'inequality %i has dimension %i' % (n + 1, len(ineq.a))
        if ineq.norm_inf > 1:
            return 'inequality %i is not normalized: %s' % (n + 1, ineq)
        for x in inst.X:
            if not ineq.contains(x):
                return 'inequality %i (%s) cuts off %s of X' % (n + 1, ineq, x)

    for y in inst.Y:
        if not any(ineq.separates(y, inst.eps) for ineq in ineqs):
            return 'point %s of Y is not cut off with margin %s' % (y, inst.eps)

    return None

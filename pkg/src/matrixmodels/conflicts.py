#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Conflict rows sum_{y in C} s[y][i] <= |C| - 1 of the cutting plane
model, for sets C of Y that cannot be cut off by a single inequality.
"""

from fractions import Fraction

from typing import Dict
from typing import List
from typing import Sequence

from src.api.constants import SENSE
from src.api.debug import __DEBUG__
from src.exactlp import Row
from src.exactlp.program import make_row
from src.mipcore import Cut
from src.mipcore import NodeContext
from src.mipcore import Separator
from src.separability import ConflictCertificate
from src.separability import eps_separable
from src.separability import sparsify_conflict

from .instance import RcInstance
from .variables import VariableMap

__all__ = [
    'ConflictPool',
    'conflict_rows',
    'separate_conflicts_integral',
    'separate_conflicts_fractional',
    'IntegralConflictSeparator',
    'FractionalConflictSeparator'
]

Matrix = Sequence[Sequence[Fraction]]


class ConflictPool:
    """ Conflicts found so far, keyed by member set
    """
    def __init__(self):
        self.certificates: Dict[frozenset, ConflictCertificate] = {}

    def add(self, certificate: ConflictCertificate) -> bool:
        if certificate.key in self.certificates:
            return False
        self.certificates[certificate.key] = certificate
        return True

    def __len__(self):
        return len(self.certificates)

    def __contains__(self, members) -> bool:
        return frozenset(members) in self.certificates


def conflict_rows(inst: RcInstance, vm: VariableMap, certificate: ConflictCertificate) -> List[Row]:
    """ The conflict row for every inequality index
    """
    positions = [inst.Y.index(y) for y in certificate.members]
    size = len(positions)
    return [make_row({vm.s[y][i]: 1 for y in positions}, SENSE.le, size - 1) for i in range(inst.k)]


def separate_conflicts_integral(inst: RcInstance, vm: VariableMap, s_star: Matrix,
                                pool: ConflictPool = None) -> List[Row]:
    """ Rows cutting off an integral s: for every index i whose set
    F_i = {y : s[y][i] = 1} is not separable, the rows of a minimal
    conflict within F_i. Empty iff s_star describes a relaxation.
    """
    result = []
    seen = set()
    for i in range(inst.k):
        F = [inst.Y[y] for y in range(len(inst.Y)) if s_star[y][i] == 1]
        if len(F) < 2 or frozenset(F) in seen or eps_separable(inst.X, F, inst.eps) is not None:
            continue
        seen.add(frozenset(F))

        certificate = sparsify_conflict(inst.X, F, inst.eps)
        if pool is not None:
            pool.add(certificate)
        __DEBUG__('conflict of size %i at inequality %i' % (len(certificate), i + 1), 3)
        result.extend(conflict_rows(inst, vm, certificate))

    return result


def separate_conflicts_fractional(inst: RcInstance, vm: VariableMap, s_star: Matrix,
                                  pool: ConflictPool = None) -> List[Row]:
    """ Greedy heuristic: for every index i, points are added by
    nonincreasing s[y][i] while the row of the accumulated set can still
    be violated; the first inseparable set gives a conflict, which is
    sparsified (this keeps the row violated).
    """
    result = []
    found = set()
    for i in range(inst.k):
        order = sorted(range(len(inst.Y)), key=lambda y: -s_star[y][i])
        F = []
        slack = Fraction(1)  # sum s - |F| + 1 of the current set; violated if positive
        for y in order:
            if s_star[y][i] <= 0:
                break
            F.append(inst.Y[y])
            slack += s_star[y][i] - 1
            if slack <= 0:
                break
            if len(F) < 2 or eps_separable(inst.X, F, inst.eps) is not None:
                continue

            certificate = sparsify_conflict(inst.X, F, inst.eps)
            if certificate.key not in found:
                found.add(certificate.key)
                if pool is not None:
                    pool.add(certificate)
                result.extend(conflict_rows(inst, vm, certificate))
            break

    return result


class IntegralConflictSeparator(Separator):
    name = 'conflicts'
    mandatory = True

    def __init__(self, inst: RcInstance, vm: VariableMap, pool: ConflictPool):
        self.inst = inst
        self.vm = vm
        self.pool = pool

    def separate(self, ctx: NodeContext) -> List[Cut]:
        rows = separate_conflicts_integral(self.inst, self.vm, self.vm.s_matrix(ctx.x), self.pool)
        return [Cut(row, True) for row in rows]


class FractionalConflictSeparator(IntegralConflictSeparator):
    name = 'conflicts-fractional'
    mandatory = False

    def separate(self, ctx: NodeContext) -> List[Cut]:
        s_star = self.vm.s_matrix(ctx.x)
        if all(v.denominator == 1 for row in s_star for v in row):
            return []
        rows = separate_conflicts_fractional(self.inst, self.vm, s_star, self.pool)
        return [Cut(row, True) for row in rows]

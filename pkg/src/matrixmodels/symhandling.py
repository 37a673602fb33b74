#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Symmetry handling and static strengthening rows of the matrix models.

Any permutation of the inequality indices maps solutions to solutions,
and so does any row permutation of s induced by a coordinate symmetry
of (X, Y).
"""

from typing import List
from typing import Sequence
from typing import Tuple

from src.api.constants import SENSE
from src.api.errors import PreconditionError
from src.mipcore import LexCoverSeparator
from src.mipcore import LexGePropagator
from src.mipcore import MipModel

from .instance import RcInstance
from .variables import VariableMap

__all__ = [
    'add_usage_order',
    'add_simple_symmetry',
    'add_advanced_symmetry',
    'add_redundancy_coupling',
    'column_pairs',
    'symresack_pairs'
]


def add_usage_order(model: MipModel, vm: VariableMap) -> int:
    """ Rows u[i] >= u[i+1]. Returns the number of rows added
    """
    for i in range(vm.k - 1):
        model.add_row({vm.u[i]: 1, vm.u[i + 1]: -1}, SENSE.ge, 0)
    return max(vm.k - 1, 0)


def add_simple_symmetry(model: MipModel, inst: RcInstance, vm: VariableMap, sort_coefficients: bool = True) -> int:
    """ Used inequalities come first and, with sort_coefficients (compact
    model only), are sorted by nonincreasing first coefficient:
        a[i][0] >= a[i+1][0] - 2 (u[i] - u[i+1])
    Returns the number of rows added.
    """
    count = add_usage_order(model, vm)
    if not sort_coefficients or not vm.has_geometry:
        return count

    for i in range(inst.k - 1):
        model.add_row({vm.a[i][0]: 1, vm.a[i + 1][0]: -1, vm.u[i]: 2, vm.u[i + 1]: -2}, SENSE.ge, 0)
        count += 1
    return count


def column_pairs(vm: VariableMap, i: int) -> List[Tuple[int, int]]:
    """ (s[y][i], s[y][i+1]) for y in Y order """
    return list(zip(vm.column(i), vm.column(i + 1)))


def symresack_pairs(vm: VariableMap, phi: Sequence[int]) -> List[Tuple[int, int]]:
    """ Pairs of s and its image under the row permutation phi, in
    row-major order: the image has s[phi[y]][i] at position (y, i).
    """
    return [(vm.s[y][i], vm.s[phi[y]][i]) for y in range(vm.n) for i in range(vm.k)]


def add_advanced_symmetry(model: MipModel, inst: RcInstance, vm: VariableMap, generators: Sequence) -> None:
    """ Columns of s lexicographically nonincreasing (adjacent pairs,
    propagation plus cover cuts), u sorted, and s >=_lex phi(s) for every
    generator phi (given as a Y index permutation or a PointPermutation).
    """
    if len(inst.Y) != vm.n:
        raise PreconditionError('variable map does not match the instance')

    for i in range(vm.k - 1):
        pairs = column_pairs(vm, i)
        model.register_propagator(LexGePropagator(pairs, 'column-lex-%i' % (i + 1)))
        model.register_separator(LexCoverSeparator(pairs, 'column-lex-cover-%i' % (i + 1)))

    add_usage_order(model, vm)

    for n, gen in enumerate(generators):
        phi = getattr(gen, 'phi', gen)
        if len(phi) != vm.n:
            raise PreconditionError('generator %i does not permute Y' % n)
        pairs = symresack_pairs(vm, phi)
        model.register_propagator(LexGePropagator(pairs, 'symresack-%i' % (n + 1)))
        model.register_separator(LexCoverSeparator(pairs, 'symresack-cover-%i' % (n + 1)))


def add_redundancy_coupling(model: MipModel, inst: RcInstance, vm: VariableMap) -> int:
    """ -u[i] <= a[i][j] <= u[i] and b[i] + 2 d rho_X u[i] >= d rho_X, so
    an unused inequality becomes 0 <= d rho_X. Returns the number of rows.
    """
    if not vm.has_geometry:
        raise PreconditionError('redundancy coupling needs the compact model')

    bound = inst.b_bound
    count = 0
    for i in range(inst.k):
        for j in range(inst.dim):
            model.add_row({vm.a[i][j]: 1, vm.u[i]: -1}, SENSE.le, 0)
            model.add_row({vm.a[i][j]: 1, vm.u[i]: 1}, SENSE.ge, 0)
            count += 2
        model.add_row({vm.b[i]: 1, vm.u[i]: 2 * bound}, SENSE.ge, bound)
        count += 1
    return count

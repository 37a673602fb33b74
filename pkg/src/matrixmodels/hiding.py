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

from src.api.constants import SENSE
from src.exactlp import Row
from src.exactlp.program import make_row
from src.geometry import Point
from src.mipcore import Cut
from src.mipcore import NodeContext
from src.mipcore import Separator
from src.separability import hiding_pairs

from .instance import RcInstance
from .variables import VariableMap

__all__ = ['hiding_cut_pool', 'hiding_cut_separator', 'HidingCutSeparator']


def hiding_cut_pool(inst: RcInstance, vm: VariableMap,
                    pairs: Optional[Sequence[Tuple[Point, Point]]] = None) -> List[Row]:
    """ Rows s[y1][i] + s[y2][i] <= 1 for every hiding pair and index i
    """
    if pairs is None:
        pairs = hiding_pairs(inst.X, inst.Y, inst.facets)

    result = []
    for y1, y2 in pairs:
        p1, p2 = inst.Y.index(y1), inst.Y.index(y2)
        for i in range(inst.k):
            result.append(make_row({vm.s[p1][i]: 1, vm.s[p2][i]: 1}, SENSE.le, 1))
    return result


def hiding_cut_separator(pool: Sequence[Row], x: Sequence[Fraction]) -> List[Row]:
    """ Pool rows violated by x
    """
    return [row for row in pool if row.violation(x) > 0]


class HidingCutSeparator(Separator):
    name = 'hiding'
    mandatory = False

    def __init__(self, pool: Sequence[Row]):
        self.pool = list(pool)

    def separate(self, ctx: NodeContext) -> List[Cut]:
        return [Cut(row, True) for row in hiding_cut_separator(self.pool, ctx.x)]

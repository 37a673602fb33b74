#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Pricing: a set of Y with dual weight above 1 that one inequality
cuts off, found with the single inequality version of the compact model
    max sum alpha_y s[y]
    a . x <= b                              x in X
    a . y - b >= eps - M (1 - s[y])
plus the rows of the branching decisions.
"""

from fractions import Fraction

from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.constants import RF
from src.api.constants import SENSE
from src.api.debug import __DEBUG__
from src.geometry import Inequality
from src.geometry import Point
from src.matrixmodels import RcInstance
from src.mipcore import Limits
from src.mipcore import MipModel
from src.mipcore import solve_bnb

from .master import RFDecision

__all__ = ['PricedSet', 'build_pricing_model', 'price']


class PricedSet(NamedTuple):
    members: Tuple[Point, ...]
    witness: Inequality
    weight: Fraction


def build_pricing_model(inst: RcInstance, alpha: Sequence[Fraction], decisions: Sequence[RFDecision] = (),
                        hiding: Sequence[Tuple[Point, Point]] = ()) -> Tuple[MipModel, List[int], int, Dict[int, int]]:
    """ Returns the model and the indices of a, b and s (by Y position).
    Only points with positive dual or taking part in a decision get an
    s variable.
    """
    d = inst.dim
    in_decisions = {y for dec in decisions for y in (dec.y1, dec.y2)}
    positions = [y for y, p in enumerate(inst.Y) if alpha[y] > 0 or p in in_decisions]

    model = MipModel(SENSE.max_, 'pricing')
    a = [model.add_variable(0, -1, 1, False, 'a%i' % (j + 1)) for j in range(d)]
    b = model.add_variable(0, -inst.b_bound, inst.b_bound, False, 'b')
    s = {y: model.add_binary(alpha[y], 's%i' % (y + 1)) for y in positions}

    for x in inst.X:
        row = {a[j]: x[j] for j in range(d)}
        row[b] = -1
        model.add_row(row, SENSE.le, 0)

    for y in positions:
        p = inst.Y[y]
        row = {a[j]: p[j] for j in range(d)}
        row[b] = -1
        row[s[y]] = -inst.M
        model.add_row(row, SENSE.ge, inst.eps - inst.M)

    for dec in decisions:
        v1, v2 = s[inst.Y.index(dec.y1)], s[inst.Y.index(dec.y2)]
        if dec.mode == RF.differ:
            model.add_row({v1: 1, v2: 1}, SENSE.le, 1)
        else:
            model.add_row({v1: 1, v2: -1}, SENSE.eq, 0)

    for y1, y2 in hiding:
        p1, p2 = inst.Y.index(y1), inst.Y.index(y2)
        if p1 in s and p2 in s:
            model.add_row({s[p1]: 1, s[p2]: 1}, SENSE.le, 1)

    # the empty set: a = 0, b = d rho_X
    x0 = [Fraction(0)] * model.num_vars
    x0[b] = inst.b_bound
    model.set_incumbent(x0)
    return model, a, b, s


def price(inst: RcInstance, alpha: Sequence[Fraction], decisions: Sequence[RFDecision] = (),
          hiding: Sequence[Tuple[Point, Point]] = ()) -> Optional[PricedSet]:
    """ A set of largest dual weight compatible with the decisions, if
    that weight exceeds 1. The set is extended by every other point its
    inequality cuts off, except points under a decision.
    """
    if not any(v > 0 for v in alpha):
        return None

    model, a, b, s = build_pricing_model(inst, alpha, decisions, hiding)
    result = solve_bnb(model, Limits(None, None))
    if not result.is_optimal or result.primal_bound <= 1:
        __DEBUG__('pricing: best weight %s' % result.primal_bound, 2)
        return None

    x = result.incumbent
    witness = Inequality(tuple(x[j] for j in a), x[b])
    chosen = {inst.Y[y] for y, var in s.items() if x[var] == 1}

    in_decisions = {y for dec in decisions for y in (dec.y1, dec.y2)}
    chosen.update(y for y in inst.Y if y not in in_decisions and witness.separates(y, inst.eps))
    members = tuple(y for y in inst.Y if y in chosen)
    weight = sum((alpha[inst.Y.index(y)] for y in members), Fraction(0))
    __DEBUG__('pricing: new set of weight %s: %s' % (weight, list(members)), 2)
    return PricedSet(members, witness, weight)

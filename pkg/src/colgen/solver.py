#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import time

from fractions import Fraction

from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence

from src.api.constants import MODEL
from src.api.constants import SENSE
from src.api.constants import STATUS
from src.api.debug import __DEBUG__
from src.api.errors import InternalError
from src.api.utils import ceil_fraction
from src.matrixmodels import EnhancementOptions
from src.matrixmodels import RcInstance
from src.matrixmodels import RcResult
from src.mipcore import Limits
from src.mipcore import MipModel
from src.mipcore import NewColumn
from src.mipcore import NodeContext
from src.mipcore import Pricer
from src.mipcore import PricingResult
from src.mipcore import solve_bnb
from src.separability import hiding_pairs

from .column import Column
from .column import ColumnPool
from .column import initial_columns
from .master import ColgenData
from .master import MasterState
from .master import artificial_cost
from .master import master_values
from .master import path_decisions
from .master import solve_master_lp
from .pricing import price
from .ryanfoster import DecisionPropagator
from .ryanfoster import RyanFosterBranching

__all__ = ['greedy_cover', 'RootBounds', 'root_bounds', 'ColumnPricer', 'build_colgen_model', 'solve_colgen']


def greedy_cover(inst: RcInstance, columns: Sequence[Column]) -> Optional[List[Column]]:
    """ Repeatedly takes the column covering most uncovered points
    (lowest id on ties). None if the columns do not cover Y.
    """
    uncovered = set(inst.Y)
    result = []
    while uncovered:
        best = max(columns, key=lambda c: (len(uncovered & c.key), -c.id), default=None)
        if best is None or not uncovered & best.key:
            return None
        result.append(best)
        uncovered -= best.key
    return result


class RootBounds(NamedTuple):
    dual_bound: int
    lp_value: Fraction
    incumbent: Optional[List[Column]]
    pool: ColumnPool
    lp_count: int
    wall_time: float


def root_bounds(inst: RcInstance, opts: Optional[EnhancementOptions] = None) -> RootBounds:
    """ Column generation on the root master only: ceil of the converged
    LP value, and a greedy cover over the generated columns.
    """
    start = time.monotonic()
    opts = opts or EnhancementOptions()
    pool = initial_columns(inst)
    hiding = hiding_pairs(inst.X, inst.Y, inst.facets) if opts.hiding else []
    state = MasterState(pool)
    lp_count = 0

    if not len(inst.Y):
        return RootBounds(0, Fraction(0), [], pool, 0, time.monotonic() - start)

    while True:
        sol = solve_master_lp(state)
        lp_count += 1
        if not sol.is_optimal:
            raise InternalError('root master LP is %s' % sol.status)
        priced = price(inst, sol.duals, (), hiding)
        if priced is None:
            break
        _, new = pool.add(priced.members, priced.witness)
        if not new:
            raise InternalError('pricing returned a known column %s' % (list(priced.members), ))

    artificials, _ = master_values(state, sol)
    if any(artificials):
        raise InternalError('root master needs artificial variables')

    bound = ceil_fraction(sol.objective_value)
    __DEBUG__('colgen root: %i columns, lp %s' % (len(pool), sol.objective_value), 1)
    return RootBounds(bound, sol.objective_value, greedy_cover(inst, list(pool)), pool, lp_count,
                      time.monotonic() - start)


class ColumnPricer(Pricer):
    """ Prices a column for the node decisions. When no column is found
    and an artificial variable is still positive, the node has no cover.
    """
    name = 'colgen'

    def price(self, ctx: NodeContext) -> PricingResult:
        data: ColgenData = ctx.model.data
        n = data.num_artificials
        alpha = ctx.solution.duals[:n]
        priced = price(data.inst, alpha, path_decisions(ctx.node.path), data.hiding)
        if priced is None:
            return PricingResult([], any(ctx.x[:n]))

        column, new = data.pool.add(priced.members, priced.witness)
        if not new:
            raise InternalError('pricing returned the known column %s' % (column, ))
        return PricingResult([_new_column(data, column)])


def _new_column(data: ColgenData, column: Column) -> NewColumn:
    rows = {data.inst.Y.index(y): 1 for y in column.members}
    return NewColumn(Fraction(1), Fraction(0), None, True, rows, 'z%i' % column.id)


def build_colgen_model(inst: RcInstance, opts: Optional[EnhancementOptions] = None,
                       pool: Optional[ColumnPool] = None) -> MipModel:
    opts = opts or EnhancementOptions()
    pool = pool if pool is not None else initial_columns(inst)
    hiding = hiding_pairs(inst.X, inst.Y, inst.facets) if opts.hiding else []
    data = ColgenData(inst, pool, hiding)

    model = MipModel(SENSE.min_, MODEL.colgen)
    model.objective_integral = True
    model.data = data
    cost = artificial_cost(len(inst.Y))
    for y in range(len(inst.Y)):
        model.add_variable(cost, 0, None, False, 'art%i' % (y + 1))
    for y in range(len(inst.Y)):
        model.add_row({y: 1}, SENSE.ge, 1)
    for column in pool:
        model.add_column(_new_column(data, column))

    model.register_propagator(DecisionPropagator())
    model.register_pricer(ColumnPricer())
    model.register_branching(RyanFosterBranching())

    cover = greedy_cover(inst, list(pool))
    if cover is not None:
        x = [Fraction(0)] * model.num_vars
        for column in cover:
            x[data.var_of(column)] = Fraction(1)
        model.set_incumbent(x)

    return model


def solve_colgen(inst: RcInstance, opts: Optional[EnhancementOptions] = None,
                 limits: Optional[Limits] = None) -> RcResult:
    """ Branch-and-price. The relaxation is made of the witnesses of the
    columns in the best cover.
    """
    if not len(inst.Y):
        return RcResult(MODEL.colgen, STATUS.optimal, 0, 0, [], 0, 0, 0.0, Fraction(0), 0, {'columns': 0})

    model = build_colgen_model(inst, opts)
    data: ColgenData = model.data
    initial = len(data.pool)
    mip = solve_bnb(model, limits)

    relaxation = []
    if mip.incumbent is not None:
        for var, value in enumerate(mip.incumbent):
            column = data.column_of(var)
            if column is not None and value:
                relaxation.append(column.witness)
            elif column is None and value:
                raise InternalError('artificial variable in the final cover')

    stats = {'columns': len(data.pool), 'priced_columns': len(data.pool) - initial}
    return RcResult.from_mip(MODEL.colgen, mip, relaxation, stats)

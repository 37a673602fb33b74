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

from typing import Optional

from src.api import errmsg
from src.api.constants import MODEL
from src.api.constants import STATUS
from src.api.debug import __DEBUG__
from src.colgen import root_bounds
from src.matrixmodels import EnhancementOptions
from src.matrixmodels import RcInstance
from src.matrixmodels import RcResult
from src.matrixmodels import solve_matrix_model
from src.mipcore import Limits

__all__ = ['solve_hybrid']


def _remaining(limits: Limits, spent: float) -> Limits:
    if limits.time is None:
        return limits
    return limits._replace(time=max(limits.time - spent, 0.0))


def solve_hybrid(inst: RcInstance, opts: Optional[EnhancementOptions] = None,
                 limits: Optional[Limits] = None) -> RcResult:
    """ Solves the root LP of the column generation model, then the compact
    model with the row sum u >= ceil(root LP value) and, as starting
    solution, the witnesses of the greedy cover of the generated columns.
    Counts and times are totals of both phases; the column generation
    root counts as one node.
    """
    opts = opts or EnhancementOptions()
    limits = limits or Limits.from_options()
    if not len(inst.Y):
        return RcResult(MODEL.hybrid, STATUS.optimal, 0, 0, [], 0, 0, 0.0, Fraction(0), 0, {})

    root = root_bounds(inst, opts)
    __DEBUG__('hybrid: colgen root bound %i (lp %s) in %.3fs' % (root.dual_bound, root.lp_value, root.wall_time), 1)

    initial = None
    if root.incumbent is not None:
        initial = [column.witness for column in root.incumbent]
        if len(initial) > inst.k:
            errmsg.info('hybrid: the column cover uses %i > k = %i inequalities' % (len(initial), inst.k))
            initial = None

    compact = solve_matrix_model(inst, MODEL.compact, opts, _remaining(limits, root.wall_time),
                                 lower_bound=root.dual_bound, initial=initial)

    dual_bound = compact.dual_bound
    if dual_bound is None or dual_bound < root.dual_bound:
        dual_bound = root.dual_bound

    stats = dict(compact.stats or {})
    stats.update({
        'colgen_lps': root.lp_count,
        'colgen_columns': len(root.pool),
        'colgen_time': root.wall_time,
        'compact_nodes': compact.node_count,
        'compact_lps': compact.lp_count,
        'compact_time': compact.wall_time
    })
    return compact._replace(model=MODEL.hybrid, dual_bound=dual_bound,
                            node_count=compact.node_count + 1,
                            lp_count=compact.lp_count + root.lp_count,
                            wall_time=compact.wall_time + root.wall_time,
                            root_lp_value=root.lp_value, root_bound=root.dual_bound,
                            stats=stats)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Exact LP-based branch-and-bound.

Internally every objective is minimized (values are multiplied by `sign`),
so `bound` always means a lower bound of the internal objective.
"""

import heapq
import time

from fractions import Fraction

from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Set
from typing import Tuple

from src.api import errmsg
from src.api.config import OPTIONS
from src.api.constants import NODESEL
from src.api.constants import SENSE
from src.api.constants import STATUS
from src.api.debug import __DEBUG__
from src.api.errors import InternalError
from src.api.utils import ceil_fraction
from src.exactlp import LpSolution
from src.exactlp import Row
from src.exactlp import solve

from .branching import MostFractionalBranching
from .model import MipModel
from .node import Node
from .plugins import NodeContext

__all__ = ['Limits', 'MipResult', 'BranchAndBound', 'solve_bnb']


class Limits(NamedTuple):
    time: Optional[float] = None
    nodes: Optional[int] = None

    @classmethod
    def from_options(cls) -> 'Limits':
        return cls(OPTIONS.time_limit, OPTIONS.node_limit)


class MipResult(NamedTuple):
    """ Outcome of a solve, bounds in the model objective sense.
    dual_bound is None when no node LP was solved before the limit.
    """
    status: str
    incumbent: Optional[List[Fraction]]
    primal_bound: Optional[Fraction]
    dual_bound: Optional[Fraction]
    node_count: int
    lp_count: int
    wall_time: float
    root_lp_value: Optional[Fraction] = None
    root_bound: Optional[Fraction] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == STATUS.optimal

    @property
    def gap(self) -> Optional[Fraction]:
        if self.primal_bound is None or self.dual_bound is None:
            return None
        return abs(self.primal_bound - self.dual_bound)


class _Limit(Exception):
    pass


class BranchAndBound:
    def __init__(self, model: MipModel, limits: Optional[Limits] = None):
        self.model = model
        self.limits = limits if limits is not None else Limits.from_options()
        self.sign = 1 if model.sense == SENSE.min_ else -1
        self.dfs = OPTIONS.node_selection == NODESEL.dfs
        self.branching = model.branching if model.branching is not None else MostFractionalBranching()

        self.pool: List[Row] = []
        self.pool_keys: Set = set()
        self.open: List[Tuple] = []
        self.incumbent: Optional[List[Fraction]] = None
        self.incumbent_value: Optional[Fraction] = None
        self.node_count = 0
        self.lp_count = 0
        self.next_id = 0
        self.root_lp_value: Optional[Fraction] = None
        self.root_bound: Optional[Fraction] = None
        self.start = 0.0

    # ------------------------------------------------------------------
    # Bounds and pruning
    # ------------------------------------------------------------------
    def rounded(self, bound: Fraction) -> Fraction:
        if self.model.objective_integral:
            return Fraction(ceil_fraction(bound))
        return bound

    def is_dominated(self, bound: Optional[Fraction]) -> bool:
        if bound is None or self.incumbent_value is None:
            return False
        return self.rounded(bound) >= self.incumbent_value

    def is_integral(self, x: List[Fraction]) -> bool:
        return all(v.denominator == 1 for v, is_int in zip(x, self.model.integer) if is_int)

    def update_incumbent(self, x: List[Fraction], origin: str) -> bool:
        value = self.sign * self.model.lp.objective_value(x)
        if self.incumbent_value is not None and value >= self.incumbent_value:
            return False

        __DEBUG__('%s: new incumbent %s (%s)' % (self.model.name, self.sign * value, origin), 2)
        self.incumbent = list(x)
        self.incumbent_value = value
        return True

    def check_preloaded(self, x: List[Fraction]) -> Optional[str]:
        """ Reason for rejecting a preloaded solution, or None
        """
        lp = self.model.lp
        if len(x) != lp.num_vars:
            return 'expected %i values, got %i' % (lp.num_vars, len(x))
        if not lp.is_feasible(x):
            return 'violates bounds or rows'
        if not self.is_integral(x):
            return 'not integral'

        ctx = NodeContext(self.model, None, list(lp.lower), list(lp.upper))
        ctx.solution = LpSolution(STATUS.optimal, list(x), objective_value=lp.objective_value(x))
        for separator in self.model.separators:
            if separator.mandatory and separator.separate(ctx):
                return "rejected by '%s'" % separator.name

        return None

    # ------------------------------------------------------------------
    # Node queue
    # ------------------------------------------------------------------
    def push(self, node: Node):
        if self.dfs:
            key = (-node.depth, node.id)
        else:
            bound = node.parent_bound
            key = (0 if bound is None else 1, bound or 0, -node.depth, node.id)
        heapq.heappush(self.open, key + (node,))

    def new_node(self, **kwargs) -> Node:
        node = Node(self.next_id, **kwargs)
        self.next_id += 1
        return node

    def open_bound(self) -> Optional[Fraction]:
        """ Smallest bound among open nodes (None if some is unbounded below)
        """
        bounds = [entry[-1].parent_bound for entry in self.open]
        if any(b is None for b in bounds):
            return None
        return min(bounds, default=None)

    def check_limits(self):
        if self.limits.nodes is not None and self.node_count >= self.limits.nodes:
            raise _Limit()
        if self.limits.time is not None and time.monotonic() - self.start >= self.limits.time:
            raise _Limit()

    # ------------------------------------------------------------------
    # Node processing
    # ------------------------------------------------------------------
    def node_bounds(self, node: Node) -> Tuple[List[Optional[Fraction]], List[Optional[Fraction]]]:
        lb = list(self.model.lp.lower)
        ub = list(self.model.lp.upper)
        for j, (lo, hi) in node.bounds.items():
            lb[j], ub[j] = lo, hi
        return lb, ub

    def propagate(self, ctx: NodeContext) -> bool:
        """ Runs propagators to a fixpoint (or the round limit).
        Returns False if the node is infeasible.
        """
        lb, ub = ctx.lb, ctx.ub
        for _ in range(OPTIONS.max_prop_rounds):
            changed = False
            for propagator in self.model.propagators:
                result = propagator.propagate(ctx)
                if result.cutoff:
                    __DEBUG__('node %i: cut off by %s' % (ctx.node.id, propagator.name), 2)
                    return False

                for j, v in result.fixings.items():
                    if (lb[j] is not None and v < lb[j]) or (ub[j] is not None and v > ub[j]):
                        return False
                    if lb[j] != v or ub[j] != v:
                        lb[j] = ub[j] = v
                        changed = True
            if not changed:
                break

        return True

    def node_lp(self, ctx: NodeContext, local: List[Row]):
        lp = self.model.lp.copy()
        lp.lower = list(ctx.lb)
        lp.upper = list(ctx.ub)
        lp.rows.extend(self.pool)
        lp.rows.extend(ctx.node.rows)
        lp.rows.extend(local)
        return lp

    def add_cuts(self, cuts, local: List[Row], local_keys: Set) -> int:
        added = 0
        for cut in cuts:
            key = cut.row.key()
            if key in self.pool_keys or key in local_keys:
                continue
            if cut.global_:
                self.pool.append(cut.row)
                self.pool_keys.add(key)
            else:
                local.append(cut.row)
                local_keys.add(key)
            added += 1
        return added

    def solve_node(self, ctx: NodeContext, local: List[Row]) -> Optional[LpSolution]:
        """ Solves the node LP, separating and pricing until neither adds
        anything. Returns None if the node is infeasible or dominated.
        """
        local_keys = {row.key() for row in ctx.node.rows}
        rounds = 0

        while True:
            lp = self.node_lp(ctx, local)
            sol = solve(lp)
            self.lp_count += 1

            if sol.status == STATUS.infeasible:
                return None
            if sol.status == STATUS.unbounded:
                raise InternalError("node %i of '%s' has an unbounded LP" % (ctx.node.id, self.model.name))

            ctx.solution = sol
            value = self.sign * sol.objective_value
            if self.model.pricer is None and self.is_dominated(value):
                return None

            cuts = []
            if self.is_integral(sol.primal):
                for separator in self.model.separators:
                    if separator.mandatory:
                        cuts.extend(separator.separate(ctx))
                if cuts and not self.add_cuts(cuts, local, local_keys):
                    raise InternalError('lazy constraint separation repeated existing rows at node %i' % ctx.node.id)
                if cuts:
                    continue

            if rounds < OPTIONS.max_cut_rounds:
                for separator in self.model.separators:
                    if not separator.mandatory:
                        cuts.extend(separator.separate(ctx))
                if self.add_cuts(cuts, local, local_keys):
                    rounds += 1
                    continue

            if self.model.pricer is not None:
                priced = self.model.pricer.price(ctx)
                if priced.infeasible:
                    return None
                if priced.columns:
                    for column in priced.columns:
                        self.model.add_column(column)
                        ctx.lb.append(column.lb)
                        ctx.ub.append(column.ub)
                    __DEBUG__('node %i: priced %i columns' % (ctx.node.id, len(priced.columns)), 2)
                    continue

            return sol

    def process(self, node: Node):
        self.node_count += 1
        lb, ub = self.node_bounds(node)
        ctx = NodeContext(self.model, node, lb, ub)

        if not self.propagate(ctx):
            return

        local: List[Row] = []
        sol = self.solve_node(ctx, local)
        if sol is None:
            return

        value = self.sign * sol.objective_value
        if node.parent_bound is not None and OPTIONS.check_bounds and value < node.parent_bound:
            raise InternalError('dual bound decreased from %s to %s at node %i' % (node.parent_bound, value, node.id))
        bound = value if node.parent_bound is None else max(value, node.parent_bound)

        if node.id == 0:
            self.root_lp_value = sol.objective_value
            self.root_bound = self.sign * self.rounded(bound)

        __DEBUG__('node %i depth %i: lp %s, bound %s' % (node.id, node.depth, sol.objective_value, bound), 2)
        if self.is_dominated(bound):
            return

        if self.is_integral(sol.primal):
            self.update_incumbent(sol.primal, 'node %i' % node.id)
            return

        children = self.branching.branch(ctx)
        if not children:
            raise InternalError("branching rule '%s' gave no children at node %i" % (self.branching.name, node.id))

        base = self.model.lp
        fixed: Dict[int, Tuple] = {
            j: (lb[j], ub[j]) for j in range(len(lb)) if lb[j] != base.lower[j] or ub[j] != base.upper[j]
        }
        rows = tuple(node.rows) + tuple(local)
        for child in children:
            bounds = dict(fixed)
            bounds.update(child.bounds)
            self.push(self.new_node(depth=node.depth + 1, bounds=bounds, rows=rows + tuple(child.rows),
                                    parent_bound=bound, path=node.path + (child.annotation,),
                                    branched_var=child.branched_var))

    # ------------------------------------------------------------------
    # Driver
    # ------------------------------------------------------------------
    def result(self, status: str) -> MipResult:
        primal = None if self.incumbent_value is None else self.sign * self.incumbent_value
        if status == STATUS.optimal:
            dual = primal
        elif status == STATUS.infeasible:
            dual = None
        else:
            dual = self.open_bound()
            if dual is not None:
                if self.incumbent_value is not None:
                    dual = min(dual, self.incumbent_value)
                dual = self.sign * self.rounded(dual)

        return MipResult(status, self.incumbent, primal, dual, self.node_count, self.lp_count,
                         time.monotonic() - self.start, self.root_lp_value, self.root_bound)

    def run(self) -> MipResult:
        self.start = time.monotonic()
        if self.model.incumbent is not None:
            reason = self.check_preloaded(self.model.incumbent)
            if reason is None:
                self.update_incumbent(self.model.incumbent, 'preloaded')
            else:
                errmsg.warning_incumbent_discarded(reason)

        self.push(self.new_node())
        try:
            while self.open:
                self.check_limits()
                node = heapq.heappop(self.open)[-1]
                if self.is_dominated(node.parent_bound):
                    continue
                self.process(node)
        except _Limit:
            result = self.result(STATUS.limit)
            errmsg.warning_limit_reached(self.model.name, result.primal_bound, result.dual_bound)
            return result

        return self.result(STATUS.optimal if self.incumbent is not None else STATUS.infeasible)


def solve_bnb(model: MipModel, limits: Optional[Limits] = None) -> MipResult:
    """ Solves the model to optimality or until a limit is hit.
    On a limit, the result carries the best primal and dual bounds found.
    """
    return BranchAndBound(model, limits).run()

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Exact bounded-variable primal simplex.

The tableau is kept fraction free (integer pivoting): every entry equals
D * (B^-1 A) where D is the determinant of the current basis, so each pivot
is an exact integer division. Basic values are kept apart as Fractions,
since nonbasic variables may sit at their upper bounds.
"""

from fractions import Fraction

from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence

from src.api.config import OPTIONS
from src.api.constants import PIVOT
from src.api.constants import SENSE
from src.api.constants import STATUS
from src.api.debug import __DEBUG__
from src.api.utils import lcm

from .program import LinearProgram
from .program import LpSolution

__all__ = ['solve', 'verify_farkas', 'check_optimality']

# Kinds of substitution of an original variable into standard columns
SHIFT = 'shift'  # x = lb + x'
NEG = 'neg'      # x = ub - x'
FREE = 'free'    # x = x+ - x-
FIXED = 'fixed'  # x = lb = ub (removed)


class _Column(NamedTuple):
    var: int      # original variable (-1 for slacks and artificials)
    sign: int     # +1 / -1 relation with the original variable
    upper: Optional[Fraction]


class _Tableau:
    """ Standard form min c x, A x = b, 0 <= x <= u, with one unit column
    (slack or artificial) per row as the starting basis.
    """
    def __init__(self, lp: LinearProgram):
        self.lp = lp
        self.obj_sign = 1 if lp.sense == SENSE.min_ else -1
        self.kinds: List[str] = []
        self.base: List[Fraction] = []  # constant part of each original variable
        self.columns: List[_Column] = []
        self.infeasible_bounds = False

        for j in range(lp.num_vars):
            lb, ub = lp.lower[j], lp.upper[j]
            if lb is not None and ub is not None and lb > ub:
                self.infeasible_bounds = True
            if lb is not None and ub is not None and lb == ub:
                self.kinds.append(FIXED)
                self.base.append(lb)
            elif lb is not None:
                self.kinds.append(SHIFT)
                self.base.append(lb)
                self.columns.append(_Column(j, 1, None if ub is None else ub - lb))
            elif ub is not None:
                self.kinds.append(NEG)
                self.base.append(ub)
                self.columns.append(_Column(j, -1, None))
            else:
                self.kinds.append(FREE)
                self.base.append(Fraction(0))
                self.columns.append(_Column(j, 1, None))
                self.columns.append(_Column(j, -1, None))

        self.num_structural = len(self.columns)
        col_of_var = {}
        for k, col in enumerate(self.columns):
            col_of_var.setdefault(col.var, []).append(k)

        # Rows: scale to integers, add slacks, flip to rhs >= 0
        m = len(lp.rows)
        self.row_scale: List[Fraction] = []
        dense_rows = []
        rhs = []
        slack_of_row = [None] * m
        for i, row in enumerate(lp.rows):
            b = row.rhs - sum((c * self.base[j] for j, c in row.coeffs.items()), Fraction(0))
            coeffs = {}
            for j, c in row.coeffs.items():
                for k in col_of_var.get(j, ()):
                    coeffs[k] = c * self.columns[k].sign

            scale = lcm([c.denominator for c in coeffs.values()] + [b.denominator])
            sigma = -1 if b < 0 else 1
            factor = sigma * scale
            dense_rows.append({k: int(c * factor) for k, c in coeffs.items()})
            rhs.append(b * factor)
            self.row_scale.append(Fraction(factor))
            if row.sense != SENSE.eq:
                slack_of_row[i] = sigma if row.sense == SENSE.le else -sigma

        for i in range(m):
            if slack_of_row[i] is not None:
                slack_of_row[i] = (len(self.columns), slack_of_row[i])
                self.columns.append(_Column(-1, 0, None))
        self.num_slacks = len(self.columns) - self.num_structural

        self.unit_col: List[int] = []
        self.artificial = set()
        for i in range(m):
            slack = slack_of_row[i]
            if slack is not None and slack[1] == 1:
                self.unit_col.append(slack[0])
            else:
                self.unit_col.append(len(self.columns))
                self.artificial.add(len(self.columns))
                self.columns.append(_Column(-1, 0, None))

        n = len(self.columns)
        self.upper: List[Optional[Fraction]] = [c.upper for c in self.columns]
        self.rows: List[List[int]] = []
        for i in range(m):
            dense = [0] * n
            for k, c in dense_rows[i].items():
                dense[k] = c
            if slack_of_row[i] is not None:
                dense[slack_of_row[i][0]] = slack_of_row[i][1]
            dense[self.unit_col[i]] = 1
            self.rows.append(dense)

        self.beta: List[Fraction] = [Fraction(v) for v in rhs]
        self.basic: List[int] = list(self.unit_col)
        self.is_basic = [False] * n
        for k in self.basic:
            self.is_basic[k] = True
        self.at_upper = [False] * n
        self.D = 1

        # Phase 2 costs (integer scaled) and phase 1 costs
        costs = [Fraction(0)] * n
        for k in range(self.num_structural):
            col = self.columns[k]
            costs[k] = self.obj_sign * col.sign * lp.objective[col.var]
        self.cost_scale = lcm(c.denominator for c in costs if c)
        self.obj2 = [int(c * self.cost_scale) for c in costs]
        self.obj1 = [1 if k in self.artificial else 0 for k in range(n)]
        for r, k in enumerate(self.basic):
            if k in self.artificial:
                self.obj1 = [a - b for a, b in zip(self.obj1, self.rows[r])]

        self.pivots = 0

    # ------------------------------------------------------------------
    def value_of(self, k: int) -> Fraction:
        if self.at_upper[k]:
            return self.upper[k]
        return Fraction(0)

    def pivot(self, p: int, q: int):
        prow = self.rows[p]
        piv = prow[q]
        D = self.D

        def update(row):
            f = row[q]
            if f == 0:
                if piv == D:
                    return row
                return [x * piv // D for x in row]
            return [(piv * x - f * y) // D for x, y in zip(row, prow)]

        for r in range(len(self.rows)):
            if r != p:
                self.rows[r] = update(self.rows[r])
        self.obj1 = update(self.obj1)
        self.obj2 = update(self.obj2)

        self.D = piv
        self.is_basic[self.basic[p]] = False
        self.basic[p] = q
        self.is_basic[q] = True
        self.pivots += 1

    def iterate(self, obj: str, rule: str, switch: int) -> Optional[int]:
        """ Runs primal simplex iterations on the given objective row
        ('obj1' or 'obj2'). Returns None on optimality or the entering
        column proving unboundedness.
        """
        degenerate = 0
        while True:
            objrow = getattr(self, obj)
            sign_D = 1 if self.D > 0 else -1
            entering = None
            best = 0
            for k, dk in enumerate(objrow):
                if self.is_basic[k] or dk == 0:
                    continue
                if self.upper[k] is not None and self.upper[k] == 0:
                    continue
                d = dk * sign_D
                if (d < 0 and not self.at_upper[k]) or (d > 0 and self.at_upper[k]):
                    if rule == PIVOT.bland:
                        entering = k
                        break
                    if abs(d) > best:
                        best = abs(d)
                        entering = k

            if entering is None:
                return None

            q = entering
            delta = -1 if self.at_upper[q] else 1
            t_best = self.upper[q]
            leave_row = None
            leave_key = q
            leave_upper = False
            rates = {}
            for r, row in enumerate(self.rows):
                alpha = row[q]
                if alpha == 0:
                    continue
                g = Fraction(-delta * alpha, self.D)
                rates[r] = g
                k = self.basic[r]
                if g < 0:
                    lim = self.beta[r] / -g
                    hits_upper = False
                elif self.upper[k] is not None:
                    lim = (self.upper[k] - self.beta[r]) / g
                    hits_upper = True
                else:
                    continue
                if t_best is None or lim < t_best or (lim == t_best and k < leave_key):
                    t_best = lim
                    leave_row = r
                    leave_key = k
                    leave_upper = hits_upper

            if t_best is None:
                return q

            for r, g in rates.items():
                self.beta[r] += g * t_best

            if leave_row is None:
                self.at_upper[q] = not self.at_upper[q]
            else:
                entering_value = self.value_of(q) + delta * t_best
                leaving = self.basic[leave_row]
                self.pivot(leave_row, q)
                self.at_upper[q] = False
                self.at_upper[leaving] = leave_upper
                self.beta[leave_row] = entering_value

            if t_best == 0:
                degenerate += 1
                if degenerate > switch and rule != PIVOT.bland:
                    __DEBUG__('%i degenerate pivots: switching to Bland rule' % degenerate, 3)
                    rule = PIVOT.bland
            else:
                degenerate = 0

    def drive_out_artificials(self):
        for r in range(len(self.rows)):
            if self.basic[r] not in self.artificial:
                continue
            row = self.rows[r]
            for k in range(len(self.columns)):
                if k in self.artificial or self.is_basic[k] or row[k] == 0:
                    continue
                value = self.value_of(k)
                self.pivot(r, k)
                self.at_upper[k] = False
                self.beta[r] = value
                break

        for k in self.artificial:
            self.upper[k] = Fraction(0)

    def std_values(self) -> List[Fraction]:
        values = [self.value_of(k) for k in range(len(self.columns))]
        for r, k in enumerate(self.basic):
            values[k] = self.beta[r]
        return values

    def original_values(self, std: Sequence[Fraction], homogeneous=False) -> List[Fraction]:
        x = [Fraction(0) if homogeneous else b for b in self.base]
        for k in range(self.num_structural):
            col = self.columns[k]
            if self.kinds[col.var] == NEG:
                x[col.var] -= std[k]
            else:
                x[col.var] += col.sign * std[k]
        return x

    def row_multipliers(self, objrow, costs_of_units, scale) -> List[Fraction]:
        """ c_B B^-1, read from the reduced costs of the unit columns,
        mapped back to the original (unscaled, unflipped) rows.
        """
        result = []
        for i, k in enumerate(self.unit_col):
            w = costs_of_units[i] - Fraction(objrow[k], self.D)
            result.append(w * self.row_scale[i] / scale)
        return result


def _reduced_costs(lp: LinearProgram, duals: Sequence[Fraction]) -> List[Fraction]:
    result = list(lp.objective)
    for y, row in zip(duals, lp.rows):
        if not y:
            continue
        for j, c in row.coeffs.items():
            result[j] -= y * c
    return result


def solve(lp: LinearProgram, pivot_rule: Optional[str] = None, degenerate_switch: Optional[int] = None) -> LpSolution:
    """ Solves the LP exactly. Returns an LpSolution whose status is
    optimal, infeasible (with a Farkas certificate in duals) or
    unbounded (with an improving ray).
    """
    if pivot_rule is None:
        pivot_rule = OPTIONS.pivot_rule
    if degenerate_switch is None:
        degenerate_switch = OPTIONS.degenerate_switch

    tab = _Tableau(lp)
    if tab.infeasible_bounds:
        return LpSolution(STATUS.infeasible, duals=[Fraction(0)] * len(lp.rows))

    # Phase 1
    if tab.artificial:
        tab.iterate('obj1', pivot_rule, degenerate_switch)
        infeasibility = sum((tab.beta[r] for r, k in enumerate(tab.basic) if k in tab.artificial), Fraction(0))
        if infeasibility > 0:
            units = [Fraction(1) if k in tab.artificial else Fraction(0) for k in tab.unit_col]
            farkas = tab.row_multipliers(tab.obj1, units, 1)
            __DEBUG__('LP infeasible after %i pivots' % tab.pivots, 3)
            return LpSolution(STATUS.infeasible, duals=farkas, pivots=tab.pivots)
        tab.drive_out_artificials()

    # Phase 2
    entering = tab.iterate('obj2', pivot_rule, degenerate_switch)
    std = tab.std_values()
    primal = tab.original_values(std)

    if entering is not None:
        direction = [Fraction(0)] * len(tab.columns)
        delta = -1 if tab.at_upper[entering] else 1
        direction[entering] = Fraction(delta)
        for r, row in enumerate(tab.rows):
            if row[entering]:
                direction[tab.basic[r]] = Fraction(-delta * row[entering], tab.D)
        ray = tab.original_values(direction, homogeneous=True)
        __DEBUG__('LP unbounded after %i pivots' % tab.pivots, 3)
        return LpSolution(STATUS.unbounded, primal=primal, ray=ray, pivots=tab.pivots)

    zeros = [Fraction(0)] * len(tab.unit_col)
    duals = [tab.obj_sign * y for y in tab.row_multipliers(tab.obj2, zeros, tab.cost_scale)]
    __DEBUG__('LP optimal after %i pivots' % tab.pivots, 3)
    return LpSolution(STATUS.optimal,
                      primal=primal,
                      duals=duals,
                      objective_value=lp.objective_value(primal),
                      reduced_costs=_reduced_costs(lp, duals),
                      pivots=tab.pivots)


def verify_farkas(lp: LinearProgram, y: Sequence[Fraction]) -> bool:
    """ Checks that y certifies infeasibility of the rows within the
    variable box: y has the right sign per row (<= rows nonpositive,
    >= rows nonnegative) and max over the box of y^T A x < y^T b.
    """
    if len(y) != len(lp.rows):
        return False

    for yi, row in zip(y, lp.rows):
        if row.sense == SENSE.le and yi > 0:
            return False
        if row.sense == SENSE.ge and yi < 0:
            return False

    g = [Fraction(0)] * lp.num_vars
    rhs = Fraction(0)
    for yi, row in zip(y, lp.rows):
        if not yi:
            continue
        rhs += yi * row.rhs
        for j, c in row.coeffs.items():
            g[j] += yi * c

    best = Fraction(0)
    for j, gj in enumerate(g):
        if gj > 0:
            if lp.upper[j] is None:
                return False
            best += gj * lp.upper[j]
        elif gj < 0:
            if lp.lower[j] is None:
                return False
            best += gj * lp.lower[j]

    return best < rhs


def check_optimality(lp: LinearProgram, sol: LpSolution) -> bool:
    """ Exact optimality audit: primal feasibility, dual sign feasibility,
    complementary slackness, and equal primal and dual objectives.
    """
    if not sol.is_optimal or not lp.is_feasible(sol.primal):
        return False

    sense = 1 if lp.sense == SENSE.min_ else -1
    for y, row in zip(sol.duals, lp.rows):
        s = sense * y
        if row.sense == SENSE.le and s > 0:
            return False
        if row.sense == SENSE.ge and s < 0:
            return False
        if s and row.activity(sol.primal) != row.rhs:
            return False

    for j, d in enumerate(sol.reduced_costs):
        s = sense * d
        if s > 0 and sol.primal[j] != lp.lower[j]:
            return False
        if s < 0 and sol.primal[j] != lp.upper[j]:
            return False

    return sol.dual_objective(lp) == sol.objective_value

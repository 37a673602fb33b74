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

from typing import Dict
from typing import List
from typing import Mapping
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Union

from src.api.constants import SENSE
from src.api.constants import STATUS
from src.api.errors import PreconditionError

__all__ = ['Row', 'LinearProgram', 'LpSolution', 'Coeffs']

Coeffs = Union[Mapping[int, Fraction], Sequence[Fraction]]


class Row(NamedTuple):
    """ A linear row: sum(coeffs[j] * x[j]) <sense> rhs.
    Coefficients are stored sparse (only nonzeros).
    """
    coeffs: Dict[int, Fraction]
    sense: str
    rhs: Fraction

    def activity(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * x[j] for j, c in self.coeffs.items()), Fraction(0))

    def is_satisfied(self, x: Sequence[Fraction]) -> bool:
        value = self.activity(x)
        if self.sense == SENSE.le:
            return value <= self.rhs
        if self.sense == SENSE.ge:
            return value >= self.rhs
        return value == self.rhs

    def violation(self, x: Sequence[Fraction]) -> Fraction:
        """ Amount by which x violates the row (0 if satisfied)
        """
        value = self.activity(x)
        if self.sense == SENSE.le:
            return max(Fraction(0), value - self.rhs)
        if self.sense == SENSE.ge:
            return max(Fraction(0), self.rhs - value)
        return abs(value - self.rhs)

    def key(self):
        """ Hashable identity of the row, used to deduplicate cut pools
        """
        return tuple(sorted(self.coeffs.items())), self.sense, self.rhs


def make_row(coeffs: Coeffs, sense: str, rhs) -> Row:
    if sense not in SENSE.relations:
        raise PreconditionError("invalid row relation '%s'" % sense)

    if isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        items = enumerate(coeffs)

    sparse = {j: Fraction(c) for j, c in items if c}
    return Row(sparse, sense, Fraction(rhs))


class LinearProgram:
    """ A linear program over num_vars variables with per-variable bounds
    (None means infinite), a list of rows, and an objective sense.
    """
    def __init__(self, sense: str = SENSE.min_):
        if sense not in SENSE.objectives:
            raise PreconditionError("invalid objective sense '%s'" % sense)

        self.sense = sense
        self.objective: List[Fraction] = []
        self.lower: List[Optional[Fraction]] = []
        self.upper: List[Optional[Fraction]] = []
        self.names: List[str] = []
        self.rows: List[Row] = []

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def add_variable(self, obj=0, lb=0, ub=None, name: Optional[str] = None) -> int:
        self.objective.append(Fraction(obj))
        self.lower.append(None if lb is None else Fraction(lb))
        self.upper.append(None if ub is None else Fraction(ub))
        self.names.append(name if name is not None else 'x%i' % len(self.names))
        return len(self.objective) - 1

    def add_row(self, coeffs: Coeffs, sense: str, rhs) -> int:
        row = make_row(coeffs, sense, rhs)
        for j in row.coeffs:
            if not 0 <= j < self.num_vars:
                raise PreconditionError('row refers to undefined variable %i' % j)
        self.rows.append(row)
        return len(self.rows) - 1

    def copy(self) -> 'LinearProgram':
        result = LinearProgram(self.sense)
        result.objective = list(self.objective)
        result.lower = list(self.lower)
        result.upper = list(self.upper)
        result.names = list(self.names)
        result.rows = list(self.rows)
        return result

    def objective_value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), Fraction(0))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        """ Exact primal feasibility check (bounds and rows)
        """
        if len(x) != self.num_vars:
            return False

        for v, lb, ub in zip(x, self.lower, self.upper):
            if lb is not None and v < lb:
                return False
            if ub is not None and v > ub:
                return False

        return all(row.is_satisfied(x) for row in self.rows)

    def __repr__(self):
        return '<LinearProgram %s: %i vars, %i rows>' % (self.sense, self.num_vars, len(self.rows))


class LpSolution:
    """ Result of an exact LP solve.

    duals follow the convention obj = A^T duals + reduced_costs, so
    objective_value = duals . rhs + sum(reduced_costs[j] * x[j]) with
    nonzero reduced costs only at variable bounds. On infeasibility
    duals hold a Farkas certificate (see verify_farkas); on
    unboundedness `ray` holds an improving direction.
    """
    def __init__(self, status: str,
                 primal: Optional[List[Fraction]] = None,
                 duals: Optional[List[Fraction]] = None,
                 objective_value: Optional[Fraction] = None,
                 reduced_costs: Optional[List[Fraction]] = None,
                 ray: Optional[List[Fraction]] = None,
                 pivots: int = 0):
        assert status in STATUS.lp_statuses
        self.status = status
        self.primal = primal or []
        self.duals = duals or []
        self.objective_value = objective_value
        self.reduced_costs = reduced_costs or []
        self.ray = ray
        self.pivots = pivots

    @property
    def is_optimal(self) -> bool:
        return self.status == STATUS.optimal

    def dual_objective(self, lp: LinearProgram) -> Optional[Fraction]:
        """ Objective of the dual solution: duals . rhs plus the bound terms
        of the reduced costs. None if the reduced costs point to an
        infinite bound (dual infeasible).
        """
        if not self.is_optimal:
            return None

        result = sum((y * row.rhs for y, row in zip(self.duals, lp.rows)), Fraction(0))
        at_lower = 1 if lp.sense == SENSE.min_ else -1
        for j, d in enumerate(self.reduced_costs):
            if not d:
                continue
            bound = lp.lower[j] if d * at_lower > 0 else lp.upper[j]
            if bound is None:
                return None
            result += d * bound

        return result

    def __repr__(self):
        return '<LpSolution %s obj=%s pivots=%i>' % (self.status, self.objective_value, self.pivots)

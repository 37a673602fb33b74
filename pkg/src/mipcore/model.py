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

from typing import Any
from typing import List
from typing import Optional
from typing import Sequence

from src.api.constants import SENSE
from src.api.errors import PreconditionError
from src.exactlp import LinearProgram
from src.exactlp.program import Coeffs

from .errors import PluginRegistrationError
from .plugins import BranchingRule
from .plugins import NewColumn
from .plugins import Pricer
from .plugins import Propagator
from .plugins import Separator

__all__ = [
    'MipModel',
    'register_propagator',
    'register_separator',
    'register_pricer',
    'register_branching'
]


class MipModel:
    """ A mixed-binary program: an LP, integrality flags and plugins.
    `data` is free for the model builder (variable maps, instance).
    """
    def __init__(self, sense: str = SENSE.min_, name: str = 'model'):
        self.name = name
        self.lp = LinearProgram(sense)
        self.integer: List[bool] = []
        self.propagators: List[Propagator] = []
        self.separators: List[Separator] = []
        self.pricer: Optional[Pricer] = None
        self.branching: Optional[BranchingRule] = None
        self.incumbent: Optional[List[Fraction]] = None
        self.objective_integral = False
        self.data: Any = None

    @property
    def sense(self) -> str:
        return self.lp.sense

    @property
    def num_vars(self) -> int:
        return self.lp.num_vars

    def add_variable(self, obj=0, lb=0, ub=None, integer=False, name: Optional[str] = None) -> int:
        """ Integer variables are binary, or nonnegative with no upper bound
        when the rows imply x <= 1 at optimality (set covering columns).
        """
        if integer and (lb is None or lb < 0 or (ub is not None and ub > 1)):
            raise PreconditionError('integer variables must be binary')
        self.integer.append(integer)
        return self.lp.add_variable(obj, lb, ub, name)

    def add_binary(self, obj=0, name: Optional[str] = None) -> int:
        return self.add_variable(obj, 0, 1, True, name)

    def add_row(self, coeffs: Coeffs, sense: str, rhs) -> int:
        return self.lp.add_row(coeffs, sense, rhs)

    def add_column(self, column: NewColumn) -> int:
        """ Adds a variable with its coefficients in existing rows
        """
        j = self.add_variable(column.obj, column.lb, column.ub, column.integer, column.name)
        for i, c in column.coeffs.items():
            row = self.lp.rows[i]
            coeffs = dict(row.coeffs)
            coeffs[j] = Fraction(c)
            self.lp.rows[i] = row._replace(coeffs=coeffs)
        return j

    def set_incumbent(self, x: Optional[Sequence]):
        self.incumbent = None if x is None else [Fraction(v) for v in x]

    def register_propagator(self, plugin: Propagator):
        self.propagators.append(plugin)

    def register_separator(self, plugin: Separator):
        self.separators.append(plugin)

    def register_pricer(self, plugin: Pricer):
        if self.pricer is not None:
            raise PluginRegistrationError("a pricer is already registered ('%s')" % self.pricer.name)
        self.pricer = plugin

    def register_branching(self, plugin: BranchingRule):
        self.branching = plugin

    def __repr__(self):
        return '<MipModel %s: %i vars (%i binary), %i rows>' % (
            self.name, self.num_vars, sum(self.integer), len(self.lp.rows))


def register_propagator(model: MipModel, plugin: Propagator):
    model.register_propagator(plugin)


def register_separator(model: MipModel, plugin: Separator):
    model.register_separator(plugin)


def register_pricer(model: MipModel, plugin: Pricer):
    model.register_pricer(plugin)


def register_branching(model: MipModel, plugin: BranchingRule):
    model.register_branching(plugin)

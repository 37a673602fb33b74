#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Plugin contracts of the branch-and-bound engine.

At every node the engine calls, in this order: propagators (to a
fixpoint), the LP, separators, the pricer, and the branching rule.
Each plugin receives a NodeContext.
"""

from fractions import Fraction

from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from src.exactlp import LpSolution
from src.exactlp import Row

__all__ = [
    'PropagationResult',
    'Cut',
    'NewColumn',
    'PricingResult',
    'Child',
    'NodeContext',
    'Propagator',
    'Separator',
    'Pricer',
    'BranchingRule'
]


class PropagationResult(NamedTuple):
    fixings: Dict[int, Fraction]
    cutoff: bool = False

    @classmethod
    def nothing(cls) -> 'PropagationResult':
        return cls({}, False)

    @classmethod
    def prune(cls) -> 'PropagationResult':
        return cls({}, True)


class Cut(NamedTuple):
    """ A row added by a separator. Globally valid rows join the
    engine pool; others live in the subtree of the node.
    """
    row: Row
    global_: bool = True


class NewColumn(NamedTuple):
    """ A variable added by a pricer, with its coefficients
    in the rows of the base model.
    """
    obj: Fraction
    lb: Fraction
    ub: Optional[Fraction]
    integer: bool
    coeffs: Dict[int, Fraction]
    name: Optional[str] = None


class PricingResult(NamedTuple):
    columns: List[NewColumn]
    infeasible: bool = False


class Child(NamedTuple):
    """ A child node: bound changes, extra local rows, and an annotation
    describing the branching decision.
    """
    bounds: Dict[int, Tuple[Fraction, Fraction]]
    rows: List[Row]
    annotation: Any = None
    branched_var: Optional[int] = None


class NodeContext:
    """ What a plugin sees of the node being processed.
    lb/ub are the node bounds (propagators may tighten them through
    their results), solution is the last LP solution, if any.
    """
    def __init__(self, model, node, lb: List[Fraction], ub: List[Fraction]):
        self.model = model
        self.node = node
        self.lb = lb
        self.ub = ub
        self.solution: Optional[LpSolution] = None

    @property
    def x(self) -> List[Fraction]:
        return self.solution.primal if self.solution is not None else []


class Propagator:
    name = 'propagator'

    def propagate(self, ctx: NodeContext) -> PropagationResult:
        raise NotImplementedError


class Separator:
    """ mandatory separators are called on LP solutions that are integral
    and act as lazy constraints: an integral solution is accepted only if
    they return nothing. The others are called on every LP solution, for
    a limited number of rounds.
    """
    name = 'separator'
    mandatory = False

    def separate(self, ctx: NodeContext) -> List[Cut]:
        raise NotImplementedError


class Pricer:
    name = 'pricer'

    def price(self, ctx: NodeContext) -> PricingResult:
        raise NotImplementedError


class BranchingRule:
    name = 'branching'

    def branch(self, ctx: NodeContext) -> List[Child]:
        raise NotImplementedError

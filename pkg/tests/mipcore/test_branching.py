#!/usr/bin/env python
# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from src.api.constants import STATUS
from src.api.errors import PreconditionError
from src.exactlp import LpSolution
from src.mipcore import Node
from src.mipcore import branch_most_fractional


def decide(primal, integer):
    n = len(primal)
    sol = LpSolution(STATUS.optimal, [Fraction(v) for v in primal])
    return branch_most_fractional(Node(0), sol, integer, [Fraction(0)] * n, [Fraction(1)] * n)


def test_most_fractional_variable():
    decision = decide([1, Fraction(1, 2), Fraction(1, 3)], [True] * 3)
    assert decision.var == 1
    assert decision.value == Fraction(1, 2)
    down, up = decision.children
    assert down.bounds == {1: (0, 0)}
    assert up.bounds == {1: (1, 1)}
    assert down.annotation == ('down', 1)
    assert up.annotation == ('up', 1)
    assert down.branched_var == up.branched_var == 1


def test_continuous_variables_are_skipped():
    decision = decide([0, Fraction(1, 2), Fraction(1, 3)], [True, False, True])
    assert decision.var == 2


def test_ties_take_the_lowest_index():
    decision = decide([Fraction(1, 4), Fraction(3, 4)], [True, True])
    assert decision.var == 0


def test_integral_solution():
    with pytest.raises(PreconditionError):
        decide([0, 1], [True, True])


def test_node_annotation():
    node = Node(3, depth=2, path=(('down', 0), ('up', 4)))
    assert node.annotation == ('up', 4)
    assert Node(0).annotation is None

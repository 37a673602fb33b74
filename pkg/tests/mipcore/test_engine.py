#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from fractions import Fraction
from io import StringIO

from src.api import config
from src.api import global_
from src.api.constants import NODESEL
from src.api.constants import SENSE
from src.api.constants import STATUS
from src.mipcore import Cut
from src.mipcore import LexGePropagator
from src.mipcore import Limits
from src.mipcore import MipModel
from src.mipcore import Separator
from src.mipcore import solve_bnb
from src.exactlp.program import make_row


def triangle_cover() -> MipModel:
    """ min x0 + x1 + x2 covering the three edges of a triangle.
    The LP optimum is (1/2, 1/2, 1/2).
    """
    model = MipModel(SENSE.min_, 'triangle')
    x = [model.add_binary(1) for _ in range(3)]
    for i, j in ((0, 1), (1, 2), (0, 2)):
        model.add_row({x[i]: 1, x[j]: 1}, SENSE.ge, 1)
    model.objective_integral = True
    return model


def knapsack() -> MipModel:
    model = MipModel(SENSE.max_, 'knapsack')
    x = [model.add_binary(c) for c in (5, 4, 3)]
    model.add_row({x[0]: 2, x[1]: 3, x[2]: 1}, SENSE.le, 5)
    model.add_row({x[0]: 4, x[1]: 1, x[2]: 2}, SENSE.le, 11)
    model.add_row({x[0]: 3, x[1]: 4, x[2]: 2}, SENSE.le, 8)
    return model


class AtMostOne(Separator):
    """ Lazy x0 + x2 <= 1 """
    name = 'at-most-one'
    mandatory = True

    def separate(self, ctx):
        if ctx.x[0] + ctx.x[2] > 1:
            return [Cut(make_row({0: 1, 2: 1}, SENSE.le, 1))]
        return []


class TestEngine(unittest.TestCase):
    def setUp(self):
        config.init()
        global_.reset()
        config.OPTIONS.stderr = StringIO()

    def tearDown(self):
        config.init()
        global_.reset()

    def test_covering(self):
        result = solve_bnb(triangle_cover(), Limits())
        self.assertEqual(result.status, STATUS.optimal)
        self.assertTrue(result.is_optimal)
        self.assertEqual(result.primal_bound, 2)
        self.assertEqual(result.dual_bound, 2)
        self.assertEqual(result.gap, 0)
        self.assertEqual(result.root_lp_value, Fraction(3, 2))
        self.assertEqual(result.root_bound, 2)
        self.assertEqual(sum(result.incumbent), 2)
        self.assertGreater(result.node_count, 1)

    def test_maximization(self):
        result = solve_bnb(knapsack(), Limits())
        self.assertEqual(result.status, STATUS.optimal)
        self.assertEqual(result.primal_bound, 9)
        self.assertEqual(result.incumbent, [1, 1, 0])

    def test_depth_first(self):
        config.OPTIONS.node_selection = NODESEL.dfs
        self.assertEqual(solve_bnb(knapsack(), Limits()).primal_bound, 9)
        self.assertEqual(solve_bnb(triangle_cover(), Limits()).primal_bound, 2)

    def test_infeasible(self):
        model = MipModel(SENSE.min_, 'empty')
        x = model.add_binary(1)
        model.add_row({x: 1}, SENSE.ge, 2)
        result = solve_bnb(model, Limits())
        self.assertEqual(result.status, STATUS.infeasible)
        self.assertIsNone(result.primal_bound)
        self.assertIsNone(result.incumbent)

    def test_node_limit(self):
        result = solve_bnb(triangle_cover(), Limits(nodes=1))
        self.assertEqual(result.status, STATUS.limit)
        self.assertEqual(result.node_count, 1)
        self.assertIsNone(result.primal_bound)
        self.assertEqual(result.dual_bound, 2)
        self.assertIn('limit reached', config.OPTIONS.stderr.getvalue())

    def test_preloaded_incumbent(self):
        model = triangle_cover()
        model.set_incumbent([1, 1, 0])
        result = solve_bnb(model, Limits(nodes=1))
        self.assertEqual(result.primal_bound, 2)
        self.assertEqual(result.dual_bound, 2)

    def test_invalid_incumbent_is_discarded(self):
        model = knapsack()
        model.set_incumbent([1, 1, 1])
        result = solve_bnb(model, Limits())
        self.assertEqual(result.primal_bound, 9)
        self.assertIn('Initial solution discarded', config.OPTIONS.stderr.getvalue())

    def test_propagator(self):
        model = triangle_cover()
        model.register_propagator(LexGePropagator([(0, 1)]))
        result = solve_bnb(model, Limits())
        self.assertEqual(result.primal_bound, 2)
        self.assertEqual(result.incumbent[0], 1)

    def test_lazy_separator(self):
        model = knapsack()
        model.register_separator(AtMostOne())
        result = solve_bnb(model, Limits())
        self.assertEqual(result.primal_bound, 9)
        model = triangle_cover()
        model.register_separator(AtMostOne())
        result = solve_bnb(model, Limits())
        self.assertEqual(result.primal_bound, 2)
        self.assertNotEqual(result.incumbent, [1, 0, 1])

#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from fractions import Fraction
from io import StringIO

import pytest

from src.api import config
from src.api import global_
from src.api.constants import MODEL
from src.api.constants import RF
from src.api.constants import STATUS
from src.api.errors import InternalError
from src.api.errors import PreconditionError
from src.colgen import Column
from src.colgen import ColumnPool
from src.colgen import MasterState
from src.colgen import RFDecision
from src.colgen import apply_branching
from src.colgen import greedy_cover
from src.colgen import initial_columns
from src.colgen import root_bounds
from src.colgen import ryan_foster_select
from src.colgen import solve_colgen
from src.colgen import solve_master_lp
from src.colgen import theta
from src.geometry import Inequality
from src.geometry import PointSet
from src.geometry import l1_neighborhood
from src.matrixmodels import EnhancementOptions
from src.matrixmodels import make_instance
from src.matrixmodels import verify_relaxation
from src.mipcore import Limits
from src.separability import max_hiding_set_bruteforce
from src.separability import rc_bruteforce

A, B, C = (0, ), (1, ), (2, )


def point_instance():
    return make_instance(PointSet([(0, )]), PointSet([(-1, ), (1, )]))


def square_instance():
    """ X = {0, 1}^2, Y = the 12 points at l-infinity distance 1 """
    X = PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])
    Y = PointSet([(a, b) for a in range(-1, 3) for b in range(-1, 3) if (a, b) not in X])
    return make_instance(X, Y)


def column(members, id_):
    return Column(tuple(members), Inequality.make([0], 0), id_)


def test_theta():
    assert theta(Fraction(3, 10)) == Fraction(1, 5)
    assert theta(Fraction(9, 10)) == Fraction(2, 5)
    assert theta(Fraction(1, 2)) == 0


def test_decision():
    with pytest.raises(PreconditionError):
        RFDecision.make(A, A, RF.differ)
    with pytest.raises(PreconditionError):
        RFDecision.make(A, B, 'sometimes')

    differ = RFDecision.make(A, B, RF.differ)
    assert differ.allows([A, C])
    assert not differ.allows([A, B])
    together = RFDecision.make(A, B, RF.together)
    assert together.allows([A, B, C])
    assert together.allows([C])
    assert not together.allows([B])


def test_ryan_foster_select():
    half = Fraction(1, 2)
    z = [(column([A, B], 0), half), (column([B, C], 1), half), (column([A, C], 2), half)]
    differ, together = ryan_foster_select(z)
    assert (differ.y1, differ.y2, differ.mode) == (B, A, RF.differ)
    assert (together.y1, together.y2, together.mode) == (B, A, RF.together)


def test_ryan_foster_needs_a_pair():
    with pytest.raises(InternalError):
        ryan_foster_select([(column([A, B], 0), Fraction(1, 2)), (column([C], 1), Fraction(1))])


class TestColumns(unittest.TestCase):
    def setUp(self):
        config.init()
        global_.reset()
        config.OPTIONS.stderr = StringIO()

    def tearDown(self):
        config.init()
        global_.reset()

    def test_initial_columns(self):
        inst = point_instance()
        pool = initial_columns(inst)
        self.assertEqual(len(pool), 2)
        self.assertEqual(sorted(c.members for c in pool), [((-1, ), ), ((1, ), )])
        self.assertEqual([c.id for c in pool], [0, 1])

    def test_pool_deduplicates(self):
        pool = ColumnPool(point_instance())
        first, new = pool.add([(1, )])
        self.assertTrue(new)
        again, new = pool.add([(1, )])
        self.assertFalse(new)
        self.assertIs(first, again)
        self.assertIs(pool.find([(1, )]), first)
        self.assertEqual(pool.covering((1, )), [first])
        self.assertRaises(InternalError, pool.add, [(-1, ), (1, )])

    def test_greedy_cover(self):
        inst = point_instance()
        pool = initial_columns(inst)
        self.assertEqual(len(greedy_cover(inst, list(pool))), 2)
        self.assertIsNone(greedy_cover(inst, [pool[0]]))

    def test_master(self):
        pool = initial_columns(point_instance())
        state = MasterState(pool)
        sol = solve_master_lp(state)
        self.assertTrue(sol.is_optimal)
        self.assertEqual(sol.objective_value, 2)

        y1, y2 = (-1, ), (1, )
        state = apply_branching(state, RFDecision.make(y1, y2, RF.together))
        self.assertEqual(state.enabled, [])
        self.assertEqual(sorted(state.disabled), [0, 1])

    def test_root_bounds(self):
        root = root_bounds(point_instance())
        self.assertEqual(root.dual_bound, 2)
        self.assertEqual(root.lp_value, 2)
        self.assertEqual(len(root.incumbent), 2)
        self.assertGreaterEqual(root.lp_count, 1)


class TestSolveColgen(unittest.TestCase):
    def setUp(self):
        config.init()
        global_.reset()
        config.OPTIONS.stderr = StringIO()

    def tearDown(self):
        config.init()
        global_.reset()

    def check(self, inst, result, value):
        self.assertEqual(result.model, MODEL.colgen)
        self.assertEqual(result.status, STATUS.optimal)
        self.assertEqual(result.value, value)
        self.assertEqual(len(result.relaxation), value)
        self.assertIsNone(verify_relaxation(inst, result.relaxation))

    def test_point(self):
        inst = point_instance()
        self.check(inst, solve_colgen(inst, EnhancementOptions(), Limits()), 2)
        self.check(inst, solve_colgen(inst, EnhancementOptions(hiding=True), Limits()), 2)

    def test_simplex_matches_the_covering_oracle(self):
        X = PointSet([(0, 0), (1, 0), (0, 1)])
        inst = make_instance(X, l1_neighborhood(X, 1))
        result = solve_colgen(inst, EnhancementOptions(), Limits())
        self.check(inst, result, rc_bruteforce(inst.X, inst.Y, inst.eps))
        self.assertGreaterEqual(result.stats['columns'], len(inst.Y))

    def test_empty_y(self):
        inst = make_instance(PointSet([(0, )]), PointSet([], dim=1))
        result = solve_colgen(inst)
        self.assertEqual(result.value, 0)
        self.assertEqual(result.relaxation, [])


class TestSquare(unittest.TestCase):
    def setUp(self):
        config.init()
        global_.reset()
        config.OPTIONS.stderr = StringIO()
        self.inst = square_instance()

    def tearDown(self):
        config.init()
        global_.reset()

    def test_root_bound(self):
        root = root_bounds(self.inst)
        self.assertEqual(root.lp_value, Fraction(8, 3))
        self.assertEqual(root.dual_bound, 3)
        self.assertIsNotNone(root.incumbent)
        self.assertGreaterEqual(len(root.incumbent), 3)

    def test_root_bound_beats_hiding_sets(self):
        hiding = max_hiding_set_bruteforce(self.inst.X, self.inst.Y)
        self.assertEqual(hiding, 2)
        self.assertGreaterEqual(root_bounds(self.inst).lp_value, hiding)

        X = PointSet([(0, 0), (1, 0), (0, 1)])
        simplex = make_instance(X, l1_neighborhood(X, 1))
        self.assertGreaterEqual(root_bounds(simplex).lp_value, max_hiding_set_bruteforce(simplex.X, simplex.Y))

    def test_optimum(self):
        result = solve_colgen(self.inst, EnhancementOptions(), Limits())
        self.assertEqual(result.status, STATUS.optimal)
        self.assertEqual(result.value, 3)
        self.assertIsNone(verify_relaxation(self.inst, result.relaxation))

    def test_branching_splits_the_columns(self):
        pool = initial_columns(self.inst)
        self.assertEqual(len(pool), 16)
        state = MasterState(pool)
        y1, y2 = (-1, 0), (-1, 1)
        differ = apply_branching(state, RFDecision.make(y1, y2, RF.differ))
        together = apply_branching(state, RFDecision.make(y1, y2, RF.together))

        both = {c.id for c in pool if y1 in c and y2 in c}
        one = {c.id for c in pool if (y1 in c) != (y2 in c)}
        neither = {c.id for c in pool} - both - one
        self.assertTrue(both)
        self.assertTrue(one)

        self.assertEqual({c.id for c in differ.enabled}, one | neither)
        self.assertEqual({c.id for c in together.enabled}, both | neither)
        self.assertEqual(sorted(differ.disabled), sorted(both))
        self.assertEqual(sorted(together.disabled), sorted(one))

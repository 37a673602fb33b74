#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from fractions import Fraction

from src.api.errors import InvalidInstanceError
from src.geometry import Inequality
from src.geometry import PointSet
from src.geometry import linf_radius
from src.geometry.points import make_point


class TestPointSet(unittest.TestCase):
    def setUp(self):
        self.S = PointSet([(0, 0), (1, 0), (0, 1)])

    def test_make_point(self):
        p = make_point([Fraction(4, 2), Fraction(1, 2)])
        self.assertEqual(p, (2, Fraction(1, 2)))
        self.assertIsInstance(p[0], int)

    def test_basic(self):
        self.assertEqual(len(self.S), 3)
        self.assertEqual(self.S.dim, 2)
        self.assertIn((1, 0), self.S)
        self.assertIn([Fraction(0), Fraction(1)], self.S)
        self.assertNotIn((1, 1), self.S)
        self.assertEqual(self.S.index((0, 1)), 2)
        self.assertTrue(self.S.is_integral())

    def test_errors(self):
        self.assertRaises(InvalidInstanceError, PointSet, [(0, 0), (0, 0)])
        self.assertRaises(InvalidInstanceError, PointSet, [(0, 0), (1, )])
        self.assertRaises(InvalidInstanceError, PointSet, [])
        self.assertEqual(len(PointSet([], dim=3)), 0)

    def test_disjoint(self):
        self.assertTrue(self.S.is_disjoint(self.S.subset([(1, 1)])))
        self.assertFalse(self.S.is_disjoint(self.S.subset([(1, 0), (2, 2)])))

    def test_equality(self):
        self.assertEqual(self.S, PointSet([(0, 0), (1, 0), (0, 1)]))
        self.assertEqual(self.S.as_set(), frozenset({(0, 1), (1, 0), (0, 0)}))

    def test_linf_radius(self):
        self.assertEqual(linf_radius(self.S), 1)
        self.assertEqual(linf_radius([(-3, 1), (2, 2)]), 3)
        self.assertEqual(linf_radius([]), 0)


class TestInequality(unittest.TestCase):
    def setUp(self):
        self.ineq = Inequality.make([2, -4], 2)

    def test_contains(self):
        self.assertTrue(self.ineq.contains((1, 0)))
        self.assertFalse(self.ineq.contains((2, 0)))
        self.assertTrue(self.ineq.is_valid_for([(0, 0), (1, 1)]))

    def test_separates_with_margin(self):
        eps = Fraction(1, 1000)
        ineq = Inequality.make([1, 0], 0)
        self.assertTrue(ineq.separates((1, 5), eps))
        self.assertFalse(ineq.separates((Fraction(1, 2000), 0), eps))

    def test_normalized(self):
        n = self.ineq.normalized()
        self.assertEqual(n.a, (Fraction(1, 2), Fraction(-1)))
        self.assertEqual(n.b, Fraction(1, 2))
        self.assertEqual(n.norm_inf, 1)

    def test_negated(self):
        self.assertEqual(self.ineq.negated(), Inequality.make([-2, 4], -2))

    def test_permuted(self):
        ineq = Inequality.make([1, 2, 3], 0)
        # coordinate j goes to position pi[j]
        self.assertEqual(ineq.permuted([1, 2, 0]).a, (3, 1, 2))

    def test_str(self):
        self.assertEqual(str(self.ineq), '2*x1 -4*x2 <= 2')
        self.assertEqual(str(Inequality.make([0, 0], 1)), '0 <= 1')

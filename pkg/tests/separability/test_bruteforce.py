#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from fractions import Fraction

from src.api.errors import RcUndefinedError
from src.geometry import PointSet
from src.separability import maximal_separable_sets
from src.separability import rc_bruteforce
from src.separability import separable_sets

EPS = Fraction(1, 1000)


class TestBruteForce(unittest.TestCase):
    def setUp(self):
        self.X = PointSet([(0, )])
        self.Y = PointSet([(-1, ), (1, )])

    def test_separable_sets_on_a_line(self):
        self.assertEqual(separable_sets(self.X, self.Y, EPS), [frozenset({(-1, )}), frozenset({(1, )})])
        self.assertEqual(maximal_separable_sets(self.X, self.Y, EPS), [frozenset({(-1, )}), frozenset({(1, )})])

    def test_rc_on_a_line(self):
        self.assertEqual(rc_bruteforce(self.X, self.Y, EPS), 2)

    def test_rc_one_side(self):
        X = PointSet([(0, 0), (1, 0), (0, 1)])
        self.assertEqual(rc_bruteforce(X, PointSet([(2, 0), (0, 2)]), EPS), 1)
        self.assertEqual(rc_bruteforce(X, PointSet([(-1, 0), (2, 0)]), EPS), 2)

    def test_empty_Y(self):
        self.assertEqual(rc_bruteforce(self.X, PointSet([], dim=1), EPS), 0)

    def test_undefined(self):
        self.assertRaises(RcUndefinedError, rc_bruteforce, self.X, self.Y, 2)

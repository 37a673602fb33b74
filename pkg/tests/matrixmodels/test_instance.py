#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import unittest

from fractions import Fraction

from src.api import config
from src.api.errors import InvalidInstanceError
from src.api.errors import NotLatticeConvexError
from src.api.errors import RcUndefinedError
from src.geometry import PointSet
from src.geometry import l1_neighborhood
from src.matrixmodels import big_m
from src.matrixmodels import make_instance


class TestInstance(unittest.TestCase):
    def setUp(self):
        config.init()

    def test_big_m(self):
        self.assertEqual(big_m(2, 1, 2, Fraction(1, 1000)), Fraction(6001, 1000))
        self.assertEqual(big_m(1, 0, 1, Fraction(1, 2)), Fraction(3, 2))

    def test_big_m_of_generated_shapes(self):
        square = PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])
        inst = make_instance(square, l1_neighborhood(square, 1))
        self.assertEqual((inst.rho_X, inst.rho_Y), (1, 2))
        self.assertEqual(inst.b_bound, 2)
        self.assertEqual(inst.M, 2 * (1 + 2) + Fraction(1, 1000))

        cube = PointSet(itertools.product((0, 1), repeat=3))
        inst = make_instance(cube, l1_neighborhood(cube, 1), eps=Fraction(1, 10))
        self.assertEqual(inst.b_bound, 3)
        self.assertEqual(inst.M, Fraction(91, 10))

        cross = PointSet([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])
        inst = make_instance(cross, l1_neighborhood(cross, 2))
        self.assertEqual((inst.rho_X, inst.rho_Y), (1, 3))
        self.assertEqual(inst.M, Fraction(8001, 1000))

    def test_point(self):
        inst = make_instance(PointSet([(0, )]), PointSet([(-1, ), (1, )]))
        self.assertEqual(inst.eps, Fraction(1, 1000))
        self.assertEqual(inst.k, 2)  # the affine hull equation counts twice
        self.assertEqual(inst.rho_X, 0)
        self.assertEqual(inst.rho_Y, 1)
        self.assertEqual(inst.b_bound, 0)
        self.assertEqual(inst.M, Fraction(1001, 1000))
        self.assertEqual(inst.dim, 1)

    def test_segment(self):
        inst = make_instance(PointSet([(0, ), (1, )]), PointSet([(-1, ), (2, )]), eps=Fraction(1, 2), k=5)
        self.assertEqual(inst.k, 5)
        self.assertEqual(inst.with_k(3).k, 3)
        self.assertEqual(inst.M, 1 * (1 + 2) + Fraction(1, 2))
        self.assertEqual(len(inst.facet_inequalities), 2)

    def test_invalid(self):
        X = PointSet([(0, )])
        self.assertRaises(InvalidInstanceError, make_instance, X, PointSet([(0, ), (1, )]))
        self.assertRaises(InvalidInstanceError, make_instance, X, PointSet([(1, 1)]))
        self.assertRaises(InvalidInstanceError, make_instance, X, PointSet([(1, )]), 0)

    def test_not_lattice_convex(self):
        self.assertRaises(NotLatticeConvexError, make_instance, PointSet([(0, ), (2, )]), PointSet([(1, )]))

    def test_undefined(self):
        # b must be 0 when X = {0}: no normalized inequality cuts off 1 by 10
        self.assertRaises(RcUndefinedError, make_instance, PointSet([(0, )]), PointSet([(1, )]), 10)

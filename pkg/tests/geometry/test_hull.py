#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from fractions import Fraction

from src.geometry import Inequality
from src.geometry import PointSet
from src.geometry import convex_hull_facets
from src.geometry import hulls_intersect
from src.geometry import in_convex_hull
from src.geometry import integer_points_in_hull
from src.geometry import segment_hits_hull


SQUARE = PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])
SIMPLEX = PointSet([(0, 0), (1, 0), (0, 1)])


class TestFacets(unittest.TestCase):
    def test_square(self):
        H = convex_hull_facets(SQUARE)
        self.assertEqual(H.dim_of_hull, 2)
        self.assertEqual(H.equations, ())
        self.assertEqual(set(H.facets), {
            Inequality.make([-1, 0], 0),
            Inequality.make([0, -1], 0),
            Inequality.make([1, 0], 1),
            Inequality.make([0, 1], 1)
        })

    def test_simplex(self):
        H = convex_hull_facets(SIMPLEX)
        self.assertEqual(len(H), 3)
        self.assertIn(Inequality.make([1, 1], 1), H.facets)

    def test_cube_has_six_facets(self):
        cube = PointSet([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
        self.assertEqual(len(convex_hull_facets(cube)), 6)

    def test_facets_are_normalized(self):
        H = convex_hull_facets(PointSet([(0, 0), (2, 1), (1, 2)]))
        self.assertEqual(len(H), 3)
        for f in H.facets:
            self.assertEqual(f.norm_inf, 1)

    def test_segment_in_the_plane(self):
        H = convex_hull_facets(PointSet([(0, 0), (1, 1)]))
        self.assertEqual(H.dim_of_hull, 1)
        self.assertEqual(len(H.equations), 1)
        self.assertEqual(len(H.facets), 2)
        self.assertEqual(len(H.as_inequalities()), 4)
        self.assertTrue(H.contains((Fraction(1, 2), Fraction(1, 2))))
        self.assertFalse(H.contains((1, 0)))
        self.assertFalse(H.contains((2, 2)))

    def test_single_point(self):
        H = convex_hull_facets(PointSet([(1, 2)]))
        self.assertEqual(H.dim_of_hull, 0)
        self.assertEqual(H.facets, ())
        self.assertEqual(len(H.equations), 2)
        self.assertTrue(H.contains((1, 2)))
        self.assertFalse(H.contains((1, 1)))


class TestIntersections(unittest.TestCase):
    def setUp(self):
        self.H = convex_hull_facets(SQUARE)

    def test_segment_through_the_square(self):
        self.assertTrue(segment_hits_hull((-1, 0), (2, 0), self.H))
        self.assertTrue(segment_hits_hull((2, -1), (-1, 2), self.H))

    def test_segment_missing_the_square(self):
        self.assertFalse(segment_hits_hull((-1, 0), (0, -1), self.H))
        self.assertFalse(segment_hits_hull((2, 0), (2, 1), self.H))

    def test_segment_touching_a_vertex(self):
        self.assertFalse(segment_hits_hull((2, 0), (0, 2), convex_hull_facets(SIMPLEX)))
        self.assertTrue(segment_hits_hull((2, 0), (1, 1), self.H))

    def test_integer_points(self):
        H = convex_hull_facets(PointSet([(0, 0), (2, 0), (0, 2)]))
        inside = integer_points_in_hull(H, ((0, 0), (2, 2)))
        self.assertEqual(inside.as_set(), {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)})

    def test_hulls_intersect(self):
        self.assertTrue(hulls_intersect([(0, 0), (2, 2)], [(0, 2), (2, 0)], 2))
        self.assertFalse(hulls_intersect([(0, 0), (1, 0)], [(0, 1), (1, 1)], 2))
        self.assertFalse(hulls_intersect([], [(0, 0)], 2))

    def test_in_convex_hull(self):
        self.assertTrue(in_convex_hull((Fraction(1, 3), Fraction(1, 3)), list(SIMPLEX), 2))
        self.assertFalse(in_convex_hull((1, 1), list(SIMPLEX), 2))

#!/usr/bin/env python
# -*- coding: utf-8 -*-

from src.geometry import PointSet
from src.geometry import bounding_box
from src.geometry import is_lattice_convex
from src.geometry import l1_neighborhood


def test_bounding_box():
    S = PointSet([(0, 3), (2, -1)])
    assert bounding_box(S) == ((0, -1), (2, 3))
    assert bounding_box(S, 1) == ((-1, -2), (3, 4))


def test_lattice_convex():
    assert is_lattice_convex(PointSet([(0, 0), (1, 0), (2, 0)]))
    assert not is_lattice_convex(PointSet([(0, 0), (2, 0)]))
    assert not is_lattice_convex(PointSet([(0, 0), (2, 0), (0, 2)]))
    assert is_lattice_convex(PointSet([(0, 0), (1, 0), (0, 1), (1, 1)]))


def test_l1_neighborhood_of_the_simplex():
    Y = l1_neighborhood(PointSet([(0, 0), (1, 0), (0, 1)]), 1)
    assert list(Y) == [(-1, 0), (-1, 1), (0, -1), (0, 2), (1, -1), (1, 1), (2, 0)]
    assert Y.role == 'Y'


def test_l1_neighborhood_radius_two():
    Y = l1_neighborhood(PointSet([(0, )]), 2)
    assert list(Y) == [(-2, ), (-1, ), (1, ), (2, )]


def test_l1_neighborhood_of_the_square():
    Y = l1_neighborhood(PointSet([(0, 0), (1, 0), (0, 1), (1, 1)]), 1)
    assert len(Y) == 8

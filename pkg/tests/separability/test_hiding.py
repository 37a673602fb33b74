#!/usr/bin/env python
# -*- coding: utf-8 -*-

from src.geometry import PointSet
from src.geometry import l1_neighborhood
from src.separability import hiding_graph
from src.separability import hiding_pairs
from src.separability import max_hiding_set_bruteforce

SIMPLEX = PointSet([(0, 0), (1, 0), (0, 1)])


def test_hiding_pairs_of_the_simplex():
    pairs = hiding_pairs(SIMPLEX, l1_neighborhood(SIMPLEX, 1))
    assert ((-1, 0), (2, 0)) in pairs
    assert ((-1, 1), (1, -1)) in pairs
    assert ((-1, 0), (0, -1)) not in pairs
    assert ((2, 0), (0, 2)) not in pairs


def test_points_outside_the_affine_hull_never_hide():
    X = PointSet([(0, 0), (1, 0)])
    Y = PointSet([(-1, 0), (2, 0), (0, 1), (0, -1)])
    assert hiding_pairs(X, Y) == [((-1, 0), (2, 0))]
    assert set(hiding_graph(X, Y).nodes) == {(-1, 0), (2, 0)}


def test_single_point_has_no_hiding_set():
    # aff(X) = X, so no point of Y qualifies
    X = PointSet([(0, )])
    Y = PointSet([(-1, ), (1, )])
    assert hiding_pairs(X, Y) == []
    assert max_hiding_set_bruteforce(X, Y) == 0


def test_max_hiding_set_on_a_line():
    X = PointSet([(0, ), (1, )])
    Y = PointSet([(-1, ), (2, )])
    assert hiding_pairs(X, Y) == [((-1, ), (2, ))]
    assert max_hiding_set_bruteforce(X, Y) == 2


def test_max_hiding_set_of_the_square():
    square = PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])
    Y = PointSet([(a, b) for a in range(-1, 3) for b in range(-1, 3) if (a, b) not in square])
    assert len(Y) == 12
    assert max_hiding_set_bruteforce(square, Y) == 2

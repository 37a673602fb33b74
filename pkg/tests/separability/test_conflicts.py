#!/usr/bin/env python
# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from src.api.errors import PreconditionError
from src.geometry import PointSet
from src.separability import is_minimal_conflict
from src.separability import sparsify_conflict

EPS = Fraction(1, 1000)
SIMPLEX = PointSet([(0, 0), (1, 0), (0, 1)])


def test_sparsify_keeps_a_minimal_prefix():
    cert = sparsify_conflict(SIMPLEX, [(1, 1), (-1, 0), (2, 0)], EPS)
    assert cert.members == ((1, 1), (-1, 0))
    assert cert.minimal
    assert cert.key == frozenset({(1, 1), (-1, 0)})
    assert len(cert) == 2


def test_sparsify_drops_redundant_points():
    cert = sparsify_conflict(SIMPLEX, [(2, 0), (0, 2), (-1, 0)], EPS)
    assert cert.key == frozenset({(2, 0), (-1, 0)})


def test_sparsify_needs_a_conflict():
    with pytest.raises(PreconditionError):
        sparsify_conflict(SIMPLEX, [(2, 0)], EPS)


def test_minimality():
    assert is_minimal_conflict(SIMPLEX, [(1, 1), (-1, 0)], EPS)
    assert not is_minimal_conflict(SIMPLEX, [(1, 1), (-1, 0), (2, 0)], EPS)
    assert not is_minimal_conflict(SIMPLEX, [(2, 0), (0, 2)], EPS)

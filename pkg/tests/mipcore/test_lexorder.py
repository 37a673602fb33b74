#!/usr/bin/env python
# -*- coding: utf-8 -*-

from fractions import Fraction

from src.api.constants import SENSE
from src.mipcore import lex_ge_propagate
from src.mipcore import separate_lex_cover

F = Fraction


def bounds(n, fixed):
    lb, ub = [F(0)] * n, [F(1)] * n
    for j, v in fixed.items():
        lb[j] = ub[j] = F(v)
    return lb, ub


PAIRS = [(0, 1), (2, 3)]


def test_nothing_fixed():
    result = lex_ge_propagate(*bounds(4, {}), PAIRS)
    assert result.fixings == {}
    assert not result.cutoff


def test_v_zero_forces_w_zero():
    result = lex_ge_propagate(*bounds(4, {0: 0}), PAIRS)
    assert result.fixings == {1: 0}


def test_w_one_forces_v_one():
    result = lex_ge_propagate(*bounds(4, {1: 1}), PAIRS)
    assert result.fixings == {0: 1}


def test_violated_prefix_prunes():
    result = lex_ge_propagate(*bounds(4, {0: 0, 1: 1}), PAIRS)
    assert result.cutoff


def test_decided_prefix_stops():
    result = lex_ge_propagate(*bounds(4, {0: 1, 1: 0, 2: 0, 3: 1}), PAIRS)
    assert result.fixings == {}
    assert not result.cutoff


def test_equality_look_ahead():
    # v_2 = 0 and w_2 = 1: position 0 must be decided as v_0 = 1, w_0 = 0
    result = lex_ge_propagate(*bounds(4, {2: 0, 3: 1}), PAIRS)
    assert result.fixings == {0: 1, 1: 0}


def test_cover_cut_first_position():
    rows = separate_lex_cover([F(0), F(1)], [(0, 1)])
    assert len(rows) == 1
    row = rows[0]
    assert row.sense == SENSE.ge
    assert row.coeffs == {0: 1, 1: -1}
    assert row.rhs == 0


def test_cover_cut_with_prefix():
    x = [F(1), F(1), F(0), F(1)]
    rows = separate_lex_cover(x, PAIRS)
    assert len(rows) == 1
    row = rows[0]
    assert row.coeffs == {0: -1, 1: -1, 2: 1, 3: -1}
    assert row.rhs == -2
    assert row.activity(x) < row.rhs


def test_no_cut_for_lex_larger_point():
    assert separate_lex_cover([F(1), F(0), F(0), F(1)], PAIRS) == []
    assert separate_lex_cover([F(1, 2)] * 4, PAIRS) == []

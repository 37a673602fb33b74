#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" Lexicographic order constraints v >=_lex w between two binary vectors
given as a list of (v_k, w_k) variable index pairs. With w the image of v
under a symmetry this is a symresack (an orbisack for a swap of two
columns).
"""

from fractions import Fraction

from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api.constants import SENSE
from src.exactlp import Row
from src.exactlp.program import make_row

from .plugins import Cut
from .plugins import NodeContext
from .plugins import PropagationResult
from .plugins import Propagator
from .plugins import Separator

__all__ = ['lex_ge_propagate', 'separate_lex_cover', 'LexGePropagator', 'LexCoverSeparator']

Pairs = Sequence[Tuple[int, int]]


def _value(j: int, lb, ub, fixings: Dict[int, Fraction]) -> Optional[Fraction]:
    if j in fixings:
        return fixings[j]
    if lb[j] == ub[j]:
        return lb[j]
    return None


def _equality_breaks_order(pairs: Pairs, k: int, lb, ub, fixings) -> bool:
    """ Whether making position k equal forces v <_lex w later on.
    Conservative: gives up (False) at the first position it cannot decide.
    """
    v, w = pairs[k]
    a, b = _value(v, lb, ub, fixings), _value(w, lb, ub, fixings)
    assumed = dict(fixings)
    unknown = set()
    if a is not None:
        assumed[w] = a
    elif b is not None:
        assumed[v] = b
    else:
        unknown = {v, w}

    for v2, w2 in pairs[k + 1:]:
        if v2 == w2:
            continue
        if v2 in unknown or w2 in unknown:
            return False
        a2, b2 = _value(v2, lb, ub, assumed), _value(w2, lb, ub, assumed)
        if a2 is None or b2 is None or a2 > b2:
            return False
        if a2 < b2:
            return True

    return False


def lex_ge_propagate(lb: Sequence[Fraction], ub: Sequence[Fraction], pairs: Pairs) -> PropagationResult:
    """ Fixings implied by v >=_lex w under the current 0/1 fixings.
    Positions are scanned left to right; fixed-equal positions are
    skipped, and the first undecided one gets the symresack rules:
    v_k = 0 forces w_k = 0, w_k = 1 forces v_k = 1, and if equality at
    k would make the rest lexicographically smaller, v_k = 1, w_k = 0.
    """
    fixings: Dict[int, Fraction] = {}
    for k, (v, w) in enumerate(pairs):
        if v == w:
            continue
        a, b = _value(v, lb, ub, fixings), _value(w, lb, ub, fixings)
        if a is not None and b is not None:
            if a > b:
                break
            if a < b:
                return PropagationResult.prune()
            continue

        if a == 0:
            fixings[w] = Fraction(0)
            continue
        if b == 1:
            fixings[v] = Fraction(1)
            continue

        if _equality_breaks_order(pairs, k, lb, ub, fixings):
            if a is None:
                fixings[v] = Fraction(1)
            if b is None:
                fixings[w] = Fraction(0)
        break

    return PropagationResult(fixings, False)


def separate_lex_cover(x: Sequence[Fraction], pairs: Pairs) -> List[Row]:
    """ Cover inequalities of v >=_lex w violated by x.

    For a position k, every 0/1 point with positions m < k equal and
    (v_k, w_k) = (0, 1) is infeasible. Choosing for each m < k the cheaper
    of the patterns (1, 1) and (0, 0) gives the inequality
        sum_(1,1) (2 - v_m - w_m) + sum_(0,0) (v_m + w_m) + v_k + 1 - w_k >= 1
    which is returned when x violates it.
    """
    result = []
    prefix_cost = Fraction(0)
    prefix: List[Tuple[int, int, bool]] = []  # (v, w, pattern is (1, 1))
    for v, w in pairs:
        if v == w:
            continue
        total = prefix_cost + x[v] + 1 - x[w]
        if total < 1:
            coeffs: Dict[int, Fraction] = {}
            constant = 1
            for pv, pw, ones in prefix:
                sign = -1 if ones else 1
                coeffs[pv] = coeffs.get(pv, 0) + sign
                coeffs[pw] = coeffs.get(pw, 0) + sign
                constant += 2 if ones else 0
            coeffs[v] = coeffs.get(v, 0) + 1
            coeffs[w] = coeffs.get(w, 0) - 1
            result.append(make_row(coeffs, SENSE.ge, 1 - constant))

        ones_cost = 2 - x[v] - x[w]
        zeros_cost = x[v] + x[w]
        ones = ones_cost < zeros_cost
        prefix.append((v, w, ones))
        prefix_cost += ones_cost if ones else zeros_cost
        if prefix_cost >= 1:
            break

    return result


class LexGePropagator(Propagator):
    def __init__(self, pairs: Pairs, name: str = 'lex'):
        self.pairs = list(pairs)
        self.name = name

    def propagate(self, ctx: NodeContext) -> PropagationResult:
        return lex_ge_propagate(ctx.lb, ctx.ub, self.pairs)


class LexCoverSeparator(Separator):
    mandatory = False

    def __init__(self, pairs: Pairs, name: str = 'lex-cover'):
        self.pairs = list(pairs)
        self.name = name

    def separate(self, ctx: NodeContext) -> List[Cut]:
        return [Cut(row, True) for row in separate_lex_cover(ctx.x, self.pairs)]

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# Small exact linear algebra over the rationals

from fractions import Fraction

from typing import List
from typing import Sequence
from typing import Tuple

Vector = Tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """ Reduced row echelon form. Returns the nonzero rows and
    the pivot column of each one.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break

    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """ Basis of {x : rows . x = 0}
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def normalize_inf(v: Sequence[Fraction]) -> Vector:
    """ Scales v so that its largest absolute entry is 1
    """
    top = max((abs(x) for x in v), default=Fraction(0))
    if top == 0:
        return tuple(Fraction(x) for x in v)
    return tuple(Fraction(x) / top for x in v)

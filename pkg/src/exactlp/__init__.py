#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .program import Row
from .program import LinearProgram
from .program import LpSolution
from .simplex import solve
from .simplex import verify_farkas
from .simplex import check_optimality

__all__ = [
    'Row',
    'LinearProgram',
    'LpSolution',
    'solve',
    'verify_farkas',
    'check_optimality'
]

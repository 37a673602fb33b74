#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from fractions import Fraction

from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

from src.exactlp import Row

__all__ = ['Node']


class Node:
    """ A branch-and-bound node. Bounds are overrides of the model bounds,
    rows are local to the subtree, and parent_bound is the (minimization
    sense) dual bound inherited from the parent.
    """
    def __init__(self, id_: int, depth: int = 0,
                 bounds: Optional[Dict[int, Tuple[Fraction, Fraction]]] = None,
                 rows: Tuple[Row, ...] = (),
                 parent_bound: Optional[Fraction] = None,
                 path: Tuple[Any, ...] = (),
                 branched_var: Optional[int] = None):
        self.id = id_
        self.depth = depth
        self.bounds = bounds or {}
        self.rows = rows
        self.parent_bound = parent_bound
        self.path = path
        self.branched_var = branched_var

    @property
    def annotation(self) -> Any:
        return self.path[-1] if self.path else None

    def __repr__(self):
        return '<Node %i depth=%i bound=%s>' % (self.id, self.depth, self.parent_bound)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .graph import SymGraph
from .graph import build_symmetry_graph
from .graph import coordinate_values
from .automorphisms import PointPermutation
from .automorphisms import apply_permutation
from .automorphisms import automorphism_generators
from .automorphisms import detect_symmetries
from .automorphisms import compose
from .automorphisms import closure

__all__ = [
    'SymGraph',
    'build_symmetry_graph',
    'coordinate_values',
    'PointPermutation',
    'apply_permutation',
    'automorphism_generators',
    'detect_symmetries',
    'compose',
    'closure'
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .instance import RcInstance
from .instance import make_instance
from .instance import big_m
from .variables import VariableMap
from .variables import ModelData
from .enhancements import EnhancementOptions
from .compact import build_compact
from .cutmodel import build_cut_model
from .conflicts import ConflictPool
from .conflicts import separate_conflicts_integral
from .conflicts import separate_conflicts_fractional
from .hiding import hiding_cut_pool
from .hiding import hiding_cut_separator
from .propagation import convexity_propagate
from .propagation import intersection_propagate
from .symhandling import add_simple_symmetry
from .symhandling import add_advanced_symmetry
from .symhandling import add_redundancy_coupling
from .incumbent import solution_from_inequalities
from .incumbent import facet_solution
from .relaxation import extract_relaxation
from .relaxation import relaxation_from_sets
from .relaxation import verify_relaxation
from .result import RcResult
from .solve import build_model
from .solve import solve_matrix_model

__all__ = [
    'RcInstance',
    'make_instance',
    'big_m',
    'VariableMap',
    'ModelData',
    'EnhancementOptions',
    'build_compact',
    'build_cut_model',
    'ConflictPool',
    'separate_conflicts_integral',
    'separate_conflicts_fractional',
    'hiding_cut_pool',
    'hiding_cut_separator',
    'convexity_propagate',
    'intersection_propagate',
    'add_simple_symmetry',
    'add_advanced_symmetry',
    'add_redundancy_coupling',
    'solution_from_inequalities',
    'facet_solution',
    'extract_relaxation',
    'relaxation_from_sets',
    'verify_relaxation',
    'RcResult',
    'build_model',
    'solve_matrix_model'
]

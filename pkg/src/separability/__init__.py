#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .oracle import SeparationInstance
from .oracle import eps_separable
from .conflicts import ConflictCertificate
from .conflicts import sparsify_conflict
from .conflicts import is_minimal_conflict
from .hiding import hiding_pairs
from .hiding import hiding_graph
from .hiding import max_hiding_set_bruteforce
from .bruteforce import separable_sets
from .bruteforce import maximal_separable_sets
from .bruteforce import rc_bruteforce

__all__ = [
    'SeparationInstance',
    'eps_separable',
    'ConflictCertificate',
    'sparsify_conflict',
    'is_minimal_conflict',
    'hiding_pairs',
    'hiding_graph',
    'max_hiding_set_bruteforce',
    'separable_sets',
    'maximal_separable_sets',
    'rc_bruteforce'
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .column import Column
from .column import ColumnPool
from .column import initial_columns
from .master import RFDecision
from .master import MasterState
from .master import ColgenData
from .master import apply_branching
from .master import solve_master_lp
from .pricing import PricedSet
from .pricing import price
from .ryanfoster import theta
from .ryanfoster import ryan_foster_select
from .solver import greedy_cover
from .solver import RootBounds
from .solver import root_bounds
from .solver import build_colgen_model
from .solver import solve_colgen

__all__ = [
    'Column',
    'ColumnPool',
    'initial_columns',
    'RFDecision',
    'MasterState',
    'ColgenData',
    'apply_branching',
    'solve_master_lp',
    'PricedSet',
    'price',
    'theta',
    'ryan_foster_select',
    'greedy_cover',
    'RootBounds',
    'root_bounds',
    'build_colgen_model',
    'solve_colgen'
]

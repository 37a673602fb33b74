#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .errors import PluginRegistrationError
from .errors import IncompatibleOptionsError
from .plugins import PropagationResult
from .plugins import Cut
from .plugins import NewColumn
from .plugins import PricingResult
from .plugins import Child
from .plugins import NodeContext
from .plugins import Propagator
from .plugins import Separator
from .plugins import Pricer
from .plugins import BranchingRule
from .model import MipModel
from .model import register_propagator
from .model import register_separator
from .model import register_pricer
from .model import register_branching
from .node import Node
from .branching import branch_most_fractional
from .branching import MostFractionalBranching
from .lexorder import lex_ge_propagate
from .lexorder import separate_lex_cover
from .lexorder import LexGePropagator
from .lexorder import LexCoverSeparator
from .engine import Limits
from .engine import MipResult
from .engine import solve_bnb

__all__ = [
    'PluginRegistrationError',
    'IncompatibleOptionsError',
    'PropagationResult',
    'Cut',
    'NewColumn',
    'PricingResult',
    'Child',
    'NodeContext',
    'Propagator',
    'Separator',
    'Pricer',
    'BranchingRule',
    'MipModel',
    'register_propagator',
    'register_separator',
    'register_pricer',
    'register_branching',
    'Node',
    'branch_most_fractional',
    'MostFractionalBranching',
    'lex_ge_propagate',
    'separate_lex_cover',
    'LexGePropagator',
    'LexCoverSeparator',
    'Limits',
    'MipResult',
    'solve_bnb'
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import sys
from fractions import Fraction

# The options container
from . import options
from . import global_
from .options import ANYTYPE
from .constants import NODESEL
from .constants import PIVOT

# ------------------------------------------------------
# Common setup and configuration for all tools
# ------------------------------------------------------

OPTIONS = options.Options()


def init():
    OPTIONS.reset()
    OPTIONS.add_option('StdErrFileName', str)
    OPTIONS.add_option('Debug', int, 0)

    # Default console redirections
    OPTIONS.add_option('stdout', ANYTYPE, sys.stdout)
    OPTIONS.add_option('stderr', ANYTYPE, sys.stderr)

    # ----------------------------------------------------------------------
    # Default solver settings
    #
    # eps -- separation margin of the epsilon-relaxation
    # time_limit -- wall clock seconds per solve (None = unlimited)
    # node_limit -- branch-and-bound nodes per solve (None = unlimited)
    # node_selection -- 'best' (best bound, plunging on ties) or 'dfs'
    # max_prop_rounds -- propagation rounds per node
    # max_cut_rounds -- rounds of non-mandatory separators per node
    # pivot_rule -- simplex entering rule: 'dantzig' or 'bland'
    # degenerate_switch -- degenerate pivots before forcing Bland's rule
    # bruteforce_limit -- largest |Y| verified by the covering oracle
    # hiding_bound_limit -- largest |Y| whose hiding set bound is reported
    # check_bounds -- assert dual bound monotonicity at every node
    # ----------------------------------------------------------------------
    OPTIONS.add_option('eps', Fraction, global_.DEFAULT_EPS)
    OPTIONS.add_option('time_limit', float, global_.DEFAULT_TIME_LIMIT)
    OPTIONS.add_option('node_limit', int, global_.DEFAULT_NODE_LIMIT)
    OPTIONS.add_option('node_selection', str, NODESEL.best)
    OPTIONS.add_option('max_prop_rounds', int, global_.DEFAULT_MAX_PROP_ROUNDS)
    OPTIONS.add_option('max_cut_rounds', int, global_.DEFAULT_MAX_CUT_ROUNDS)
    OPTIONS.add_option('pivot_rule', str, PIVOT.dantzig)
    OPTIONS.add_option('degenerate_switch', int, global_.DEFAULT_DEGENERATE_SWITCH)
    OPTIONS.add_option('bruteforce_limit', int, global_.DEFAULT_BRUTEFORCE_LIMIT)
    OPTIONS.add_option('hiding_bound_limit', int, global_.DEFAULT_HIDING_BOUND_LIMIT)
    OPTIONS.add_option('check_bounds', bool, True)


init()

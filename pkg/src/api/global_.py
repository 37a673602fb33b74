#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

# ----------------------------------------------------------------------
# Simple global container for defaults and run-wide counters.
#
# Don't touch unless you know what are you doing
# ----------------------------------------------------------------------

from fractions import Fraction

# ----------------------------------------------------------------------
# Number of errors and warnings emitted so far. The CLI reads them
# to decide the exit code.
# ----------------------------------------------------------------------
has_errors = 0    # Number of errors
has_warnings = 0  # Number of warnings

# ----------------------------------------------------------------------
# Messages already printed (they are printed only once)
# ----------------------------------------------------------------------
error_msg_cache = set()

# ----------------------------------------------------------------------
# Default separation margin for the epsilon-relaxation
# ----------------------------------------------------------------------
DEFAULT_EPS = Fraction(1, 1000)

# ----------------------------------------------------------------------
# Default wall clock limit (seconds) per instance. None = no node limit.
# ----------------------------------------------------------------------
DEFAULT_TIME_LIMIT = 600.0
DEFAULT_NODE_LIMIT = None

# ----------------------------------------------------------------------
# Propagation rounds per node, and separation rounds of non-mandatory
# cut separators per node.
# ----------------------------------------------------------------------
DEFAULT_MAX_PROP_ROUNDS = 10
DEFAULT_MAX_CUT_ROUNDS = 20

# ----------------------------------------------------------------------
# Consecutive degenerate pivots after which the simplex
# switches to Bland's rule for the rest of the solve.
# ----------------------------------------------------------------------
DEFAULT_DEGENERATE_SWITCH = 50

# ----------------------------------------------------------------------
# Largest |Y| verified against the brute-force covering oracle
# ----------------------------------------------------------------------
DEFAULT_BRUTEFORCE_LIMIT = 10

# ----------------------------------------------------------------------
# Largest |Y| for which runs report the hiding set lower bound
# ----------------------------------------------------------------------
DEFAULT_HIDING_BOUND_LIMIT = 60

# ----------------------------------------------------------------------
# Shifts of the shifted geometric means reported by the aggregator
# ----------------------------------------------------------------------
SGM_TIME_SHIFT = 10
SGM_NODES_SHIFT = 100


def reset():
    """ Resets the run-wide counters
    """
    global has_errors, has_warnings
    has_errors = 0
    has_warnings = 0
    error_msg_cache.clear()

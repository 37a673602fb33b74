#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from typing import Optional

from . import global_
from .config import OPTIONS

# Exports only these functions. Others
__all__ = ['error', 'warning', 'info']

PROGNAME = 'rc'


def msg_output(msg):
    if msg in global_.error_msg_cache:
        return

    OPTIONS.stderr.write("%s\n" % msg)
    global_.error_msg_cache.add(msg)


def info(msg):
    if OPTIONS.Debug < 1:
        return
    OPTIONS.stderr.write("info: %s\n" % msg)


def error(msg, fname: Optional[str] = None):
    """ Generic error routine
    """
    prefix = PROGNAME if fname is None else '%s: %s' % (PROGNAME, fname)
    msg_output("%s: error: %s" % (prefix, msg))
    global_.has_errors += 1


def warning(msg, fname: Optional[str] = None):
    """ Generic warning routine
    """
    prefix = PROGNAME if fname is None else '%s: %s' % (PROGNAME, fname)
    msg_output("%s: warning: %s" % (prefix, msg))
    global_.has_warnings += 1


# ----------------------------------------
# Warning: preloaded solution rejected
# ----------------------------------------
def warning_incumbent_discarded(reason):
    warning("Initial solution discarded: %s" % reason)


# ----------------------------------------
# Warning: time or node limit hit
# ----------------------------------------
def warning_limit_reached(name, primal, dual):
    warning("%s: limit reached (primal bound %s, dual bound %s)" % (name, primal, dual))


# ----------------------------------------
# Error: instance could not be built
# ----------------------------------------
def error_invalid_instance(fname, reason):
    error(str(reason), fname)


# ----------------------------------------
# Error: result did not pass the exact re-check
# ----------------------------------------
def error_verification_failed(name, reason):
    error("%s: verification failed: %s" % (name, reason))

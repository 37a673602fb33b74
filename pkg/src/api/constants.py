#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import os


class classproperty(object):
    ''' Decorator for class properties.
    Use @classproperty instead of @property on the enum classes below.
    '''
    def __init__(self, fget):
        self.fget = fget

    def __get__(self, owner_self, owner_cls):
        return self.fget(owner_cls)


# -------------------------------------------------
# Global constants
# -------------------------------------------------

# Path to the repository root
RCLAB_ROOT = os.path.abspath(os.path.join(
    os.path.abspath(os.path.dirname(os.path.abspath(__file__))), os.path.pardir, os.path.pardir)
)


# ----------------------------------------------------------------------
# Class enums
# ----------------------------------------------------------------------

class SENSE(object):
    """ Row relations and objective senses
    """
    le = '<='
    eq = '='
    ge = '>='
    min_ = 'min'
    max_ = 'max'

    @classproperty
    def relations(cls):
        return (cls.le, cls.eq, cls.ge)

    @classproperty
    def objectives(cls):
        return (cls.min_, cls.max_)


class STATUS(object):
    """ Solve status enums (LP and MIP share names)
    """
    optimal = 'optimal'
    infeasible = 'infeasible'
    unbounded = 'unbounded'
    limit = 'limit'

    @classproperty
    def lp_statuses(cls):
        return (cls.optimal, cls.infeasible, cls.unbounded)


class MODEL(object):
    """ Model kinds the harness can dispatch to
    """
    compact = 'compact'
    cut = 'cut'
    colgen = 'colgen'
    hybrid = 'hybrid'

    @classproperty
    def models(cls):
        return (cls.compact, cls.cut, cls.colgen, cls.hybrid)

    @classmethod
    def is_valid(cls, model):
        return model in cls.models


class SYM(object):
    """ Symmetry handling levels
    """
    none = 'none'
    simple = 'simple'
    advanced = 'advanced'

    # Command line abbreviations
    _ABBREVIATIONS = {
        '0': none,
        's': simple,
        'a': advanced
    }

    @classproperty
    def levels(cls):
        return (cls.none, cls.simple, cls.advanced)

    @classmethod
    def from_flag(cls, flag):
        """ Converts a command line flag (0, s, a) or a level name into a level.
        Returns None if not valid.
        """
        if flag in cls.levels:
            return flag
        return cls._ABBREVIATIONS.get(flag, None)

    @classmethod
    def to_flag(cls, level):
        return {v: k for k, v in cls._ABBREVIATIONS.items()}[level]


class RF(object):
    """ Ryan-Foster decision modes
    """
    differ = 'differ'
    together = 'together'


class NODESEL(object):
    """ Node selection rules
    """
    best = 'best'
    dfs = 'dfs'

    @classproperty
    def rules(cls):
        return (cls.best, cls.dfs)


class PIVOT(object):
    """ Entering variable rules of the simplex
    """
    dantzig = 'dantzig'
    bland = 'bland'

    @classproperty
    def rules(cls):
        return (cls.dantzig, cls.bland)


class EXITCODE(object):
    """ Command line exit codes
    """
    ok = 0
    verification_failed = 1
    bad_input = 2
    limit_without_bounds = 3

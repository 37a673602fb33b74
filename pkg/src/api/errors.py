#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------


# ------------------------- ERROR exception classes ---------------------------

__all__ = [
    'Error',
    'InvalidInstanceError',
    'NotLatticeConvexError',
    'RcUndefinedError',
    'PreconditionError',
    'InternalError'
]


class Error(Exception):
    """Base class for exceptions in this package.
    """
    def __init__(self, msg='Unknown error'):
        self.msg = msg

    def __str__(self):
        return self.msg


class InvalidInstanceError(Error):
    def __init__(self, reason):
        self.msg = 'Invalid instance: %s' % reason


class NotLatticeConvexError(InvalidInstanceError):
    def __init__(self):
        self.msg = 'Invalid instance: X is not lattice-convex'


class RcUndefinedError(Error):
    """ Raised when some point of Y cannot be cut off on its own,
    so no relaxation exists for the given margin.
    """
    def __init__(self, point, eps):
        self.point = point
        self.msg = 'Point %s is not separable from X with margin %s' % (point, eps)


class PreconditionError(Error):
    def __init__(self, msg):
        self.msg = 'Precondition violated: %s' % msg


class InternalError(Error):
    def __init__(self, msg):
        self.msg = 'Internal error: %s' % msg

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

from src.api.errors import Error

__all__ = ['InstanceFormatError', 'SboxFormatError']


class InstanceFormatError(Error):
    """ An instance description (file or generator arguments) is malformed
    """
    def __init__(self, reason, fname: Optional[str] = None):
        self.fname = fname
        self.reason = reason
        if fname is None:
            self.msg = 'Invalid instance description: %s' % reason
        else:
            self.msg = "Invalid instance file '%s': %s" % (fname, reason)


class SboxFormatError(InstanceFormatError):
    def __init__(self, reason, fname: Optional[str] = None, lineno: Optional[int] = None):
        if lineno is not None:
            reason = 'line %i: %s' % (lineno, reason)
        super().__init__(reason, fname)

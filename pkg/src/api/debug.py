#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:sw=4:et:

# Simple debugging module

import os
import inspect

from .config import OPTIONS

__all__ = ['__DEBUG__']


def __DEBUG__(msg, level=1):
    if level > OPTIONS.Debug:
        return

    frame = inspect.getouterframes(inspect.currentframe())[1]
    OPTIONS.stderr.write('debug: %s:%i %s\n' % (os.path.basename(frame[1]), frame[2], msg))

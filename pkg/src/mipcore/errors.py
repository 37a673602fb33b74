#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from src.api.errors import Error

__all__ = ['PluginRegistrationError', 'IncompatibleOptionsError']


class PluginRegistrationError(Error):
    def __init__(self, msg):
        self.msg = 'Plugin registration error: %s' % msg


class IncompatibleOptionsError(Error):
    """ Raised when a model is asked for enhancements that cannot be combined
    """
    def __init__(self, msg):
        self.msg = 'Incompatible options: %s' % msg

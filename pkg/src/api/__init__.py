#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from src.api import debug  # noqa
from src.api import errors  # noqa
from src.api import errmsg  # noqa

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from typing import NamedTuple
from typing import Optional

from src.api.constants import SYM
from src.api.errors import PreconditionError
from src.mipcore import IncompatibleOptionsError

__all__ = ['EnhancementOptions']


class EnhancementOptions(NamedTuple):
    """ Model enhancements.

    hiding -- hiding pair cuts (in the pricing problem for column generation)
    sym -- symmetry handling: none, simple (u sorting) or advanced (lexicographic)
    prop -- convexity propagation
    prop_intersection -- intersection propagation (expensive, off by default)
    redundancy_coupling -- unused inequalities become 0 <= d*rho_X
    sort_coefficients -- sort used inequalities by their first coefficient;
        None means "with simple symmetry handling"
    """
    hiding: bool = False
    sym: str = SYM.none
    prop: bool = False
    prop_intersection: bool = False
    redundancy_coupling: bool = False
    sort_coefficients: Optional[bool] = None

    @property
    def coefficient_sorting(self) -> bool:
        if self.sort_coefficients is None:
            return self.sym == SYM.simple
        return self.sort_coefficients

    def validate(self) -> 'EnhancementOptions':
        if self.sym not in SYM.levels:
            raise PreconditionError("unknown symmetry level '%s'" % self.sym)
        if self.sym == SYM.advanced and self.coefficient_sorting:
            raise IncompatibleOptionsError('lexicographic symmetry handling cannot be combined '
                                           'with coefficient sorting rows')
        return self

    @property
    def setting(self) -> str:
        """ Short setting key, e.g. 'h1-sa-p0' """
        return 'h%i-s%s-p%i' % (self.hiding, SYM.to_flag(self.sym), self.prop)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" The cutting plane model: only s and u, with the conflict rows
    sum_{y in C} s[y][i] <= |C| - 1
for inseparable sets C added lazily.
"""

from typing import Optional
from typing import Sequence

from src.api.constants import MODEL
from src.api.constants import SENSE
from src.mipcore import MipModel

from .compact import add_covering_rows
from .compact import add_enhancements
from .compact import add_linking_rows
from .compact import set_facet_incumbent
from .conflicts import ConflictPool
from .conflicts import FractionalConflictSeparator
from .conflicts import IntegralConflictSeparator
from .enhancements import EnhancementOptions
from .instance import RcInstance
from .variables import ModelData
from .variables import VariableMap

__all__ = ['build_cut_model']


def build_cut_model(inst: RcInstance, opts: Optional[EnhancementOptions] = None,
                    generators: Optional[Sequence] = None) -> MipModel:
    """ Builds the cutting plane model. Redundancy coupling and coefficient
    sorting need the inequality variables and are ignored here.
    """
    opts = (opts or EnhancementOptions()).validate()
    model = MipModel(SENSE.min_, MODEL.cut)
    model.objective_integral = True
    vm = VariableMap.build(model, inst, geometry=False)

    add_covering_rows(model, inst, vm)
    add_linking_rows(model, inst, vm)

    pool = ConflictPool()
    model.register_separator(IntegralConflictSeparator(inst, vm, pool))
    model.register_separator(FractionalConflictSeparator(inst, vm, pool))
    add_enhancements(model, inst, vm, opts, generators)

    model.data = ModelData(MODEL.cut, inst, vm, opts, pool)
    set_facet_incumbent(model, inst, vm, opts)
    return model

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

""" The compact model: k inequalities a[i] . x <= b[i] as variables,
    min sum u[i]
    a[i] . x <= b[i]                              x in X
    sum_i s[y][i] >= 1                            y in Y
    a[i] . y - b[i] >= eps - M (1 - s[y][i])      y in Y
    s[y][i] <= u[i]
    a in [-1, 1], b in [-d rho_X, d rho_X], s and u binary
"""

from typing import Optional
from typing import Sequence

from src.api import errmsg
from src.api.constants import MODEL
from src.api.constants import SENSE
from src.api.constants import SYM
from src.mipcore import MipModel
from src.symmetry import detect_symmetries

from .enhancements import EnhancementOptions
from .hiding import HidingCutSeparator
from .hiding import hiding_cut_pool
from .incumbent import facet_solution
from .instance import RcInstance
from .propagation import ConvexityPropagator
from .propagation import IntersectionPropagator
from .symhandling import add_advanced_symmetry
from .symhandling import add_redundancy_coupling
from .symhandling import add_simple_symmetry
from .variables import ModelData
from .variables import VariableMap

__all__ = ['build_compact', 'add_covering_rows', 'add_linking_rows', 'add_enhancements', 'set_facet_incumbent']


def add_covering_rows(model: MipModel, inst: RcInstance, vm: VariableMap):
    for y in range(len(inst.Y)):
        model.add_row({var: 1 for var in vm.s[y]}, SENSE.ge, 1)


def add_linking_rows(model: MipModel, inst: RcInstance, vm: VariableMap):
    for y in range(len(inst.Y)):
        for i in range(inst.k):
            model.add_row({vm.s[y][i]: 1, vm.u[i]: -1}, SENSE.le, 0)


def add_enhancements(model: MipModel, inst: RcInstance, vm: VariableMap, opts: EnhancementOptions,
                     generators: Optional[Sequence] = None):
    """ Wires the options shared by the compact and the cutting plane model
    """
    if opts.hiding:
        model.register_separator(HidingCutSeparator(hiding_cut_pool(inst, vm)))

    if opts.sym == SYM.simple:
        add_simple_symmetry(model, inst, vm, opts.coefficient_sorting)
    elif opts.sym == SYM.advanced:
        if generators is None:
            generators = detect_symmetries(inst.X, inst.Y)
        add_advanced_symmetry(model, inst, vm, generators)

    if opts.prop:
        model.register_propagator(ConvexityPropagator(inst, vm))
    if opts.prop_intersection:
        model.register_propagator(IntersectionPropagator(inst, vm))


def set_facet_incumbent(model: MipModel, inst: RcInstance, vm: VariableMap, opts: EnhancementOptions):
    x, reason = facet_solution(inst, vm, opts)
    if x is None:
        errmsg.info('%s: no initial solution from the facets of conv(X): %s' % (model.name, reason))
        return
    model.set_incumbent(x)


def build_compact(inst: RcInstance, opts: Optional[EnhancementOptions] = None,
                  generators: Optional[Sequence] = None) -> MipModel:
    """ Builds the compact model with the given enhancements.
    generators (Y index permutations) are detected when advanced symmetry
    handling is asked for and none are given.
    """
    opts = (opts or EnhancementOptions()).validate()
    model = MipModel(SENSE.min_, MODEL.compact)
    model.objective_integral = True
    vm = VariableMap.build(model, inst, geometry=True)

    for i in range(inst.k):
        for x in inst.X:
            row = {vm.a[i][j]: x[j] for j in range(inst.dim)}
            row[vm.b[i]] = -1
            model.add_row(row, SENSE.le, 0)

    add_covering_rows(model, inst, vm)

    for y_pos, y in enumerate(inst.Y):
        for i in range(inst.k):
            row = {vm.a[i][j]: y[j] for j in range(inst.dim)}
            row[vm.b[i]] = -1
            row[vm.s[y_pos][i]] = -inst.M
            model.add_row(row, SENSE.ge, inst.eps - inst.M)

    add_linking_rows(model, inst, vm)
    add_enhancements(model, inst, vm, opts, generators)
    if opts.redundancy_coupling:
        add_redundancy_coupling(model, inst, vm)

    model.data = ModelData(MODEL.compact, inst, vm, opts)
    set_facet_incumbent(model, inst, vm, opts)
    return model

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
from typing import Sequence

from src.api import errmsg
from src.api.constants import MODEL
from src.api.constants import SENSE
from src.api.errors import PreconditionError
from src.geometry import Inequality
from src.mipcore import Limits
from src.mipcore import MipModel
from src.mipcore import solve_bnb

from .compact import build_compact
from .cutmodel import build_cut_model
from .enhancements import EnhancementOptions
from .incumbent import solution_from_inequalities
from .instance import RcInstance
from .relaxation import extract_relaxation
from .result import RcResult

__all__ = ['build_model', 'add_lower_bound', 'set_initial_relaxation', 'solve_matrix_model']


def build_model(inst: RcInstance, kind: str, opts: Optional[EnhancementOptions] = None,
                generators: Optional[Sequence] = None) -> MipModel:
    if kind == MODEL.compact:
        return build_compact(inst, opts, generators)
    if kind == MODEL.cut:
        return build_cut_model(inst, opts, generators)
    raise PreconditionError("'%s' is not a matrix model" % kind)


def add_lower_bound(model: MipModel, bound: int):
    """ Row sum u[i] >= bound """
    vm = model.data.vm
    model.add_row({var: 1 for var in vm.u}, SENSE.ge, bound)


def set_initial_relaxation(model: MipModel, ineqs: Sequence[Inequality]) -> bool:
    """ Replaces the initial solution by one built from the inequalities,
    if they form a relaxation with at most k members.
    """
    data = model.data
    x, reason = solution_from_inequalities(data.inst, data.vm, ineqs, data.opts)
    if x is None:
        errmsg.warning_incumbent_discarded(reason)
        return False

    if model.incumbent is None or model.lp.objective_value(x) < model.lp.objective_value(model.incumbent):
        model.set_incumbent(x)
    return True


def solve_matrix_model(inst: RcInstance, kind: str, opts: Optional[EnhancementOptions] = None,
                       limits: Optional[Limits] = None, lower_bound: Optional[int] = None,
                       initial: Optional[Sequence[Inequality]] = None,
                       generators: Optional[Sequence] = None) -> RcResult:
    """ Solves the compact or the cutting plane model and extracts the
    relaxation of the best solution found.
    """
    model = build_model(inst, kind, opts, generators)
    if lower_bound is not None:
        add_lower_bound(model, lower_bound)
    if initial is not None:
        set_initial_relaxation(model, initial)

    mip = solve_bnb(model, limits)
    relaxation = [] if mip.incumbent is None else extract_relaxation(inst, kind, model.data.vm, mip.incumbent)
    stats = {}
    if model.data.conflicts is not None:
        stats['conflicts'] = len(model.data.conflicts)
    return RcResult.from_mip(kind, mip, relaxation, stats)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from fractions import Fraction

from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional

from src.api.constants import STATUS
from src.geometry import Inequality
from src.mipcore import MipResult

__all__ = ['RcResult']


class RcResult(NamedTuple):
    """ Outcome of computing rc_eps with one of the models.
    value is the best known number of inequalities (the optimum when
    status is optimal) and relaxation holds them.
    """
    model: str
    status: str
    value: Optional[int]
    dual_bound: Optional[int]
    relaxation: List[Inequality]
    node_count: int
    lp_count: int
    wall_time: float
    root_lp_value: Optional[Fraction] = None
    root_bound: Optional[int] = None
    stats: Optional[Dict[str, Any]] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == STATUS.optimal

    @classmethod
    def from_mip(cls, model: str, mip: MipResult, relaxation: List[Inequality],
                 stats: Optional[Dict[str, Any]] = None) -> 'RcResult':
        def as_int(v):
            return None if v is None else int(v)

        return cls(model, mip.status, as_int(mip.primal_bound), as_int(mip.dual_bound), relaxation,
                   mip.node_count, mip.lp_count, mip.wall_time, mip.root_lp_value, as_int(mip.root_bound),
                   dict(stats or {}))

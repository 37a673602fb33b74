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
from typing import Sequence
from typing import Tuple

from src.mipcore import MipModel

from .enhancements import EnhancementOptions
from .instance import RcInstance

__all__ = ['VariableMap', 'ModelData']


class VariableMap:
    """ Indices of the model variables:
        u[i]     inequality i is used (binary)
        s[y][i]  point y (by position in Y) is cut off by inequality i (binary)
        a[i][j]  coefficient j of inequality i (continuous, compact model only)
        b[i]     right hand side of inequality i (continuous, compact model only)
    """
    def __init__(self, k: int, dim: int, n: int):
        self.k = k
        self.dim = dim
        self.n = n
        self.size = 0  # number of model variables
        self.geometry = False
        self.u: List[int] = []
        self.s: List[List[int]] = []
        self.a: List[List[int]] = []
        self.b: List[int] = []
        self._s_index: Dict[int, Tuple[int, int]] = {}

    @property
    def has_geometry(self) -> bool:
        return self.geometry

    @classmethod
    def build(cls, model: MipModel, inst: RcInstance, geometry: bool = True) -> 'VariableMap':
        result = cls(inst.k, inst.dim, len(inst.Y))
        k = inst.k
        result.u = [model.add_binary(1, 'u%i' % (i + 1)) for i in range(k)]
        for y in range(result.n):
            row = [model.add_binary(0, 's%i_%i' % (y + 1, i + 1)) for i in range(k)]
            result.s.append(row)
            for i, var in enumerate(row):
                result._s_index[var] = (y, i)

        result.geometry = geometry
        if geometry:
            bound = inst.b_bound
            for i in range(k):
                result.a.append([model.add_variable(0, -1, 1, False, 'a%i_%i' % (i + 1, j + 1))
                                 for j in range(inst.dim)])
            result.b = [model.add_variable(0, -bound, bound, False, 'b%i' % (i + 1)) for i in range(k)]

        result.size = model.num_vars
        return result

    def s_of(self, var: Optional[int]) -> Optional[Tuple[int, int]]:
        """ (y position, inequality index) of an s variable, None for others
        """
        if var is None:
            return None
        return self._s_index.get(var)

    def s_matrix(self, x: Sequence[Fraction]) -> List[List[Fraction]]:
        return [[x[var] for var in row] for row in self.s]

    def column(self, i: int) -> List[int]:
        """ s variables of inequality i, in Y order """
        return [row[i] for row in self.s]


class ModelData(NamedTuple):
    """ What a model builder attaches to MipModel.data
    """
    kind: str
    inst: RcInstance
    vm: VariableMap
    opts: EnhancementOptions
    conflicts: Any = None  # ConflictPool of the cut model

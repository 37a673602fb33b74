#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import csv
import json
import os

from fractions import Fraction

from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional

from src.api import errmsg
from src.api.config import OPTIONS
from src.api.constants import MODEL
from src.api.constants import STATUS
from src.api.debug import __DEBUG__
from src.api.errors import PreconditionError
from src.api.utils import fraction_str
from src.api.utils import open_file
from src.api.utils import parse_fraction
from src.api.utils import read_txt_file
from src.colgen import solve_colgen
from src.geometry import Inequality
from src.matrixmodels import EnhancementOptions
from src.matrixmodels import RcInstance
from src.matrixmodels import RcResult
from src.matrixmodels import solve_matrix_model
from src.matrixmodels import verify_relaxation
from src.mipcore import Limits
from src.separability import max_hiding_set_bruteforce
from src.separability import rc_bruteforce

from .errors import InstanceFormatError
from .hybrid import solve_hybrid
from .instances import InstanceSpec

__all__ = [
    'RunConfig',
    'Report',
    'solve_instance',
    'verify_result',
    'run_instance',
    'run_hybrid',
    'write_report',
    'load_report',
    'CSV_FIELDS'
]

CSV_FIELDS = ['name', 'group', 'model', 'setting', 'status', 'value', 'dual_bound',
              'nodes', 'lps', 'time', 'verified']


class RunConfig(NamedTuple):
    """ How to solve an instance.
    seed is recorded in the report; every choice of the solvers is
    deterministic, so no run depends on it.
    """
    model: str = MODEL.compact
    opts: EnhancementOptions = EnhancementOptions()
    limits: Optional[Limits] = None
    k: Optional[int] = None
    seed: Optional[int] = None
    out: Optional[str] = None
    verify: bool = True

    @property
    def setting(self) -> str:
        return '%s-%s' % (self.model, self.opts.setting)

    def validate(self) -> 'RunConfig':
        if not MODEL.is_valid(self.model):
            raise PreconditionError("unknown model '%s'" % self.model)
        self.opts.validate()
        return self


class Report(NamedTuple):
    name: str
    group: str
    model: str
    setting: str
    status: str
    value: Optional[int]
    dual_bound: Optional[int]
    relaxation: List[Inequality]
    node_count: int
    lp_count: int
    wall_time: float
    verified: bool
    reason: Optional[str] = None  # why the verification failed
    eps: Fraction = Fraction(1, 1000)
    time_limit: Optional[float] = None
    root_lp_value: Optional[Fraction] = None
    root_bound: Optional[int] = None
    hiding_bound: Optional[int] = None
    bruteforce: Optional[int] = None
    seed: Optional[int] = None
    stats: Optional[Dict[str, Any]] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == STATUS.optimal

    @property
    def file_name(self) -> str:
        return '%s.%s.json' % (self.name, self.setting)

    def to_json(self) -> Dict[str, Any]:
        def opt_fraction(v):
            return None if v is None else fraction_str(v)

        return {
            'name': self.name,
            'group': self.group,
            'model': self.model,
            'setting': self.setting,
            'status': self.status,
            'value': self.value,
            'dual_bound': self.dual_bound,
            'relaxation': [{'a': [fraction_str(c) for c in ineq.a], 'b': fraction_str(ineq.b)}
                           for ineq in self.relaxation],
            'node_count': self.node_count,
            'lp_count': self.lp_count,
            'wall_time': self.wall_time,
            'verified': self.verified,
            'reason': self.reason,
            'eps': fraction_str(self.eps),
            'time_limit': self.time_limit,
            'root_lp_value': opt_fraction(self.root_lp_value),
            'root_bound': self.root_bound,
            'hiding_bound': self.hiding_bound,
            'bruteforce': self.bruteforce,
            'seed': self.seed,
            'stats': dict(self.stats or {})
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any], fname: Optional[str] = None) -> 'Report':
        try:
            relaxation = [Inequality.make([parse_fraction(c) for c in ineq['a']], parse_fraction(ineq['b']))
                          for ineq in data['relaxation']]
            root_lp = data.get('root_lp_value')
            return cls(data['name'], data.get('group', ''), data['model'], data['setting'], data['status'],
                       data['value'], data['dual_bound'], relaxation, data['node_count'], data['lp_count'],
                       data['wall_time'], data['verified'], data.get('reason'),
                       parse_fraction(data.get('eps', '1/1000')), data.get('time_limit'),
                       None if root_lp is None else parse_fraction(root_lp), data.get('root_bound'),
                       data.get('hiding_bound'), data.get('bruteforce'), data.get('seed'), data.get('stats'))
        except (KeyError, TypeError) as e:
            raise InstanceFormatError('malformed report (%s)' % e, fname)

    def csv_row(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'group': self.group,
            'model': self.model,
            'setting': self.setting,
            'status': self.status,
            'value': '' if self.value is None else self.value,
            'dual_bound': '' if self.dual_bound is None else self.dual_bound,
            'nodes': self.node_count,
            'lps': self.lp_count,
            'time': '%.3f' % self.wall_time,
            'verified': int(self.verified)
        }


def solve_instance(inst: RcInstance, model: str, opts: EnhancementOptions, limits: Limits) -> RcResult:
    if model in (MODEL.compact, MODEL.cut):
        return solve_matrix_model(inst, model, opts, limits)
    if model == MODEL.colgen:
        return solve_colgen(inst, opts, limits)
    if model == MODEL.hybrid:
        return solve_hybrid(inst, opts, limits)
    raise PreconditionError("unknown model '%s'" % model)


def verify_result(inst: RcInstance, result: RcResult, bruteforce: Optional[int] = None) -> Optional[str]:
    """ Re-checks a result exactly. Returns None if it is sound, or the reason.
    An optimal result must carry as many inequalities as its value and
    agree with the covering oracle value, when given.
    """
    if result.status == STATUS.infeasible:
        return 'the model is infeasible (k = %i)' % inst.k
    if result.value is None:
        return None if result.status == STATUS.limit else 'no solution'

    if len(result.relaxation) != result.value:
        return '%i inequalities for value %i' % (len(result.relaxation), result.value)

    reason = verify_relaxation(inst, result.relaxation)
    if reason is not None:
        return reason

    if result.dual_bound is not None and result.dual_bound > result.value:
        return 'dual bound %i exceeds value %i' % (result.dual_bound, result.value)

    if bruteforce is not None:
        if result.value < bruteforce:
            return 'value %i is below the covering optimum %i' % (result.value, bruteforce)
        if result.is_optimal and result.value != bruteforce:
            return 'value %i differs from the covering optimum %i' % (result.value, bruteforce)

    return None


def run_instance(spec: InstanceSpec, cfg: RunConfig) -> Report:
    """ Builds the instance, solves it with the configured model and
    verifies the outcome. Verification failures are reported as errors
    and leave the report unverified.
    """
    cfg.validate()
    limits = cfg.limits or Limits.from_options()
    inst = spec.to_instance(k=cfg.k)
    __DEBUG__('running %s with %s: %s' % (spec.name, cfg.setting, inst), 1)

    result = solve_instance(inst, cfg.model, cfg.opts, limits)
    if result.status == STATUS.limit:
        errmsg.warning_limit_reached(spec.name, result.value, result.dual_bound)

    hiding = bruteforce = None
    n = len(inst.Y)
    if n <= OPTIONS.hiding_bound_limit:
        hiding = max_hiding_set_bruteforce(inst.X, inst.Y)

    reason = None
    if cfg.verify:
        if n <= OPTIONS.bruteforce_limit:
            bruteforce = rc_bruteforce(inst.X, inst.Y, inst.eps)
        reason = verify_result(inst, result, bruteforce)
        if reason is None and hiding is not None and result.is_optimal and hiding > result.value:
            reason = 'hiding set of size %i exceeds value %i' % (hiding, result.value)
        if reason is not None:
            errmsg.error_verification_failed(spec.name, reason)

    verified = cfg.verify and reason is None and result.value is not None
    report = Report(spec.name, spec.group, cfg.model, cfg.setting, result.status, result.value, result.dual_bound,
                    result.relaxation, result.node_count, result.lp_count, result.wall_time, verified, reason,
                    inst.eps, limits.time, result.root_lp_value, result.root_bound, hiding, bruteforce,
                    cfg.seed, result.stats)

    if cfg.out is not None:
        write_report(report, cfg.out)
    return report


def run_hybrid(spec: InstanceSpec, cfg: RunConfig) -> Report:
    return run_instance(spec, cfg._replace(model=MODEL.hybrid))


def write_report(report: Report, out_dir: str, csv_name: str = 'reports.csv') -> str:
    """ Writes the report as JSON into out_dir and appends its row to the
    CSV file there. Returns the JSON file name.
    """
    os.makedirs(out_dir, exist_ok=True)
    fname = os.path.join(out_dir, report.file_name)
    with open_file(fname, 'wt', 'utf-8') as f:
        json.dump(report.to_json(), f, indent=2)
        f.write('\n')

    csv_file = os.path.join(out_dir, csv_name)
    new = not os.path.isfile(csv_file)
    with open_file(csv_file, 'at', 'utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=CSV_FIELDS)
        if new:
            writer.writeheader()
        writer.writerow(report.csv_row())

    return fname


def load_report(fname: str) -> Report:
    try:
        data = json.loads(read_txt_file(fname))
    except ValueError as e:
        raise InstanceFormatError('not valid JSON (%s)' % e, fname)
    return Report.from_json(data, fname)

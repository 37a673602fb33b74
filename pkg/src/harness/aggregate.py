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
import glob
import math
import os

from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Union

from src.api import global_
from src.api.errors import PreconditionError
from src.api.utils import open_file

from .runner import Report
from .runner import load_report

__all__ = ['sgm', 'AggregateRow', 'aggregate', 'load_reports', 'write_csv', 'format_table', 'AGG_FIELDS']

AGG_FIELDS = ['setting', 'group', 'solved', 'sgm_time', 'sgm_nodes']


def sgm(values: Iterable, shift) -> float:
    """ Shifted geometric mean: (prod (v + shift)) ** (1 / n) - shift
    """
    values = [float(v) for v in values]
    if not values:
        raise PreconditionError('the shifted geometric mean of no values')

    shift = float(shift)
    if any(v + shift <= 0 for v in values):
        raise PreconditionError('values plus shift must be positive')

    return math.exp(math.fsum(math.log(v + shift) for v in values) / len(values)) - shift


class AggregateRow(NamedTuple):
    setting: str
    group: str
    count: int
    solved: int
    sgm_time: float
    sgm_nodes: float

    def csv_row(self) -> Dict[str, str]:
        return {
            'setting': self.setting,
            'group': self.group,
            'solved': str(self.solved),
            'sgm_time': '%.2f' % self.sgm_time,
            'sgm_nodes': '%.1f' % self.sgm_nodes
        }


def _time_of(report: Report) -> float:
    """ Unsolved runs count with their time limit """
    if not report.is_optimal and report.time_limit is not None:
        return max(report.time_limit, report.wall_time)
    return report.wall_time


def aggregate(reports: Iterable[Report], group_by: Union[str, Callable[[Report], str]] = 'group') -> List[AggregateRow]:
    """ One row per (setting, group): number of solved runs and shifted
    geometric means of time and nodes. group_by is a report field name
    or a function of the report. Rows are ordered by setting, then group.
    """
    if not callable(group_by) and group_by not in Report._fields:
        raise PreconditionError("reports have no field '%s'" % group_by)

    key = group_by if callable(group_by) else (lambda r: str(getattr(r, group_by)))
    groups: Dict[tuple, List[Report]] = {}
    for r in reports:
        groups.setdefault((r.setting, key(r)), []).append(r)

    result = []
    for (setting, group), members in sorted(groups.items()):
        result.append(AggregateRow(setting, group, len(members),
                                   sum(1 for r in members if r.is_optimal),
                                   sgm((_time_of(r) for r in members), global_.SGM_TIME_SHIFT),
                                   sgm((r.node_count for r in members), global_.SGM_NODES_SHIFT)))
    return result


def load_reports(directory: str) -> List[Report]:
    """ Every JSON report in the directory, in file name order """
    return [load_report(fname) for fname in sorted(glob.glob(os.path.join(directory, '*.json')))]


def write_csv(rows: Iterable[AggregateRow], fname: str):
    with open_file(fname, 'wt', 'utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=AGG_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.csv_row())


def format_table(rows: Iterable[AggregateRow]) -> str:
    """ The rows as aligned text, one line per row after a header """
    lines = [AGG_FIELDS]
    for row in rows:
        values = row.csv_row()
        lines.append([values[field] for field in AGG_FIELDS])

    widths = [max(len(line[i]) for line in lines) for i in range(len(AGG_FIELDS))]
    text = []
    for line in lines:
        cells = [c.ljust(w) if i < 2 else c.rjust(w) for i, (c, w) in enumerate(zip(line, widths))]
        text.append('  '.join(cells).rstrip())
    return '\n'.join(text)

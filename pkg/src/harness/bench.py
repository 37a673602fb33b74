#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# rclab - exact relaxation complexity laboratory
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import itertools
import multiprocessing

from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from src.api import errmsg
from src.api.constants import MODEL
from src.api.constants import SYM
from src.api.errors import Error
from src.api.errors import PreconditionError
from src.matrixmodels import EnhancementOptions

from .generators import SHAPES
from .generators import generate_basic
from .generators import generate_downcld
from .generators import sample_downcld_family
from .instances import InstanceSpec
from .runner import Report
from .runner import RunConfig
from .runner import run_instance
from .runner import write_report

__all__ = ['SUITES', 'suite', 'enhancement_grid', 'default_configs', 'run_bench']


def _basic(dims: Sequence[int], radii: Sequence[int]) -> List[InstanceSpec]:
    return [generate_basic(shape, d, r) for shape in SHAPES for d in dims for r in radii]


def _tiny() -> List[InstanceSpec]:
    return _basic((1, 2), (1, ))


def _desk() -> List[InstanceSpec]:
    return _basic((1, 2, 3), (1, 2)) + _basic((4, ), (1, ))


def _downcld() -> List[InstanceSpec]:
    return [generate_downcld(antichain, d) for d in (3, 4) for antichain in sample_downcld_family(d)]


SUITES = {
    'tiny': _tiny,
    'desk': _desk,
    'downcld': _downcld
}


def suite(name: str) -> List[InstanceSpec]:
    if name not in SUITES:
        raise PreconditionError("unknown suite '%s' (use one of: %s)" % (name, ', '.join(SUITES)))
    return SUITES[name]()


def enhancement_grid() -> List[EnhancementOptions]:
    """ Every combination of hiding cuts, symmetry level and propagation """
    return [EnhancementOptions(hiding, sym, prop)
            for hiding, sym, prop in itertools.product((False, True), SYM.levels, (False, True))]


def default_configs(models: Iterable[str] = MODEL.models, grid: bool = False) -> List[RunConfig]:
    options = enhancement_grid() if grid else [EnhancementOptions()]
    return [RunConfig(model, opts) for model in models for opts in options]


def _run_task(task: Tuple[InstanceSpec, RunConfig]) -> Optional[Report]:
    spec, cfg = task
    try:
        return run_instance(spec, cfg)
    except Error as e:
        errmsg.error('%s: %s' % (spec.name, e))
        return None


def run_bench(specs: Sequence[InstanceSpec], configs: Sequence[RunConfig], out: Optional[str] = None,
              workers: int = 1) -> List[Report]:
    """ Runs every configuration on every instance, in a pool of worker
    processes when workers > 1. Reports are written to out once all the
    runs are done, in task order.
    """
    tasks = [(spec, cfg._replace(out=None)) for spec in specs for cfg in configs]
    if workers > 1:
        with multiprocessing.Pool(min(workers, multiprocessing.cpu_count())) as pool:
            results = pool.map(_run_task, tasks)
    else:
        results = [_run_task(task) for task in tasks]

    reports = [r for r in results if r is not None]
    if out is not None:
        for report in reports:
            write_report(report, out)
    return reports

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .errors import InstanceFormatError
from .errors import SboxFormatError
from .instances import YSOURCE
from .instances import InstanceSpec
from .instances import load_instance
from .instances import save_instance
from .generators import generate_basic
from .generators import generate_downcld
from .generators import sample_downcld_family
from .generators import sbox_graph
from .generators import read_sbox
from .hybrid import solve_hybrid
from .runner import RunConfig
from .runner import Report
from .runner import run_instance
from .runner import run_hybrid
from .runner import write_report
from .runner import load_report
from .aggregate import sgm
from .aggregate import aggregate
from .aggregate import load_reports
from .aggregate import format_table
from .bench import suite
from .bench import run_bench

__all__ = [
    'InstanceFormatError',
    'SboxFormatError',
    'YSOURCE',
    'InstanceSpec',
    'load_instance',
    'save_instance',
    'generate_basic',
    'generate_downcld',
    'sample_downcld_family',
    'sbox_graph',
    'read_sbox',
    'solve_hybrid',
    'RunConfig',
    'Report',
    'run_instance',
    'run_hybrid',
    'write_report',
    'load_report',
    'sgm',
    'aggregate',
    'load_reports',
    'format_table',
    'suite',
    'run_bench'
]

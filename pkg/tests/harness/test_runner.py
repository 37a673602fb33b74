#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import unittest

from io import StringIO

import pytest

from src.api import config
from src.api import global_
from src.api.constants import MODEL
from src.api.constants import STATUS
from src.api.errors import PreconditionError
from src.geometry import Inequality
from src.harness import InstanceSpec
from src.harness import generate_basic
from src.harness import RunConfig
from src.harness import load_report
from src.harness import run_hybrid
from src.harness import run_instance
from src.harness.bench import default_configs
from src.harness.bench import enhancement_grid
from src.harness.bench import run_bench
from src.harness.bench import suite
from src.harness.runner import solve_instance
from src.harness.runner import verify_result
from src.matrixmodels import EnhancementOptions
from src.matrixmodels import RcResult
from src.mipcore import Limits
from src.separability import rc_bruteforce

POINT = InstanceSpec('point', 1, ((0, ), ), Y=((-1, ), (1, )), group='line')

PLANAR = [
    generate_basic('simplex', 2),
    generate_basic('cross', 2),
    generate_basic('cube', 2),
    InstanceSpec('trapezoid', 2, ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1)), l1_radius=1, group='trapezoid')
]


@pytest.fixture(scope='module')
def planar_optima():
    config.init()
    result = {}
    for spec in PLANAR:
        inst = spec.to_instance()
        result[spec.name] = rc_bruteforce(inst.X, inst.Y, inst.eps)
    return result


class TestRunner(unittest.TestCase):
    def setUp(self):
        config.init()
        global_.reset()
        config.OPTIONS.stderr = StringIO()

    def tearDown(self):
        config.init()
        global_.reset()

    def test_every_model(self):
        for model in MODEL.models:
            report = run_instance(POINT, RunConfig(model))
            self.assertEqual(report.status, STATUS.optimal)
            self.assertEqual(report.value, 2)
            self.assertEqual(report.model, model)
            self.assertEqual(report.setting, '%s-h0-s0-p0' % model)
            self.assertEqual(report.group, 'line')
            self.assertEqual(report.bruteforce, 2)
            self.assertLessEqual(report.hiding_bound, 2)
            self.assertTrue(report.verified)
            self.assertIsNone(report.reason)
        self.assertEqual(global_.has_errors, 0)

    def test_hybrid(self):
        report = run_hybrid(POINT, RunConfig(MODEL.compact, EnhancementOptions(hiding=True)))
        self.assertEqual(report.model, MODEL.hybrid)
        self.assertEqual(report.value, 2)
        self.assertEqual(report.root_bound, 2)
        self.assertGreaterEqual(report.node_count, 1)
        for key in ('colgen_lps', 'colgen_columns', 'compact_nodes', 'compact_lps'):
            self.assertIn(key, report.stats)

    def test_no_verification(self):
        report = run_instance(POINT, RunConfig(MODEL.cut, verify=False))
        self.assertFalse(report.verified)
        self.assertIsNone(report.bruteforce)

    def test_node_limit(self):
        report = run_instance(POINT, RunConfig(MODEL.compact, limits=Limits(nodes=0)))
        self.assertEqual(report.status, STATUS.limit)
        self.assertEqual(report.value, 2)  # the facets are the initial solution
        self.assertIsNone(report.dual_bound)
        self.assertIn('limit reached', config.OPTIONS.stderr.getvalue())

    def test_unknown_model(self):
        self.assertRaises(PreconditionError, run_instance, POINT, RunConfig('simplex'))

    def test_verify_result(self):
        inst = POINT.to_instance()
        wrong = RcResult(MODEL.compact, STATUS.optimal, 1, 1, [Inequality.make([1], 0)], 1, 1, 0.0)
        self.assertIn('not cut off', verify_result(inst, wrong))

        good = [Inequality.make([1], 0), Inequality.make([-1], 0)]
        right = RcResult(MODEL.compact, STATUS.optimal, 2, 2, good, 1, 1, 0.0)
        self.assertIsNone(verify_result(inst, right, 2))
        self.assertIn('differs', verify_result(inst, right._replace(value=2), 1))
        self.assertIn('exceeds', verify_result(inst, right._replace(dual_bound=3)))
        self.assertIn('inequalities for value', verify_result(inst, right._replace(value=3)))

        self.assertIsNone(verify_result(inst, right._replace(status=STATUS.limit, value=None, relaxation=[])))
        self.assertIn('infeasible', verify_result(inst, right._replace(status=STATUS.infeasible)))


def test_report_files(tmp_path):
    config.init()
    global_.reset()
    out = str(tmp_path)
    report = run_instance(POINT, RunConfig(MODEL.cut, seed=7, out=out))
    fname = os.path.join(out, 'point.cut-h0-s0-p0.json')
    assert os.path.isfile(fname)

    loaded = load_report(fname)
    assert loaded.value == report.value == 2
    assert loaded.status == report.status
    assert loaded.seed == 7
    assert loaded.eps == report.eps
    assert len(loaded.relaxation) == 2

    run_instance(POINT, RunConfig(MODEL.compact, out=out))
    with open(os.path.join(out, 'reports.csv')) as f:
        lines = f.read().split()
    assert len(lines) == 3
    assert lines[0].startswith('name,group,model,setting')


def test_bench(tmp_path):
    config.init()
    global_.reset()
    assert len(suite('tiny')) == 6
    with pytest.raises(PreconditionError):
        suite('huge')

    assert len(enhancement_grid()) == 12
    assert len(default_configs([MODEL.compact], grid=True)) == 12
    assert len(default_configs()) == len(MODEL.models)

    reports = run_bench([POINT], [RunConfig(MODEL.compact), RunConfig(MODEL.colgen)], str(tmp_path))
    assert [r.value for r in reports] == [2, 2]
    assert len(list(tmp_path.glob('*.json'))) == 2


@pytest.mark.parametrize('model', MODEL.models)
@pytest.mark.parametrize('spec', PLANAR, ids=[spec.name for spec in PLANAR])
def test_every_setting_agrees_with_the_covering_oracle(spec, model, planar_optima):
    config.init()
    global_.reset()
    config.OPTIONS.stderr = StringIO()
    inst = spec.to_instance()
    expected = planar_optima[spec.name]
    for opts in enhancement_grid():
        result = solve_instance(inst, model, opts, Limits())
        assert result.status == STATUS.optimal, opts.setting
        assert result.value == expected, opts.setting
        assert verify_result(inst, result, expected) is None, opts.setting
    assert global_.has_errors == 0

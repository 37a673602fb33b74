#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest
import sys

from fractions import Fraction

from src.api import config, global_


class TestConfig(unittest.TestCase):
    """ Tests api.config initialization
    """
    def setUp(self):
        config.OPTIONS.reset()

    def tearDown(self):
        config.init()

    def test_init(self):
        config.init()
        self.assertEqual(config.OPTIONS.Debug, 0)
        self.assertEqual(config.OPTIONS.stdout, sys.stdout)
        self.assertEqual(config.OPTIONS.stderr, sys.stderr)
        self.assertIsNone(config.OPTIONS.StdErrFileName)
        self.assertEqual(config.OPTIONS.eps, Fraction(1, 1000))
        self.assertEqual(config.OPTIONS.time_limit, global_.DEFAULT_TIME_LIMIT)
        self.assertIsNone(config.OPTIONS.node_limit)
        self.assertEqual(config.OPTIONS.node_selection, 'best')
        self.assertEqual(config.OPTIONS.max_prop_rounds, global_.DEFAULT_MAX_PROP_ROUNDS)
        self.assertEqual(config.OPTIONS.max_cut_rounds, global_.DEFAULT_MAX_CUT_ROUNDS)
        self.assertEqual(config.OPTIONS.pivot_rule, 'dantzig')
        self.assertEqual(config.OPTIONS.degenerate_switch, global_.DEFAULT_DEGENERATE_SWITCH)
        self.assertEqual(config.OPTIONS.bruteforce_limit, 10)
        self.assertEqual(config.OPTIONS.hiding_bound_limit, global_.DEFAULT_HIDING_BOUND_LIMIT)
        self.assertTrue(config.OPTIONS.check_bounds)

    def test_initted_values(self):
        config.init()
        self.assertEqual(sorted(config.OPTIONS._options.keys()), [
            'Debug',
            'StdErrFileName',
            'bruteforce_limit',
            'check_bounds',
            'degenerate_switch',
            'eps',
            'hiding_bound_limit',
            'max_cut_rounds',
            'max_prop_rounds',
            'node_limit',
            'node_selection',
            'pivot_rule',
            'stderr',
            'stdout',
            'time_limit'
        ])

    def test_eps_accepts_rational_strings(self):
        config.init()
        config.OPTIONS.eps = '1/100'
        self.assertEqual(config.OPTIONS.eps, Fraction(1, 100))


if __name__ == '__main__':
    unittest.main()

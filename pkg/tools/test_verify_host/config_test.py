#!/usr/bin/env python
from __future__ import print_function, division
import os
import shutil
import sys
import tempfile
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.config import (DEFAULT_CONFIG, parse_tolerance, resolve_tolerance, load_config_file, merge_config)
from sasakian.errors import InputError


class ToleranceTests(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_tolerance("axioms=1e-9"), ("axioms", 1e-9))
        self.assertEqual(parse_tolerance("soliton.commutation=0.01"), ("soliton.commutation", 0.01))
        for text in ("axioms", "=1e-9", "axioms=tight", "axioms=0", "axioms=-1"):
            with self.assertRaises(InputError):
                parse_tolerance(text)

    def test_lookup_order(self):
        user = {"soliton": 1e-2}
        self.assertEqual(resolve_tolerance({}, "soliton", "commutation"), 1e-3)
        self.assertEqual(resolve_tolerance({}, "soliton", "ricci-form"), 1e-5)
        self.assertEqual(resolve_tolerance(user, "soliton", "commutation"), 1e-2)
        user["soliton.commutation"] = 5e-4
        self.assertEqual(resolve_tolerance(user, "soliton", "commutation"), 5e-4)

    def test_finite_difference_defaults(self):
        self.assertEqual(resolve_tolerance({}, "star-ricci", "yano-kon", exact=False), 1e-4)
        self.assertEqual(resolve_tolerance({}, "star-ricci", "yano-kon"), 1e-6)
        self.assertEqual(resolve_tolerance({}, "axioms", "eta-xi", exact=False), 1e-8)

    def test_unknown_suite(self):
        with self.assertRaises(InputError):
            resolve_tolerance({}, "topology", "euler")


class ConfigFileTests(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def _write(self, text):
        path = os.path.join(self.tmp, "verify.yml")
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_load(self):
        configs = load_config_file(self._write("model: r2n1\nn: 2\ntol:\n  axioms: 1.0e-9\n"))
        self.assertEqual(configs["model"], "r2n1")
        self.assertEqual(configs["n"], 2)
        self.assertEqual(configs["tol"], {"axioms": 1e-9})

    def test_empty_file(self):
        self.assertEqual(load_config_file(self._write("")), {})

    def test_bad_files(self):
        for text in ("model: [r2n1\n", "- model\n", "colour: red\n", "tol: 3\n", "tol:\n  axioms: loose\n"):
            with self.assertRaises(InputError):
                load_config_file(self._write(text))
        with self.assertRaises(InputError):
            load_config_file(os.path.join(self.tmp, "missing.yml"))


class MergeTests(unittest.TestCase):

    def test_precedence(self):
        flags = dict((k, None) for k in DEFAULT_CONFIG)
        flags["tol"] = {"axioms": 1e-10}
        flags["n"] = 3
        configs = {"n": 2, "points": 5, "tol": {"axioms": 1e-9, "soliton": 1e-4}}
        merged = merge_config(flags, configs)
        self.assertEqual(merged["n"], 3)
        self.assertEqual(merged["points"], 5)
        self.assertEqual(merged["model"], "sphere")
        self.assertEqual(merged["tol"], {"axioms": 1e-10, "soliton": 1e-4})

    def test_defaults_are_not_modified(self):
        merge_config({"tol": {"axioms": 1.0}})
        self.assertEqual(DEFAULT_CONFIG["tol"], {})


if __name__ == "__main__":
    unittest.main()

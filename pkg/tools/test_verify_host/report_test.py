#!/usr/bin/env python
from __future__ import print_function, division
import json
import os
import shutil
import sys
import tempfile
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.errors import InputError, EvaluationError
from sasakian.models import euclidean_chart
from sasakian.report import ResidualReport, emit_report, exit_code, write_xunit, SCHEMA_VERSION
from sasakian.sampling import SamplePlan, SuiteRun, Premise


def sample_reports():
    return [
        ResidualReport("axioms", "phi-squared", "phi^2 = -I + eta (x) xi", 1e-12, 1e-8, worst_point=[0.1, 0.2, 0.3]),
        ResidualReport("axioms", "eta-xi", "eta(xi) = 1", 1e-3, 1e-8),
        ResidualReport("conformal", "star-eta-einstein", "Ric* = beta g^phi", 0.5, 1e-6, "violated",
                       note="premise phi-conformally-flat violated"),
        ResidualReport("conformal", "eta-einstein", "Ric = alpha g + gamma eta (x) eta", None, 1e-6,
                       cause="stencil leaves the chart"),
    ]


class ResidualReportTests(unittest.TestCase):

    def test_outcomes(self):
        ok, bad, skipped, broken = sample_reports()
        self.assertEqual((ok.result, bad.result, skipped.result, broken.result), ("PASS", "FAIL", "SKIP", "FAIL"))
        self.assertTrue(skipped.skipped)
        self.assertFalse(skipped.failed)
        self.assertTrue(broken.failed)

    def test_unknown_premise_status(self):
        with self.assertRaises(InputError):
            ResidualReport("axioms", "eta-xi", "eta(xi) = 1", 0.0, 1e-8, "maybe")

    def test_exit_code(self):
        reports = sample_reports()
        self.assertEqual(exit_code(reports), 1)
        self.assertEqual(exit_code([reports[0], reports[2]]), 0)
        self.assertEqual(exit_code([]), 0)


class PlanEvaluationTests(unittest.TestCase):

    def setUp(self):
        self.run = SuiteRun("soliton", euclidean_chart(3), SamplePlan(point_count=2, seed=0, vectors_per_point=1))

    def test_pooled_residual(self):
        report = self.run.evaluate_plan("ricci-form-fit", "pooled fit", lambda: 1e-9)
        self.assertTrue(report.passed)
        self.assertEqual(report.premise_status, "n/a")
        self.assertIsNone(report.worst_point)
        self.assertTrue(self.run.evaluate_plan("ricci-form-fit", "pooled fit", lambda: 1.0).failed)

    def test_gated(self):
        gate = Premise.violated("star-soliton", "premise star-soliton violated")
        report = self.run.evaluate_plan("diagnostic-jacobi", "jacobi", lambda: 1.0, gate, "lambda class zero")
        self.assertTrue(report.skipped)
        self.assertEqual(report.note, "lambda class zero; premise star-soliton violated")

    def test_evaluation_failure(self):
        def broken():
            raise EvaluationError("pooled fit is singular")

        report = self.run.evaluate_plan("ricci-form-fit", "pooled fit", broken)
        self.assertTrue(report.failed)
        self.assertIsNone(report.max_residual)
        self.assertEqual(report.cause, "pooled fit is singular")


class EmitTests(unittest.TestCase):

    def test_json(self):
        text = emit_report(sample_reports(), "json", "sphere", 1, 0)
        rows = json.loads(text)
        self.assertEqual(len(rows), 4)
        self.assertEqual(list(rows[0].keys())[:6], ["schemaVersion", "model", "n", "seed", "suite", "identity"])
        self.assertEqual(rows[0]["schemaVersion"], SCHEMA_VERSION)
        self.assertTrue(rows[0]["pass"])
        self.assertEqual(rows[0]["worstPoint"], [0.1, 0.2, 0.3])
        self.assertTrue(rows[2]["skipped"])
        self.assertEqual(rows[2]["premiseStatus"], "violated")
        self.assertIsNone(rows[3]["maxResidual"])
        self.assertEqual(rows[3]["cause"], "stencil leaves the chart")
        self.assertTrue(text.endswith("\n"))

    def test_markdown(self):
        text = emit_report(sample_reports(), "markdown", "sphere", 1, 0)
        self.assertIn("# sphere (n=1, seed=0)", text)
        self.assertIn("## axioms", text)
        self.assertIn("## conformal", text)
        self.assertIn("| eta-xi | eta(xi) = 1 | 1.000e-03 | 1.0e-08 | n/a | FAIL |", text)
        self.assertIn("| n/a | 1.0e-06 | n/a | FAIL | stencil leaves the chart |", text)

    def test_unknown_format(self):
        with self.assertRaises(InputError):
            emit_report(sample_reports(), "html")


class XunitTests(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_write(self):
        path = os.path.join(self.tmp, "results.xml")
        write_xunit(sample_reports(), path)
        with open(path, "rb") as f:
            data = f.read().decode("utf-8")
        self.assertIn("axioms.phi-squared", data)
        self.assertIn("conformal.star-eta-einstein", data)
        self.assertIn("above tolerance", data)
        self.assertIn("stencil leaves the chart", data)


if __name__ == "__main__":
    unittest.main()

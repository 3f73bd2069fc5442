#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.calculus import riemann
from sasakian.conformal import (weyl_tensor, beta_from_scalar, weyl_trace_check, sectional_curvature, phi_sectional,
                                horizontal_unit, constant_curvature_fit, conformally_flat_chain, conformal_suite,
                                phi_conformal_star_eta_einstein, phi_conformal_flatness_residual)
from sasakian.errors import DegenerateError, ValidationError
from sasakian.jet import Jet, jet_einsum
from sasakian.models import standard_sasakian, unit_sphere, euclidean_chart
from sasakian.sampling import SamplePlan


def failures(reports):
    return ["%s/%s: %s" % (r.suite, r.identity, r.max_residual if r.cause is None else r.cause)
            for r in reports if r.failed]


def conformally_flat_chart():
    weight = np.array([0.1, -0.2, 0.05, 0.0, 0.1])
    bend = np.diag([0.2, 0.0, 0.1, 0.0, 0.0])

    def f(p):
        return weight.dot(p) + 0.5 * p.dot(bend).dot(p)

    def f_jet(p, order):
        x = Jet.coordinates(p, order)
        return jet_einsum('a,a->', x, weight) + 0.5 * jet_einsum('a,ab,b->', x, bend, x)

    return euclidean_chart(5, (f, f_jet), half_width=0.5, name="conformal")


class WeylTests(unittest.TestCase):

    def test_sphere_is_conformally_flat(self):
        s = unit_sphere(2)
        p = s.manifold.center
        assert_allclose(weyl_tensor(s, p).components, np.zeros((5,) * 4), atol=1e-10)

    def test_conformal_chart(self):
        m = conformally_flat_chart()
        p = np.array([0.1, 0.0, -0.1, 0.2, 0.05])
        self.assertGreater(np.abs(riemann(m, p).components).max(), 1e-3)
        assert_allclose(weyl_tensor(m, p).components, np.zeros((5,) * 4), atol=1e-10)

    def test_r5_is_not_conformally_flat(self):
        s = standard_sasakian(2)
        p = np.array([0.1, 0.2, -0.1, 0.0, 0.3])
        self.assertGreater(np.abs(weyl_tensor(s, p).components).max(), 1e-2)

    def test_trace_free(self):
        plan = SamplePlan(point_count=3, seed=3, vectors_per_point=2)
        self.assertEqual(failures(weyl_trace_check(standard_sasakian(2), plan)), [])

    def test_beta(self):
        self.assertAlmostEqual(beta_from_scalar(20.0, 2), 1.0)
        self.assertAlmostEqual(beta_from_scalar(-2.0, 1), -3.0)


class SectionalCurvatureTests(unittest.TestCase):

    def test_sphere(self):
        s = unit_sphere(1)
        p = s.manifold.center
        self.assertAlmostEqual(sectional_curvature(s, p, [1.0, 0, 0], [0.2, 1.0, 0.3]), 1.0, places=10)
        with self.assertRaises(DegenerateError):
            sectional_curvature(s, p, [1.0, 0, 0], [2.0, 0, 0])

    def test_phi_sectional_of_r2n1(self):
        s = standard_sasakian(1)
        p = np.array([0.1, 0.3, -0.2])
        x = horizontal_unit(s, p, [1.0, 0.5, 0.2])
        self.assertAlmostEqual(phi_sectional(s, p, x), -3.0, places=9)
        with self.assertRaises(ValidationError):
            phi_sectional(s, p, s.xi(p) / 2.0)
        with self.assertRaises(ValidationError):
            phi_sectional(s, p, 2.0 * x)
        with self.assertRaises(DegenerateError):
            horizontal_unit(s, p, s.xi(p))

    def test_constant_curvature_fit(self):
        plan = SamplePlan(point_count=3, seed=9, vectors_per_point=1)
        fit = constant_curvature_fit(unit_sphere(2), plan)
        self.assertAlmostEqual(fit.kappa, 1.0, places=9)
        self.assertLess(fit.residual, 1e-9)


class ConformalSuiteTests(unittest.TestCase):

    def setUp(self):
        self.plan = SamplePlan(point_count=3, seed=4, vectors_per_point=2)

    def test_sphere(self):
        reports = conformal_suite(unit_sphere(2), self.plan)
        self.assertEqual(failures(reports), [])
        premise = [r for r in reports if r.identity == "phi-conformally-flat"][0]
        self.assertEqual(premise.premise_status, "passed")
        pooled = [r for r in reports if r.identity == "star-eta-einstein-fit"][0]
        self.assertTrue(pooled.passed)
        self.assertLess(pooled.max_residual, 1e-8)

    def test_r5_premise_is_violated(self):
        reports = conformal_suite(standard_sasakian(2), self.plan)
        self.assertEqual(failures(reports), [])
        gated = [r for r in reports if r.identity in ("star-eta-einstein", "expanded-curvature", "eta-einstein",
                                                      "star-eta-einstein-fit")]
        self.assertEqual(len(gated), 4)
        self.assertTrue(all(r.skipped for r in gated))

    def test_flatness_premise_row(self):
        reports = phi_conformal_flatness_residual(unit_sphere(2), self.plan)
        self.assertEqual([r.premise_status for r in reports], ["passed"])
        reports = phi_conformal_flatness_residual(standard_sasakian(2), self.plan)
        self.assertEqual([r.premise_status for r in reports], ["violated"])
        self.assertTrue(reports[0].skipped)

    def test_three_dimensional_models(self):
        for s in (unit_sphere(1), standard_sasakian(1)):
            reports = conformal_suite(s, self.plan)
            self.assertEqual(failures(reports), [], s.name)

    def test_star_eta_einstein_constants(self):
        fit = phi_conformal_star_eta_einstein(unit_sphere(2), self.plan)
        self.assertTrue(fit.holds)
        self.assertAlmostEqual(fit.beta, 1.0, places=8)
        self.assertAlmostEqual(fit.reference, 1.0, places=8)


class ConformallyFlatChainTests(unittest.TestCase):

    def setUp(self):
        self.plan = SamplePlan(point_count=3, seed=6, vectors_per_point=2)

    def test_sphere(self):
        for n in (1, 2):
            reports = conformally_flat_chain(unit_sphere(n), self.plan)
            self.assertEqual(failures(reports), [], n)
            self.assertFalse(any(r.skipped for r in reports))

    def test_r2n1_is_skipped(self):
        for n in (1, 2):
            reports = conformally_flat_chain(standard_sasakian(n), self.plan)
            self.assertEqual(failures(reports), [])
            self.assertTrue(all(r.skipped for r in reports))


if __name__ == "__main__":
    unittest.main()

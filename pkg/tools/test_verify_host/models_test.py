#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.errors import InputError, ValidationError
from sasakian.jet import Jet, jet_einsum
from sasakian.models import (ModelSpec, load_model, standard_sasakian, unit_sphere, euclidean_chart,
                             space_form_oracle, verify_space_form)
from sasakian.sampling import SamplePlan


class RegistryTests(unittest.TestCase):

    def test_base_models(self):
        self.assertEqual(ModelSpec.parse("r2n1", 2).kind, "standardR2n1")
        self.assertEqual(ModelSpec.parse("sphere", 1).kind, "unitSphere")
        self.assertEqual(load_model("sphere", 2).dim, 5)

    def test_fraction_parameter(self):
        spec = ModelSpec.parse("sphere-deformed:a=4/3", 1)
        self.assertEqual(spec.kind, "dHomothetic")
        self.assertEqual(spec.base, "sphere")
        self.assertAlmostEqual(spec.a, 4.0 / 3.0)
        s = spec.build()
        self.assertAlmostEqual(s.space_form_c, 0.0)
        self.assertEqual(s.name, "sphere-deformed:a=4/3")

    def test_unknown_models(self):
        for name in ("torus", "sphere-deformed", "sphere-deformed:a=", "sphere-deformed:a=1/0",
                     "torus-deformed:a=2", "sphere-deformed:a=abc"):
            with self.assertRaises(InputError):
                load_model(name, 1)

    def test_bad_dimension(self):
        with self.assertRaises(InputError):
            load_model("sphere", 0)
        with self.assertRaises(InputError):
            standard_sasakian(1.5)
        with self.assertRaises(InputError):
            euclidean_chart(4)

    def test_non_positive_deformation(self):
        with self.assertRaises(InputError):
            load_model("r2n1-deformed:a=-2", 1)


class ModelGeometryTests(unittest.TestCase):

    def test_r2n1_contact_form(self):
        s = standard_sasakian(1)
        p = np.array([0.2, -0.4, 0.3])
        phi, xi, eta = s.fields(p)
        assert_allclose(xi, [0.0, 0.0, 2.0])
        assert_allclose(eta, [0.2, 0.0, 0.5])
        self.assertAlmostEqual(eta.dot(xi), 1.0)
        assert_allclose(phi.dot(phi), -np.eye(3) + np.outer(xi, eta), atol=1e-14)

    def test_sphere_embedding(self):
        s = unit_sphere(2)
        m = s.manifold
        self.assertTrue(m.exact)
        self.assertTrue(s.exact)
        half = 0.5 * (m.upper - m.lower)
        assert_allclose(half, min(0.4, 0.7 / np.sqrt(5)) * np.ones(5))
        p = m.center
        g = m.metric(p)
        xi = s.xi(p)
        self.assertAlmostEqual(xi.dot(g).dot(xi), 1.0)

    def test_conformal_chart(self):
        weight = np.array([0.2, 0.0, -0.1])

        def f(p):
            return weight.dot(p)

        def f_jet(p, order):
            return jet_einsum('a,a->', Jet.coordinates(p, order), weight)

        m = euclidean_chart(3, (f, f_jet), half_width=0.5)
        p = np.array([0.1, 0.1, 0.1])
        assert_allclose(m.metric(p), np.exp(2 * f(p)) * np.eye(3))
        assert_allclose(m.metric.jet_at(p, 1).terms[1][0], 0.4 * np.exp(2 * f(p)) * np.eye(3))


class SpaceFormTests(unittest.TestCase):

    def setUp(self):
        self.plan = SamplePlan(point_count=3, seed=11, vectors_per_point=2)

    def test_oracle_matches_numerical_curvature(self):
        for s in (standard_sasakian(1), unit_sphere(1), load_model("sphere-deformed:a=2", 1),
                  load_model("r2n1-deformed:a=1/2", 2)):
            reports = verify_space_form(s, self.plan)
            self.assertEqual(len(reports), 1)
            self.assertTrue(reports[0].passed, "%s: %s" % (s.name, reports[0].max_residual))

    def test_sphere_oracle_is_constant_curvature(self):
        s = unit_sphere(1)
        p = s.manifold.center
        g = s.manifold.metric(p)
        x, y, z = np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0.3, 0.2, 1.0])
        r = space_form_oracle(1.0, 1, p, x, y, z, s).components
        assert_allclose(r, y.dot(g).dot(z) * x - x.dot(g).dot(z) * y, atol=1e-14)

    def test_oracle_rejects_mismatch(self):
        s = unit_sphere(1)
        p = s.manifold.center
        with self.assertRaises(ValidationError):
            space_form_oracle(-3.0, 1, p, np.ones(3), np.ones(3), np.ones(3), s)
        with self.assertRaises(ValidationError):
            space_form_oracle(1.0, 2, p, np.ones(3), np.ones(3), np.ones(3), s)

    def test_oracle_needs_a_space_form(self):
        s = standard_sasakian(1)
        s.space_form_c = None
        with self.assertRaises(ValidationError):
            space_form_oracle(-3.0, 1, s.manifold.center, np.ones(3), np.ones(3), np.ones(3), s)
        self.assertEqual(verify_space_form(s, self.plan), [])


if __name__ == "__main__":
    unittest.main()

#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.contact import (ContactStructure, d_homothetic_deform, fundamental_two_form, verify_almost_contact,
                              verify_compatibility, contact_metric_check, verify_sasakian, nijenhuis_tensor,
                              nijenhuis_normality, reeb_killing_check, verify_curvature_identities,
                              first_bianchi_check, riemann_symmetry_check, metric_parallel_check,
                              phi_projection_identity, ricci_operator_identities)
from sasakian.errors import InputError, ValidationError
from sasakian.models import standard_sasakian, unit_sphere, euclidean_chart, naive_structure
from sasakian.sampling import SamplePlan

CHECKS = [verify_almost_contact, verify_compatibility, contact_metric_check, verify_sasakian, nijenhuis_normality,
          reeb_killing_check, verify_curvature_identities, first_bianchi_check, riemann_symmetry_check,
          metric_parallel_check, phi_projection_identity, ricci_operator_identities]


def failures(reports):
    return ["%s/%s: %s" % (r.suite, r.identity, r.max_residual if r.cause is None else r.cause)
            for r in reports if r.failed]


class SasakianModelTests(unittest.TestCase):

    def setUp(self):
        self.plan = SamplePlan(point_count=3, seed=7, vectors_per_point=2)

    def _run_all(self, s):
        reports = []
        for check in CHECKS:
            reports += check(s, self.plan)
        return reports

    def test_sphere(self):
        reports = self._run_all(unit_sphere(1))
        self.assertEqual(failures(reports), [])
        self.assertFalse(any(r.skipped for r in reports))

    def test_standard_r5(self):
        self.assertEqual(failures(self._run_all(standard_sasakian(2))), [])

    def test_deformed_sphere(self):
        self.assertEqual(failures(self._run_all(d_homothetic_deform(unit_sphere(1), 4.0 / 3.0))), [])

    def test_normality_by_hand(self):
        s = unit_sphere(1)
        p = s.manifold.center
        x, y = np.array([0.3, -1.0, 0.2]), np.array([1.0, 0.4, -0.7])
        d_eta = fundamental_two_form(s, p).components
        assert_allclose(nijenhuis_tensor(s, p, x, y) + 2.0 * x.dot(d_eta).dot(y) * s.xi(p), np.zeros(3), atol=1e-10)


class NaiveStructureTests(unittest.TestCase):

    def setUp(self):
        self.plan = SamplePlan(point_count=3, seed=1, vectors_per_point=2)
        self.s = naive_structure(euclidean_chart(3))

    def test_axioms_hold_without_the_metric(self):
        self.assertEqual(failures(verify_almost_contact(self.s, self.plan)), [])

    def test_metric_is_not_compatible(self):
        reports = verify_compatibility(self.s, self.plan)
        self.assertTrue(any(r.failed for r in reports))

    def test_invariants(self):
        with self.assertRaises(ValidationError):
            self.s.check_invariants([np.zeros(3)])
        unit_sphere(1).check_invariants([unit_sphere(1).manifold.center])


class StructureTests(unittest.TestCase):

    def test_wrong_valence(self):
        s = unit_sphere(1)
        with self.assertRaises(ValidationError):
            ContactStructure(s.manifold, s.xi, s.xi, s.eta)

    def test_deformation_parameter(self):
        s = unit_sphere(1)
        for a in (0.0, -1.0, "x"):
            with self.assertRaises(InputError):
                d_homothetic_deform(s, a)

    def test_deformation_space_form(self):
        s = d_homothetic_deform(standard_sasakian(1), 2.0)
        self.assertAlmostEqual(s.space_form_c, -3.0)
        s = d_homothetic_deform(unit_sphere(1), 2.0)
        self.assertAlmostEqual(s.space_form_c, -1.0)

    def test_deformed_fields(self):
        s = unit_sphere(1)
        t = d_homothetic_deform(s, 3.0)
        p = s.manifold.center
        assert_allclose(t.xi(p), s.xi(p) / 3.0)
        assert_allclose(t.eta(p), 3.0 * s.eta(p))
        self.assertAlmostEqual(t.eta(p).dot(t.xi(p)), 1.0)
        self.assertTrue(t.exact)


if __name__ == "__main__":
    unittest.main()

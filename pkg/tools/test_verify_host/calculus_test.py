#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.calculus import (ChartManifold, DerivativeConfig, TensorFieldFn, christoffel, riemann, ricci,
                               scalar_curvature, riemann_derivative, covariant_derivative, lie_derivative,
                               lie_derivative_covariant, lie_derivative_transport, exterior_derivative_1form,
                               curvature_action, frame_residual, gradient_field)
from sasakian.errors import StencilError, ValidationError
from sasakian.jet import Jet, jet_einsum
from sasakian.models import unit_sphere, euclidean_chart
from sasakian.soliton import polynomial_field


def quadratic_scalar(dim):
    hessian = np.arange(dim * dim, dtype=float).reshape(dim, dim) / (dim * dim)
    hessian = hessian + hessian.T
    weight = np.linspace(-1.0, 1.0, dim)

    def evaluate(p):
        return 0.5 * p.dot(hessian).dot(p) + weight.dot(p)

    def jet(p, order):
        x = Jet.coordinates(p, order)
        return 0.5 * jet_einsum('a,ab,b->', x, hessian, x) + jet_einsum('a,a->', x, weight)

    return TensorFieldFn((0, 0), evaluate, jet=jet, name="f")


def constant_curvature(g, kappa=1.0):
    delta = np.eye(len(g))
    return kappa * (np.einsum('jk,li->lijk', g, delta) - np.einsum('ik,lj->lijk', g, delta))


class FlatChartTests(unittest.TestCase):

    def test_flat_chart_has_no_curvature(self):
        m = euclidean_chart(3)
        p = np.array([0.1, 0.2, -0.3])
        assert_allclose(christoffel(m, p).components, np.zeros((3, 3, 3)))
        assert_allclose(riemann(m, p).components, np.zeros((3,) * 4))
        self.assertEqual(scalar_curvature(m, p), 0.0)

    def test_stencil_near_boundary(self):
        m = euclidean_chart(3, half_width=0.5)
        field = TensorFieldFn((0, 1), lambda p: p)
        with self.assertRaises(StencilError):
            exterior_derivative_1form(m, field, np.array([0.5, 0.0, 0.0]))

    def test_exterior_derivative_needs_a_one_form(self):
        m = euclidean_chart(3)
        with self.assertRaises(ValidationError):
            exterior_derivative_1form(m, TensorFieldFn((1, 0), lambda p: p), np.zeros(3))

    def test_exterior_derivative(self):
        m = euclidean_chart(3)
        # omega = x dy, d omega = 1/2 (dx ^ dy) with the 1/2 convention
        omega = TensorFieldFn((0, 1), lambda p: np.array([0.0, p[0], 0.0]))
        d = exterior_derivative_1form(m, omega, np.array([0.1, 0.2, 0.3])).components
        assert_allclose(d, [[0.0, 0.5, 0.0], [-0.5, 0.0, 0.0], [0.0, 0.0, 0.0]], atol=1e-8)

    def test_exact_form_is_closed(self):
        m = unit_sphere(1).manifold
        f = quadratic_scalar(3)
        df = gradient_field(f)
        p = m.center + 0.02
        assert_allclose(df(p), f.jet_at(p, 1).terms[1])
        assert_allclose(exterior_derivative_1form(m, df, p).components, np.zeros((3, 3)), atol=1e-10)

    def test_rejects_bad_metric(self):
        with self.assertRaises(ValidationError):
            ChartManifold(1, -np.ones(3), np.ones(3), lambda p: np.diag([1.0, -1.0, 1.0])).geometry(np.zeros(3))


class SphereCurvatureTests(unittest.TestCase):

    def setUp(self):
        self.s = unit_sphere(1)
        self.m = self.s.manifold
        self.p = self.m.center + 0.1

    def test_constant_curvature_one(self):
        g = self.m.metric(self.p)
        assert_allclose(riemann(self.m, self.p).components, constant_curvature(g), atol=1e-10)
        assert_allclose(ricci(self.m, self.p).components, 2.0 * g, atol=1e-10)
        self.assertAlmostEqual(scalar_curvature(self.m, self.p), 6.0, places=9)

    def test_locally_symmetric(self):
        assert_allclose(riemann_derivative(self.m, self.p).components, np.zeros((3,) * 5), atol=1e-8)

    def test_finite_difference_metric_agrees(self):
        numeric = ChartManifold(1, self.m.lower, self.m.upper, self.m.metric, name="sphere-fd")
        self.assertFalse(numeric.exact)
        assert_allclose(riemann(numeric, self.p).components, riemann(self.m, self.p).components, atol=1e-5)

    def test_metric_is_parallel(self):
        d = covariant_derivative(self.m, self.m.metric, self.p).components
        assert_allclose(d, np.zeros((3, 3, 3)), atol=1e-10)

    def test_curvature_action_on_metric(self):
        x, y = np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.5])
        action = curvature_action(self.m, self.p, x, y, self.m.metric(self.p)).components
        assert_allclose(action, np.zeros((3, 3)), atol=1e-10)

    def test_frame_residual_of_metric(self):
        self.assertAlmostEqual(frame_residual(self.m, self.p, self.m.metric(self.p), (0, 2)), 1.0)


class LieDerivativeTests(unittest.TestCase):

    def setUp(self):
        self.s = unit_sphere(1)
        self.m = self.s.manifold
        self.p = self.m.center - 0.05
        self.v = polynomial_field(3, seed=4)

    def test_reeb_field_is_killing(self):
        assert_allclose(lie_derivative(self.m, self.s.xi, self.m.metric, self.p).components,
                        np.zeros((3, 3)), atol=1e-10)

    def test_coordinate_and_leibniz_forms_agree(self):
        for field in (self.m.metric, self.s.phi, self.s.eta, self.s.xi):
            coordinate = lie_derivative(self.m, self.v, field, self.p).components
            leibniz = lie_derivative_covariant(self.m, self.v, field, self.p).components
            assert_allclose(coordinate, leibniz, atol=1e-9, err_msg=field.name)

    def test_transport_agrees(self):
        coordinate = lie_derivative(self.m, self.v, self.s.phi, self.p).components
        transported = lie_derivative_transport(self.m, self.v, self.s.phi, self.p).components
        assert_allclose(transported, coordinate, atol=1e-7)

    def test_finite_difference_field(self):
        numeric = polynomial_field(3, seed=4, exact=False)
        self.assertFalse(numeric.exact)
        config = DerivativeConfig()
        exact = lie_derivative(self.m, self.v, self.m.metric, self.p, config).components
        approx = lie_derivative(self.m, numeric, self.m.metric, self.p, config).components
        assert_allclose(approx, exact, atol=1e-7)

    def test_flow_must_be_a_vector_field(self):
        with self.assertRaises(ValidationError):
            lie_derivative(self.m, self.s.eta, self.m.metric, self.p)


if __name__ == "__main__":
    unittest.main()

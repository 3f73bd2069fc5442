#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.calculus import DerivativeConfig, DEFAULT_DERIVATIVES
from sasakian.errors import ValidationError
from sasakian.jet import Jet, jet_einsum, jet_concatenate, fd_jet

POINT = np.array([0.3, -0.2, 0.1])


class JetConstructionTests(unittest.TestCase):

    def test_coordinates(self):
        x = Jet.coordinates(POINT, 3)
        assert_allclose(x.value, POINT)
        assert_allclose(x.terms[1], np.eye(3))
        assert_allclose(x.terms[2], np.zeros((3, 3, 3)))
        self.assertEqual(x.order, 3)

    def test_bad_term_shape(self):
        with self.assertRaises(ValueError):
            Jet([np.zeros(3), np.zeros((2, 3))], 3)

    def test_order_limit(self):
        with self.assertRaises(ValueError):
            Jet([np.zeros(2)] * 5, 2)

    def test_derivative_axis_first(self):
        linear = np.arange(18, dtype=float).reshape(3, 2, 3)
        jet = Jet.affine(POINT, np.zeros((2, 3)), linear, 1)
        assert_allclose(jet.derivative().value, linear)

    def test_truncate(self):
        x = Jet.coordinates(POINT, 3).truncate(1)
        self.assertEqual(x.order, 1)
        with self.assertRaises(ValueError):
            x.truncate(2)


class JetAlgebraTests(unittest.TestCase):

    def test_product_rule(self):
        x = Jet.coordinates(POINT, 3)
        square = jet_einsum('a,a->', x, x)
        self.assertAlmostEqual(float(square.value), POINT.dot(POINT))
        assert_allclose(square.terms[1], 2 * POINT)
        assert_allclose(square.terms[2], 2 * np.eye(3))
        assert_allclose(square.terms[3], np.zeros((3, 3, 3)))

    def test_mixed_operands(self):
        x = Jet.coordinates(POINT, 2)
        a = np.array([[1.0, 2.0, 0.0], [0.0, 1.0, -1.0]])
        y = jet_einsum('ia,a->i', a, x)
        assert_allclose(y.value, a.dot(POINT))
        assert_allclose(y.terms[1], a.T)

    def test_einsum_needs_a_jet(self):
        with self.assertRaises(ValueError):
            jet_einsum('a->a', np.ones(3))

    def test_arithmetic(self):
        x = Jet.coordinates(POINT, 2)
        y = 2.0 * x - np.ones(3) + x / 2.0
        assert_allclose(y.value, 2.5 * POINT - 1.0)
        assert_allclose(y.terms[1], 2.5 * np.eye(3))
        with self.assertRaises(TypeError):
            x * x

    def test_power_and_exp(self):
        x = Jet.coordinates(POINT, 3)
        q = 1.0 + jet_einsum('a,a->', x, x)
        root = q.power(0.5)
        r = np.sqrt(1.0 + POINT.dot(POINT))
        self.assertAlmostEqual(float(root.value), r)
        assert_allclose(root.terms[1], POINT / r)
        assert_allclose(root.terms[2], np.eye(3) / r - np.outer(POINT, POINT) / r ** 3)
        e = jet_einsum('a,a->', x, np.array([1.0, 0.0, 0.0])).exp()
        assert_allclose(e.terms[3][0, 0, 0], np.exp(POINT[0]))

    def test_inverse_matches_finite_differences(self):
        b = np.array([[0.0, 0.3, 0.1], [0.2, 0.0, 0.4], [0.1, 0.1, 0.0]])

        def matrix(p):
            return np.eye(3) + p[0] * b + p[1] ** 2 * b.T

        def jet(p, order):
            x = Jet.coordinates(p, order)
            e0 = np.array([1.0, 0.0, 0.0])
            e1 = np.array([0.0, 1.0, 0.0])
            return (jet_einsum('a,a,ij->ij', x, e0, b)
                    + jet_einsum('a,b,a,b,ij->ij', x, x, e1, e1, b.T) + np.eye(3))

        exact = jet(POINT, 3).inverse()
        numeric = fd_jet(lambda p: np.linalg.inv(matrix(p)), POINT, 3, DEFAULT_DERIVATIVES)
        assert_allclose(exact.value, np.linalg.inv(matrix(POINT)), atol=1e-12)
        assert_allclose(exact.terms[1], numeric.terms[1], atol=1e-7)
        assert_allclose(exact.terms[2], numeric.terms[2], atol=1e-6)
        assert_allclose(exact.terms[3], numeric.terms[3], atol=1e-4)

    def test_concatenate(self):
        x = Jet.coordinates(POINT, 2)
        joined = jet_concatenate([x, x.reshape((3,))], axis=0)
        self.assertEqual(joined.shape, (6,))
        assert_allclose(joined.terms[1][:, 3:], np.eye(3))


class FiniteDifferenceTests(unittest.TestCase):

    def test_cubic_polynomial(self):
        def cubic(p):
            return np.array([p[0] ** 3 + p[0] * p[1] * p[2], p[1] ** 2])

        jet = fd_jet(cubic, POINT, 3, DerivativeConfig())
        assert_allclose(jet.terms[1][:, 0], [3 * POINT[0] ** 2 + POINT[1] * POINT[2],
                                             POINT[0] * POINT[2], POINT[0] * POINT[1]], atol=1e-8)
        assert_allclose(jet.terms[2][:, :, 1], np.diag([0.0, 2.0, 0.0]), atol=1e-6)
        self.assertAlmostEqual(jet.terms[3][0, 0, 0, 0], 6.0, delta=1e-3)
        self.assertAlmostEqual(jet.terms[3][0, 1, 2, 0], 1.0, delta=1e-3)
        self.assertAlmostEqual(jet.terms[3][2, 1, 0, 0], 1.0, delta=1e-3)

    def test_config_validation(self):
        with self.assertRaises(ValidationError):
            DerivativeConfig(h_first=0.0)


if __name__ == "__main__":
    unittest.main()

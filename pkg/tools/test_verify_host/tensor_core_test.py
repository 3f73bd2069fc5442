#!/usr/bin/env python
from __future__ import print_function, division
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from sasakian.errors import InputError, ValidationError, DegenerateError
from sasakian.tensor_core import (TensorValue, MetricAtPoint, contract, raise_lower, gram_schmidt, adapted_frame,
                                  to_frame, frame_norm)

METRIC = np.array([[2.0, 0.3, 0.0],
                   [0.3, 1.0, 0.1],
                   [0.0, 0.1, 0.5]])


class TensorValueTests(unittest.TestCase):

    def test_flat_components_are_reshaped(self):
        t = TensorValue(np.arange(9), (1, 1))
        self.assertEqual(t.components.shape, (3, 3))
        self.assertEqual(t.rank, 2)
        self.assertEqual(t.dim, 3)
        t = TensorValue(np.arange(27), (0, 3))
        self.assertEqual(t.components.shape, (3, 3, 3))
        assert_allclose(t.components[1, 2, 0], 15.0)

    def test_flat_components_of_no_dimension(self):
        with self.assertRaises(ValidationError):
            TensorValue(np.arange(10), (1, 1))

    def test_scalar_needs_dim(self):
        with self.assertRaises(ValidationError):
            TensorValue(1.0, (0, 0))
        self.assertEqual(TensorValue(1.0, (0, 0), 3).rank, 0)

    def test_non_finite(self):
        with self.assertRaises(ValidationError):
            TensorValue([1.0, np.nan, 0.0], (1, 0))

    def test_wrong_size(self):
        with self.assertRaises(ValidationError):
            TensorValue(np.zeros(5), (1, 1), 3)

    def test_immutable(self):
        t = TensorValue(np.zeros(3), (1, 0))
        with self.assertRaises(ValueError):
            t.components[0] = 1.0


class MetricTests(unittest.TestCase):

    def test_inverse(self):
        m = MetricAtPoint(METRIC)
        assert_allclose(m.matrix.dot(m.inverse), np.eye(3), atol=1e-14)
        self.assertAlmostEqual(m.norm([0.0, 0.0, 1.0]), np.sqrt(0.5))

    def test_not_symmetric(self):
        g = METRIC.copy()
        g[0, 1] += 0.1
        with self.assertRaises(ValidationError):
            MetricAtPoint(g)

    def test_not_positive_definite(self):
        with self.assertRaises(ValidationError):
            MetricAtPoint(np.diag([1.0, -1.0, 1.0]))


class ContractionTests(unittest.TestCase):

    def test_trace_of_identity(self):
        t = contract(TensorValue(np.eye(3), (1, 1)), 0, 0)
        self.assertEqual(t.valence, (0, 0))
        self.assertAlmostEqual(float(t.components), 3.0)

    def test_index_out_of_range(self):
        with self.assertRaises(InputError):
            contract(TensorValue(np.eye(3), (1, 1)), 1, 0)

    def test_needs_mixed_slots(self):
        with self.assertRaises(ValidationError):
            contract(TensorValue(np.eye(3), (0, 2)), 0, 0)

    def test_lower_then_raise(self):
        m = MetricAtPoint(METRIC)
        v = TensorValue([1.0, -2.0, 0.5], (1, 0))
        lowered = raise_lower(v, 0, m, "down")
        self.assertEqual(lowered.valence, (0, 1))
        assert_allclose(lowered.components, METRIC.dot(v.components))
        assert_allclose(raise_lower(lowered, 0, m, "up").components, v.components, atol=1e-14)
        with self.assertRaises(InputError):
            raise_lower(v, 0, m, "sideways")


class FrameTests(unittest.TestCase):

    def test_gram_schmidt_keeps_first_direction(self):
        m = MetricAtPoint(METRIC)
        vectors = [np.array([1.0, 1.0, 0.0]), np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0])]
        frame = gram_schmidt(vectors, m)
        e = frame.matrix
        assert_allclose(e.T.dot(METRIC).dot(e), np.eye(3), atol=1e-12)
        assert_allclose(e[:, 0], vectors[0] / m.norm(vectors[0]))

    def test_degenerate(self):
        m = MetricAtPoint(np.eye(3))
        with self.assertRaises(DegenerateError):
            gram_schmidt([np.array([1.0, 0, 0]), np.array([2.0, 0, 0]), np.array([0, 0, 1.0])], m)

    def test_adapted_frame_skips_dependent_candidates(self):
        m = MetricAtPoint(METRIC)
        first = np.array([0.0, 0.0, 1.0])
        frame = adapted_frame(m, first, [first, np.array([1.0, 0, 0]), np.array([0, 1.0, 0])])
        self.assertEqual(len(frame), 3)
        assert_allclose(frame.matrix[:, 0], first / m.norm(first))

    def test_frame_norm_is_frame_independent(self):
        m = MetricAtPoint(METRIC)
        rng = np.random.RandomState(3)
        q = rng.standard_normal((3, 3))
        q = q + q.T
        first = adapted_frame(m)
        second = adapted_frame(m, candidates=list(rng.standard_normal((3, 3))))
        # the Frobenius norm of a (1,1) tensor in an orthonormal frame does not depend on the frame
        a = to_frame(np.linalg.inv(METRIC).dot(q), (1, 1), first)
        b = to_frame(np.linalg.inv(METRIC).dot(q), (1, 1), second)
        self.assertAlmostEqual(np.linalg.norm(a), np.linalg.norm(b))
        self.assertGreater(frame_norm(q, (0, 2), first), 0.0)

    def test_euclidean_frame_norm(self):
        m = MetricAtPoint(np.eye(3))
        t = np.array([[0.0, -4.0, 1.0], [0.5, 0.0, 0.0], [0.0, 2.0, 0.0]])
        self.assertAlmostEqual(frame_norm(t, (1, 1), adapted_frame(m)), 4.0)


if __name__ == "__main__":
    unittest.main()

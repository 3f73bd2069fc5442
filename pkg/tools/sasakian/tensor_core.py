# Copyright 2026 sasakian-verify contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Pointwise multilinear algebra.

Components are dense numpy arrays with every axis of length dim. A tensor of
valence (p, q) keeps its p contravariant axes first, then its q covariant axes.
"""
from __future__ import division

import numpy as np

from .errors import InputError, ValidationError, DegenerateError

GRAM_DET_MIN = 1e-10
FRAME_TOL = 1e-10


class TensorValue(object):
    """
    Components of a type (p, q) tensor at a point. Immutable.

    :param components: array of shape (dim,) * (p + q), or flat of length dim ** (p + q)
    :param valence: pair (p, q)
    :param dim: required for scalars and flat input
    """

    def __init__(self, components, valence, dim=None):
        p, q = valence
        if p < 0 or q < 0:
            raise ValidationError("valence", "negative slot count in %s" % (valence,))
        rank = p + q
        arr = np.array(components, dtype=float)
        if dim is None:
            if rank == 0 or arr.ndim == 0:
                raise ValidationError("tensor", "dim is required for scalars")
            if arr.ndim == 1 and rank > 1:
                dim = int(round(arr.size ** (1.0 / rank)))
                if dim ** rank != arr.size:
                    raise ValidationError("tensor", "%d components is not a power %d of a dimension"
                                          % (arr.size, rank))
            else:
                dim = arr.shape[0]
        expected = (dim,) * rank
        if arr.shape != expected:
            if arr.size != dim ** rank:
                raise ValidationError("tensor", "%d components for dim %d and valence %s"
                                      % (arr.size, dim, (p, q)))
            arr = arr.reshape(expected)
        if not np.all(np.isfinite(arr)):
            raise ValidationError("tensor", "non-finite components")
        arr.setflags(write=False)
        self.components = arr
        self.valence = (p, q)
        self.dim = dim

    @property
    def rank(self):
        return sum(self.valence)

    def __add__(self, other):
        self._check_same(other)
        return TensorValue(self.components + other.components, self.valence, self.dim)

    def __sub__(self, other):
        self._check_same(other)
        return TensorValue(self.components - other.components, self.valence, self.dim)

    def __mul__(self, factor):
        return TensorValue(float(factor) * self.components, self.valence, self.dim)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def _check_same(self, other):
        if self.valence != other.valence or self.dim != other.dim:
            raise ValidationError("tensor", "cannot combine valence %s (dim %d) with %s (dim %d)"
                                  % (self.valence, self.dim, other.valence, other.dim))

    def __repr__(self):
        return "TensorValue(valence=%s, dim=%d)" % (self.valence, self.dim)


def as_array(t):
    """ Components of a TensorValue, or the argument itself as a float array. """
    if isinstance(t, TensorValue):
        return t.components
    return np.asarray(t, dtype=float)


class MetricAtPoint(object):
    """
    A Riemannian metric at a point, with its inverse.

    Positive definiteness is checked by Cholesky factorization, and the
    inverse is assembled from the inverse of the Cholesky factor.
    """

    def __init__(self, g):
        g = as_array(g)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValidationError("metric", "shape %s is not square" % (g.shape,))
        scale = max(np.abs(g).max(), 1.0)
        if np.abs(g - g.T).max() > 1e-12 * scale:
            raise ValidationError("metric", "not symmetric")
        try:
            chol = np.linalg.cholesky(g)
        except np.linalg.LinAlgError:
            raise ValidationError("metric", "not positive definite")
        chol_inv = np.linalg.inv(chol)
        g_inv = chol_inv.T.dot(chol_inv)
        dim = g.shape[0]
        if np.abs(g.dot(g_inv) - np.eye(dim)).max() > 1e-12 * np.linalg.cond(g):
            raise ValidationError("metric", "inverse does not reproduce the identity")
        self.g = TensorValue(g, (0, 2))
        self.g_inv = TensorValue(g_inv, (2, 0))
        self.dim = dim

    @property
    def matrix(self):
        return self.g.components

    @property
    def inverse(self):
        return self.g_inv.components

    def inner(self, x, y):
        return float(as_array(x).dot(self.matrix).dot(as_array(y)))

    def norm(self, x):
        return np.sqrt(self.inner(x, x))


class OrthonormalFrame(object):
    """ dim vectors with g(e_i, e_j) = delta_ij. ``matrix`` holds them as columns. """

    def __init__(self, vectors, metric):
        matrix = np.array([as_array(v) for v in vectors], dtype=float).T
        if matrix.shape != (metric.dim, metric.dim):
            raise ValidationError("frame", "need %d vectors of dimension %d" % (metric.dim, metric.dim))
        gram = matrix.T.dot(metric.matrix).dot(matrix)
        if np.abs(gram - np.eye(metric.dim)).max() > FRAME_TOL:
            raise ValidationError("frame", "not orthonormal (deviation %.3e)"
                                  % np.abs(gram - np.eye(metric.dim)).max())
        matrix.setflags(write=False)
        self.matrix = matrix
        self.metric = metric

    @property
    def vectors(self):
        return [TensorValue(self.matrix[:, i], (1, 0)) for i in range(self.matrix.shape[1])]

    def __len__(self):
        return self.matrix.shape[1]


def contract(t, upper, lower):
    """
    Trace over contravariant slot ``upper`` and covariant slot ``lower``.
    The remaining slots keep their order.
    """
    p, q = t.valence
    if p == 0 or q == 0:
        raise ValidationError("contraction", "needs one contravariant and one covariant slot, valence is %s"
                              % (t.valence,))
    if not 0 <= upper < p:
        raise InputError("contravariant index %d out of range for valence %s" % (upper, t.valence))
    if not 0 <= lower < q:
        raise InputError("covariant index %d out of range for valence %s" % (lower, t.valence))
    result = np.trace(t.components, axis1=upper, axis2=p + lower)
    return TensorValue(result, (p - 1, q - 1), t.dim)


def raise_lower(t, slot, metric, direction):
    """
    Move one index with the metric.

    ``down`` turns contravariant slot ``slot`` into the last covariant slot,
    ``up`` turns covariant slot ``slot`` into the last contravariant slot.
    Lowering slot 0 of R (1,3) therefore gives R(X,Y,Z,W) = g(R(X,Y)Z, W).
    """
    p, q = t.valence
    if direction == "down":
        if p == 0:
            raise ValidationError("index", "no contravariant slot to lower")
        if not 0 <= slot < p:
            raise InputError("contravariant slot %d out of range for valence %s" % (slot, t.valence))
        result = np.tensordot(t.components, metric.matrix, axes=([slot], [0]))
        return TensorValue(result, (p - 1, q + 1), t.dim)
    elif direction == "up":
        if q == 0:
            raise ValidationError("index", "no covariant slot to raise")
        if not 0 <= slot < q:
            raise InputError("covariant slot %d out of range for valence %s" % (slot, t.valence))
        result = np.tensordot(t.components, metric.inverse, axes=([p + slot], [0]))
        result = np.moveaxis(result, -1, p)
        return TensorValue(result, (p + 1, q - 1), t.dim)
    raise InputError("direction must be 'up' or 'down', not %r" % (direction,))


def gram_schmidt(vectors, metric):
    """
    Modified Gram-Schmidt with one re-orthogonalisation pass.

    The first vector is kept (up to normalisation) so a unit Reeb field passed
    first comes back unchanged as e_0.
    """
    columns = np.array([as_array(v) for v in vectors], dtype=float).T
    if columns.shape != (metric.dim, metric.dim):
        raise ValidationError("frame", "need %d vectors of dimension %d" % (metric.dim, metric.dim))
    g = metric.matrix
    gram_det = np.linalg.det(columns.T.dot(g).dot(columns))
    if gram_det <= GRAM_DET_MIN:
        raise DegenerateError("vector set", gram_det)
    frame = []
    for j in range(columns.shape[1]):
        v = columns[:, j].copy()
        for _ in range(2):
            for e in frame:
                v -= e.dot(g).dot(v) * e
        frame.append(v / np.sqrt(v.dot(g).dot(v)))
    return OrthonormalFrame(frame, metric)


def adapted_frame(metric, first=None, candidates=None):
    """
    Orthonormal frame from ``first`` (optional) followed by ``candidates``
    (default: the coordinate basis), skipping candidates that are nearly
    dependent on the vectors already taken.
    """
    dim = metric.dim
    g = metric.matrix
    if candidates is None:
        candidates = np.eye(dim)
    chosen = []
    basis = []
    pool = ([as_array(first)] if first is not None else []) + [as_array(c) for c in candidates]
    for c in pool:
        v = c.copy()
        for e in basis:
            v -= e.dot(g).dot(v) * e
        length = np.sqrt(max(v.dot(g).dot(v), 0.0))
        if length > 1e-3 * np.sqrt(c.dot(g).dot(c)):
            chosen.append(c)
            basis.append(v / length)
        if len(chosen) == dim:
            break
    if len(chosen) < dim:
        raise DegenerateError("frame candidates", 0.0)
    return gram_schmidt(chosen, metric)


def to_frame(components, valence, frame):
    """ Components in the orthonormal frame: e^i(v) for vectors, omega(e_i) for covectors. """
    arr = as_array(components)
    p, q = valence
    down = frame.matrix.T.dot(frame.metric.matrix)
    for axis in range(p + q):
        op = down if axis < p else frame.matrix.T
        arr = np.moveaxis(np.tensordot(op, arr, axes=([1], [axis])), 0, axis)
    return arr


def frame_norm(components, valence, frame):
    """ Maximum absolute component in the g-orthonormal frame. """
    arr = to_frame(components, valence, frame)
    if arr.size == 0:
        return 0.0
    return float(np.abs(arr).max())

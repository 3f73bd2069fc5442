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
Catalogue of Sasakian model spaces with exact metric jets.

Registry names::

    r2n1                      standard structure on R^(2n+1), phi-sectional curvature -3
    sphere                    unit sphere S^(2n+1) in C^(n+1), constant curvature +1
    <base>-deformed:a=<v>     D-homothetic deformation of a catalogue model, v may be a fraction
"""
from __future__ import division

import re
from fractions import Fraction

import numpy as np

from .calculus import ChartManifold, TensorFieldFn, frame_residual
from .contact import ContactStructure, d_homothetic_deform
from .errors import InputError, ValidationError
from .jet import Jet, jet_einsum, jet_concatenate
from .sampling import SuiteRun
from .tensor_core import TensorValue, as_array

BASE_MODELS = ["r2n1", "sphere"]

_DEFORMED = re.compile(r'^(?P<base>[a-z0-9]+)-deformed:a=(?P<a>[0-9./eE+-]+)$')


class ModelSpec(object):
    """
    :param name: registry name
    :param n: dim = 2n + 1
    :param kind: ``standardR2n1``, ``unitSphere`` or ``dHomothetic``
    :param base: base model name for ``dHomothetic``
    :param a: deformation parameter for ``dHomothetic``
    """

    KINDS = {"r2n1": "standardR2n1", "sphere": "unitSphere"}

    def __init__(self, name, n, kind, base=None, a=None):
        if int(n) != n or n < 1:
            raise InputError("n must be a positive integer, got %r" % (n,))
        self.name = name
        self.n = int(n)
        self.kind = kind
        self.base = base
        self.a = a

    @classmethod
    def parse(cls, name, n):
        if name in cls.KINDS:
            return cls(name, n, cls.KINDS[name])
        match = _DEFORMED.match(name)
        if match is None or match.group("base") not in cls.KINDS:
            raise InputError("unknown model '%s', expected one of %s or <base>-deformed:a=<value>"
                             % (name, ", ".join(BASE_MODELS)))
        try:
            a = float(Fraction(match.group("a")))
        except (ValueError, ZeroDivisionError):
            raise InputError("deformation parameter '%s' in model '%s' is not a number" % (match.group("a"), name))
        return cls(name, n, "dHomothetic", base=match.group("base"), a=a)

    def build(self):
        if self.kind == "standardR2n1":
            return standard_sasakian(self.n)
        if self.kind == "unitSphere":
            return unit_sphere(self.n)
        base = ModelSpec.parse(self.base, self.n).build()
        return d_homothetic_deform(base, self.a, name=self.name)


def load_model(name, n):
    """ ContactStructure for a registry name """
    return ModelSpec.parse(name, n).build()


def _affine_field(valence, constant, linear, name):
    constant = np.asarray(constant, dtype=float)
    linear = np.asarray(linear, dtype=float)

    def evaluate(p):
        return constant + np.tensordot(p, linear, axes=1)

    def jet(p, order):
        return Jet.affine(p, constant, linear, order)

    return TensorFieldFn(valence, evaluate, jet=jet, name=name)


def standard_sasakian(n):
    """
    Coordinates (x_1..x_n, y_1..y_n, z) with eta = (dz - sum y_i dx_i) / 2,
    xi = 2 d_z, g = eta (x) eta + (sum dx_i^2 + dy_i^2) / 4 and
    phi d_y_i = d_x_i + y_i d_z, phi d_x_i = -d_y_i, phi d_z = 0.
    """
    if int(n) != n or n < 1:
        raise InputError("n must be a positive integer, got %r" % (n,))
    dim = 2 * n + 1
    z = dim - 1

    eta_constant = np.zeros(dim)
    eta_constant[z] = 0.5
    eta_linear = np.zeros((dim, dim))
    phi_constant = np.zeros((dim, dim))
    phi_linear = np.zeros((dim, dim, dim))
    for i in range(n):
        x, y = i, n + i
        eta_linear[y, x] = -0.5
        phi_constant[x, y] = 1.0
        phi_constant[y, x] = -1.0
        phi_linear[y, z, y] = 1.0
    xi_value = np.zeros(dim)
    xi_value[z] = 2.0
    flat = np.diag([0.25] * (2 * n) + [0.0])

    eta = _affine_field((0, 1), eta_constant, eta_linear, "eta")
    phi = _affine_field((1, 1), phi_constant, phi_linear, "phi")
    xi = _affine_field((1, 0), xi_value, np.zeros((dim, dim)), "xi")

    def metric_fn(p):
        e = eta(p)
        return np.outer(e, e) + flat

    def metric_jet(p, order):
        e = eta.jet_at(p, order)
        return jet_einsum('a,b->ab', e, e) + flat

    manifold = ChartManifold(n, -np.ones(dim), np.ones(dim), metric_fn, metric_jet, name="r2n1")
    return ContactStructure(manifold, phi, xi, eta, name="r2n1", space_form_c=-3.0)


def _complex_structure(size):
    """ J e_(2k) = e_(2k+1), J e_(2k+1) = -e_(2k) (0-based) """
    j = np.zeros((size, size))
    for k in range(0, size, 2):
        j[k + 1, k] = 1.0
        j[k, k + 1] = -1.0
    return j


class _SphereChart(object):
    """
    Graph chart u -> (u, sqrt(1 - |u|^2)) of the unit sphere S^(2n+1) in R^(2n+2).
    Every quantity is assembled from the jet of the embedding Jacobian DF.
    """

    def __init__(self, n):
        self.dim = 2 * n + 1
        self.j = _complex_structure(self.dim + 1)

    def embedding(self, p, order):
        u = Jet.coordinates(p, order)
        q = 1.0 - jet_einsum('a,a->', u, u)
        height = q.power(0.5)
        slope = -1.0 * jet_einsum('b,->b', u, q.power(-0.5))
        f = jet_concatenate([u, height.reshape((1,))], axis=0)
        df = jet_concatenate([Jet.constant(np.eye(self.dim), self.dim, order), slope.reshape((1, self.dim))], axis=0)
        return f, df

    def metric(self, p, order):
        f, df = self.embedding(p, order)
        return jet_einsum('ab,ac->bc', df, df)

    def eta(self, p, order):
        # xi = -J x on the sphere, eta = g(xi, .) = DF^T (-J F)
        f, df = self.embedding(p, order)
        return -1.0 * jet_einsum('ab,ac,c->b', df, self.j, f)

    def xi(self, p, order):
        g_inv = self.metric(p, order).inverse()
        return jet_einsum('ab,b->a', g_inv, self.eta(p, order))

    def phi(self, p, order):
        # tangential part of J
        f, df = self.embedding(p, order)
        g_inv = jet_einsum('ab,ac->bc', df, df).inverse()
        return jet_einsum('ab,cb,cd,de->ae', g_inv, df, self.j, df)


def _jet_field(valence, jet_fn, name):
    return TensorFieldFn(valence, lambda p: jet_fn(p, 0).value, jet=jet_fn, name=name)


def unit_sphere(n):
    """
    S^(2n+1) in C^(n+1) through the graph chart over the last coordinate,
    on a box around a non-polar base point.
    """
    if int(n) != n or n < 1:
        raise InputError("n must be a positive integer, got %r" % (n,))
    chart = _SphereChart(n)
    dim = chart.dim
    center = 0.05 * np.array([(-1.0) ** i for i in range(dim)])
    half_width = min(0.4, 0.7 / np.sqrt(dim))
    manifold = ChartManifold(n, center - half_width, center + half_width,
                             lambda p: chart.metric(p, 0).value, chart.metric, name="sphere")
    return ContactStructure(manifold, _jet_field((1, 1), chart.phi, "phi"), _jet_field((1, 0), chart.xi, "xi"),
                            _jet_field((0, 1), chart.eta, "eta"), name="sphere", space_form_c=1.0)


def euclidean_chart(dim, conformal_factor=None, half_width=1.0, name="euclidean"):
    """
    Flat chart of odd dimension, optionally with the metric e^(2f) delta.

    :param conformal_factor: None, or a pair (f, f_jet) of a scalar function and its exact jet callback
    """
    if dim % 2 == 0 or dim < 3:
        raise InputError("chart dimension must be odd and at least 3, got %d" % dim)
    identity = np.eye(dim)
    if conformal_factor is None:
        metric_fn = lambda p: identity
        metric_jet = lambda p, order: Jet.constant(identity, len(p), order)
    else:
        f, f_jet = conformal_factor
        metric_fn = lambda p: np.exp(2.0 * f(p)) * identity
        metric_jet = lambda p, order: jet_einsum(',ab->ab', (2.0 * f_jet(p, order)).exp(), identity)
    return ChartManifold((dim - 1) // 2, -half_width * np.ones(dim), half_width * np.ones(dim),
                         metric_fn, metric_jet, name=name)


def naive_structure(manifold, name="naive"):
    """
    The (phi, xi, eta) of the standard R^(2n+1) structure placed on another
    chart of the same dimension. Not compatible with the chart metric in general.
    """
    model = standard_sasakian(manifold.n)
    return ContactStructure(manifold, model.phi, model.xi, model.eta, name=name)


def space_form_oracle(c, n, p, x, y, z, s):
    """
    R(X, Y) Z of a Sasakian space form of phi-sectional curvature c:

        (c + 3) / 4 {g(Y, Z) X - g(X, Z) Y}
        + (c - 1) / 4 {eta(X) eta(Z) Y - eta(Y) eta(Z) X + g(X, Z) eta(Y) xi - g(Y, Z) eta(X) xi
                       + g(X, phi Z) phi Y - g(Y, phi Z) phi X + 2 g(X, phi Y) phi Z}
    """
    if s.space_form_c is None:
        raise ValidationError(s.name, "not a Sasakian space form")
    if abs(s.space_form_c - c) > 1e-12 or s.n != n:
        raise ValidationError(s.name, "space form constants (c=%r, n=%d) do not match (c=%r, n=%d)"
                              % (c, n, s.space_form_c, s.n))
    x, y, z = as_array(x), as_array(y), as_array(z)
    phi, xi, eta = s.fields(p)
    g = s.manifold.metric(p)

    def inner(u, v):
        return u.dot(g).dot(v)

    value = (c + 3.0) / 4.0 * (inner(y, z) * x - inner(x, z) * y) \
        + (c - 1.0) / 4.0 * (eta.dot(x) * eta.dot(z) * y - eta.dot(y) * eta.dot(z) * x
                             + inner(x, z) * eta.dot(y) * xi - inner(y, z) * eta.dot(x) * xi
                             + inner(x, phi.dot(z)) * phi.dot(y) - inner(y, phi.dot(z)) * phi.dot(x)
                             + 2.0 * inner(x, phi.dot(y)) * phi.dot(z))
    return TensorValue(value, (1, 0))


def verify_space_form(s, plan, suite="curvature-identities"):
    """ Numerical R against the closed form, for catalogue models only. """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    if s.space_form_c is None:
        return []

    def oracle(sample):
        p = sample.point
        r = m.geometry(p, 0, plan.fd_config).riemann
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('lijk,i,j,k->l', r, x, y, z)
            - space_form_oracle(s.space_form_c, s.n, p, x, y, z, s).components, (1, 0), plan.fd_config))

    return [run.evaluate("space-form-oracle", "R agrees with the Sasakian space form of phi-sectional curvature %g"
                         % s.space_form_c, oracle)]

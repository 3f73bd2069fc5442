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
Almost contact metric structures (phi, xi, eta, g) on a chart, the contact
and Sasakian axioms, and D-homothetic deformation.

Every ``verify_*`` function returns a list with one ResidualReport per
identity it checks.
"""
from __future__ import division

import numpy as np

from .calculus import (ChartManifold, TensorFieldFn, covariant_derivative, lie_derivative,
                       exterior_derivative_1form, ricci_operator_derivative, frame_residual)
from .errors import InputError, ValidationError
from .jet import jet_einsum
from .sampling import SuiteRun
from .tensor_core import TensorValue

STRUCTURE_TOL = 1e-10


class ContactStructure(object):
    """
    :param manifold: ChartManifold
    :param phi: (1,1) field, ``phi[a, b]`` = component a of phi(d_b)
    :param xi: Reeb vector field
    :param eta: contact 1-form
    :param name: label used in reports
    :param space_form_c: phi-sectional curvature when the structure is a Sasakian space form
    """

    def __init__(self, manifold, phi, xi, eta, name=None, space_form_c=None):
        for field, valence in ((phi, (1, 1)), (xi, (1, 0)), (eta, (0, 1))):
            if field.valence != valence:
                raise ValidationError(field.name, "valence %s, expected %s" % (field.valence, valence))
        self.manifold = manifold
        self.phi = phi
        self.xi = xi
        self.eta = eta
        self.name = name or manifold.name
        self.space_form_c = space_form_c

    @property
    def n(self):
        return self.manifold.n

    @property
    def dim(self):
        return self.manifold.dim

    @property
    def exact(self):
        return self.manifold.exact and self.phi.exact and self.xi.exact and self.eta.exact

    def fields(self, p):
        """ (phi, xi, eta) components at p """
        return self.phi(p), self.xi(p), self.eta(p)

    def check_invariants(self, points):
        """ eta(xi) = 1 and eta = g(xi, .) at every point """
        for p in points:
            phi, xi, eta = self.fields(p)
            g = self.manifold.metric(p)
            if abs(eta.dot(xi) - 1.0) > STRUCTURE_TOL:
                raise ValidationError(self.name, "eta(xi) = %.12g at %s" % (eta.dot(xi), list(p)))
            if np.abs(eta - g.dot(xi)).max() > STRUCTURE_TOL:
                raise ValidationError(self.name, "eta differs from g(xi, .) at %s" % list(p))

    def __repr__(self):
        return "ContactStructure(%s, n=%d)" % (self.name, self.n)


def scaled_field(field, factor, name=None):
    """ ``factor * field`` keeping exact jets """
    jet = None
    if field.exact:
        def jet(p, order):
            return factor * field.jet_at(p, order)
    return TensorFieldFn(field.valence, lambda p: factor * field(p), jet=jet, name=name or field.name)


def fundamental_two_form(s, p):
    """ Phi(X, Y) = g(X, phi Y) """
    return TensorValue(s.manifold.metric(p).dot(s.phi(p)), (0, 2))


def d_homothetic_deform(s, a, name=None):
    """
    (phi, xi / a, a eta, a g + a(a - 1) eta (x) eta).

    The deformed metric keeps an exact jet when the base metric and eta have one.
    A space form of phi-sectional curvature c goes to one with (c + 3) / a - 3.
    """
    try:
        a = float(a)
    except (TypeError, ValueError):
        raise InputError("deformation parameter %r is not a number" % (a,))
    if not a > 0:
        raise InputError("deformation parameter must be positive, got %r" % a)
    base = s.manifold
    eta = s.eta

    def metric_fn(p):
        e = eta(p)
        return a * base.metric(p) + a * (a - 1.0) * np.outer(e, e)

    metric_jet = None
    if base.exact and eta.exact:
        def metric_jet(p, order):
            e = eta.jet_at(p, order)
            return a * base.metric.jet_at(p, order) + a * (a - 1.0) * jet_einsum('a,b->ab', e, e)

    name = name or "%s-deformed:a=%r" % (s.name, a)
    manifold = ChartManifold(base.n, base.lower, base.upper, metric_fn, metric_jet, name=name)
    c = None if s.space_form_c is None else (s.space_form_c + 3.0) / a - 3.0
    return ContactStructure(manifold, s.phi, scaled_field(s.xi, 1.0 / a), scaled_field(eta, a),
                            name=name, space_form_c=c)


def verify_almost_contact(s, plan, suite="axioms"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def phi_squared(sample):
        phi, xi, eta = s.fields(sample.point)
        return sample.each(lambda x, y, z, w: frame_residual(
            m, sample.point, phi.dot(phi.dot(x)) + x - eta.dot(x) * xi, (1, 0), config))

    def eta_xi(sample):
        phi, xi, eta = s.fields(sample.point)
        return abs(eta.dot(xi) - 1.0)

    def phi_xi(sample):
        phi, xi, eta = s.fields(sample.point)
        return frame_residual(m, sample.point, phi.dot(xi), (1, 0), config)

    def eta_phi(sample):
        phi, xi, eta = s.fields(sample.point)
        return frame_residual(m, sample.point, eta.dot(phi), (0, 1), config)

    return [
        run.evaluate("phi-squared", "phi^2 X = -X + eta(X) xi", phi_squared),
        run.evaluate("eta-xi", "eta(xi) = 1", eta_xi),
        run.evaluate("phi-xi", "phi xi = 0", phi_xi),
        run.evaluate("eta-phi", "eta o phi = 0", eta_phi),
    ]


def verify_compatibility(s, plan, suite="axioms"):
    run = SuiteRun(suite, s.manifold, plan)

    def compatibility(sample):
        phi, xi, eta = s.fields(sample.point)
        g = s.manifold.metric(sample.point)
        return sample.each(lambda x, y, z, w: abs(
            phi.dot(x).dot(g).dot(phi.dot(y)) - x.dot(g).dot(y) + eta.dot(x) * eta.dot(y)))

    def duality(sample):
        phi, xi, eta = s.fields(sample.point)
        g = s.manifold.metric(sample.point)
        return frame_residual(s.manifold, sample.point, eta - g.dot(xi), (0, 1), plan.fd_config)

    return [
        run.evaluate("compatibility", "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", compatibility),
        run.evaluate("metric-duality", "eta = g(xi, .)", duality),
    ]


def contact_metric_check(s, plan, suite="axioms"):
    run = SuiteRun(suite, s.manifold, plan)

    def d_eta(sample):
        p = sample.point
        diff = exterior_derivative_1form(s.manifold, s.eta, p, plan.fd_config).components \
            - fundamental_two_form(s, p).components
        return frame_residual(s.manifold, p, diff, (0, 2), plan.fd_config)

    return [run.evaluate("contact-metric", "d eta(X, Y) = Phi(X, Y) = g(X, phi Y)", d_eta)]


def verify_sasakian(s, plan, suite="sasakian"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def nabla_phi(sample):
        p = sample.point
        phi, xi, eta = s.fields(p)
        g = m.metric(p)
        dphi = covariant_derivative(m, s.phi, p, config).components
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('akb,k,b->a', dphi, x, y) - x.dot(g).dot(y) * xi + eta.dot(y) * x, (1, 0), config))

    def nabla_xi(sample):
        p = sample.point
        phi = s.phi(p)
        dxi = covariant_derivative(m, s.xi, p, config).components
        return sample.each(lambda x, y, z, w: frame_residual(m, p, dxi.dot(x) + phi.dot(x), (1, 0), config))

    return [
        run.evaluate("nabla-phi", "(nabla_X phi) Y = g(X, Y) xi - eta(Y) X", nabla_phi),
        run.evaluate("nabla-xi", "nabla_X xi = -phi X", nabla_xi),
    ]


def nijenhuis_tensor(s, p, x, y, config=None, phi_jet=None):
    """
    [phi, phi](X, Y) = phi^2 [X, Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y]
    for X, Y extended as constant coordinate fields.
    """
    if phi_jet is None:
        phi_jet = s.phi.jet_at(p, 1, config)
    phi = phi_jet.value
    dphi = phi_jet.terms[1]

    def along(u, w):
        # derivative of the field phi(w) in direction u
        return np.einsum('c,cab,b->a', u, dphi, w)

    bracket = along(phi.dot(x), y) - along(phi.dot(y), x)
    return bracket + phi.dot(along(y, x)) - phi.dot(along(x, y))


def nijenhuis_normality(s, plan, suite="sasakian"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def normality(sample):
        p = sample.point
        m.check_point(p, s.phi.reach(1, config))
        xi = s.xi(p)
        phi_jet = s.phi.jet_at(p, 1, config)
        d_eta = exterior_derivative_1form(m, s.eta, p, config).components
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, nijenhuis_tensor(s, p, x, y, config, phi_jet) + 2.0 * x.dot(d_eta).dot(y) * xi, (1, 0), config))

    return [run.evaluate("normality", "[phi, phi](X, Y) + 2 d eta(X, Y) xi = 0", normality)]


def reeb_killing_check(s, plan, suite="sasakian"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def lie_g(sample):
        return frame_residual(m, sample.point, lie_derivative(m, s.xi, m.metric, sample.point, config).components,
                              (0, 2), config)

    def lie_phi(sample):
        return frame_residual(m, sample.point, lie_derivative(m, s.xi, s.phi, sample.point, config).components,
                              (1, 1), config)

    return [
        run.evaluate("reeb-killing", "L_xi g = 0", lie_g),
        run.evaluate("reeb-phi", "L_xi phi = 0", lie_phi),
    ]


def verify_curvature_identities(s, plan, suite="curvature-identities"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n

    def reeb_curvature(sample):
        p = sample.point
        r = m.geometry(p, 0, config).riemann
        xi, eta = s.xi(p), s.eta(p)
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('lijk,i,j,k->l', r, x, y, xi) - eta.dot(y) * x + eta.dot(x) * y, (1, 0), config))

    def reeb_first(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        xi, eta = s.xi(p), s.eta(p)
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('lijk,i,j,k->l', geo.riemann, xi, x, y) - x.dot(geo.g).dot(y) * xi + eta.dot(y) * x,
            (1, 0), config))

    def ricci_reeb(sample):
        p = sample.point
        ric = m.geometry(p, 0, config).ricci
        return frame_residual(m, p, ric.dot(s.xi(p)) - 2.0 * n * s.eta(p), (0, 1), config)

    return [
        run.evaluate("reeb-curvature", "R(X, Y) xi = eta(Y) X - eta(X) Y", reeb_curvature),
        run.evaluate("reeb-curvature-first", "R(xi, X) Y = g(X, Y) xi - eta(Y) X", reeb_first),
        run.evaluate("ricci-reeb", "Ric(X, xi) = 2n eta(X)", ricci_reeb),
    ]


def first_bianchi_check(s, plan, suite="curvature-identities"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold

    def bianchi(sample):
        p = sample.point
        r = m.geometry(p, 0, plan.fd_config).riemann

        def cyclic(x, y, z, w):
            total = (np.einsum('lijk,i,j,k->l', r, x, y, z) + np.einsum('lijk,i,j,k->l', r, y, z, x)
                     + np.einsum('lijk,i,j,k->l', r, z, x, y))
            return frame_residual(m, p, total, (1, 0), plan.fd_config)
        return sample.each(cyclic)

    return [run.evaluate("first-bianchi", "R(X, Y) Z + R(Y, Z) X + R(Z, X) Y = 0", bianchi)]


def riemann_symmetry_check(s, plan, suite="curvature-identities"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold

    def symmetries(sample):
        p = sample.point
        rl = m.geometry(p, 0, plan.fd_config).riemann_lowered
        return max(frame_residual(m, p, rl + rl.transpose(1, 0, 2, 3), (0, 4), plan.fd_config),
                   frame_residual(m, p, rl + rl.transpose(0, 1, 3, 2), (0, 4), plan.fd_config),
                   frame_residual(m, p, rl - rl.transpose(2, 3, 0, 1), (0, 4), plan.fd_config))

    return [run.evaluate("riemann-symmetries",
                         "R(X, Y, Z, W) = -R(Y, X, Z, W) = -R(X, Y, W, Z) = R(Z, W, X, Y)", symmetries)]


def metric_parallel_check(s, plan, suite="curvature-identities"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold

    def parallel(sample):
        p = sample.point
        return frame_residual(m, p, covariant_derivative(m, m.metric, p, plan.fd_config).components,
                              (0, 3), plan.fd_config)

    return [run.evaluate("metric-parallel", "nabla g = 0", parallel)]


def phi_projection_identity(s, plan, suite="curvature-identities"):
    """
    R(phi^2 X, phi^2 Y, phi^2 Z, phi^2 W) = R(X, Y, Z, W) - g(Y, Z) eta(X) eta(W)
    + g(X, Z) eta(Y) eta(W) + g(Y, W) eta(X) eta(Z) - g(X, W) eta(Y) eta(Z)
    """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold

    def projection(sample):
        p = sample.point
        geo = m.geometry(p, 0, plan.fd_config)
        rl, g = geo.riemann_lowered, geo.g
        phi, xi, eta = s.fields(p)
        phi2 = phi.dot(phi)

        def residual(x, y, z, w):
            ex, ey, ez, ew = eta.dot(x), eta.dot(y), eta.dot(z), eta.dot(w)
            left = np.einsum('ijkl,i,j,k,l->', rl, phi2.dot(x), phi2.dot(y), phi2.dot(z), phi2.dot(w))
            right = (np.einsum('ijkl,i,j,k,l->', rl, x, y, z, w)
                     - y.dot(g).dot(z) * ex * ew + x.dot(g).dot(z) * ey * ew
                     + y.dot(g).dot(w) * ex * ez - x.dot(g).dot(w) * ey * ez)
            return abs(left - right)
        return sample.each(residual)

    return [run.evaluate("phi-projected-curvature",
                         "R(phi^2 X, phi^2 Y, phi^2 Z, phi^2 W) = R(X, Y, Z, W) - g(Y, Z) eta(X) eta(W) "
                         "+ g(X, Z) eta(Y) eta(W) + g(Y, W) eta(X) eta(Z) - g(X, W) eta(Y) eta(Z)", projection)]


def ricci_operator_identities(s, plan, suite="curvature-identities"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n

    def along_reeb(sample):
        p = sample.point
        dq = ricci_operator_derivative(m, p, config).components
        return frame_residual(m, p, np.einsum('akb,k->ab', dq, s.xi(p)), (1, 1), config)

    def on_reeb(sample):
        p = sample.point
        dq = ricci_operator_derivative(m, p, config).components
        q = m.geometry(p, 0, config).ricci_operator
        phi, xi = s.phi(p), s.xi(p)
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('akb,k,b->a', dq, x, xi) - q.dot(phi.dot(x)) + 2.0 * n * phi.dot(x), (1, 0), config))

    return [
        run.evaluate("nabla-xi-q", "nabla_xi Q = 0", along_reeb),
        run.evaluate("nabla-q-xi", "(nabla_X Q) xi = Q phi X - 2n phi X", on_reeb),
    ]

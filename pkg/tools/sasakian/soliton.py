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
Ricci and *-Ricci solitons on Sasakian manifolds.

A *-Ricci soliton is a pair (V, lambda) with

    (L_V g)(X, Y) + 2 Ric*(X, Y) + 2 lambda g(X, Y) = 0.

The soliton equation is evaluated as a premise; its consequences (Lie
derivative of the connection, of the curvature, the Ricci form, the
lambda dichotomy and the two cases that follow from it) are reported as
conclusions gated on it. Identities that hold for every vector field
(commutation formulas, the different routes to L_V nabla and L_V R) are
checked unconditionally.
"""
from __future__ import division

import numpy as np

from . import utility
from .calculus import (TensorFieldFn, covariant_jet, lie_jet, lie_connection_jet, second_covariant_jet,
                       covariant_derivative, lie_derivative, lie_derivative_covariant, lie_derivative_transport,
                       exterior_derivative_1form, curvature_field, constant_jet_field, frame_residual)
from .errors import InputError, ValidationError, EvaluationError
from .jet import Jet, jet_einsum
from .report import PREMISE_PASSED, ResidualReport
from .sampling import SuiteRun, Premise, generator, sweep
from .star_ricci import star_ricci_frame_sum, star_ricci_operator, fit_einstein_form, classify_einstein, ricci_fn
from .tensor_core import TensorValue

SOLITON_FIELDS = ["xi", "zero", "poly"]

LAMBDA_ZERO = "zero"
LAMBDA_CASE_II = "twoTimes2nPlus1"
LAMBDA_OTHER = "other"

# scale of the random polynomial vector field
POLY_SCALE = 0.3


class SolitonInstance(object):
    """
    :param structure: ContactStructure
    :param V: potential vector field, TensorFieldFn of valence (1, 0)
    :param lam: soliton constant lambda
    """

    def __init__(self, structure, V, lam):
        if V.valence != (1, 0):
            raise ValidationError(V.name, "potential must be a vector field, valence is %s" % (V.valence,))
        try:
            lam = float(lam)
        except (TypeError, ValueError):
            raise InputError("lambda %r is not a number" % (lam,))
        if not np.isfinite(lam):
            raise InputError("lambda must be finite")
        self.structure = structure
        self.V = V
        self.lam = lam

    @property
    def manifold(self):
        return self.structure.manifold

    @property
    def n(self):
        return self.structure.n

    def __repr__(self):
        return "SolitonInstance(%s, V=%s, lambda=%g)" % (self.structure.name, self.V.name, self.lam)


def polynomial_field(dim, seed=0, exact=True, name="poly"):
    """
    V^a(x) = c^a + L^a_b x^b + 1/2 Q^a_bc x^b x^c with seeded coefficients.

    :param exact: attach the exact jet; without it derivatives come from finite differences
    """
    rng = generator(seed, name)
    c = POLY_SCALE * rng.standard_normal(dim)
    lin = POLY_SCALE * rng.standard_normal((dim, dim))
    quad = POLY_SCALE * rng.standard_normal((dim, dim, dim))
    quad = 0.5 * (quad + quad.transpose(0, 2, 1))

    def evaluate(p):
        return c + lin.dot(p) + 0.5 * np.einsum('abc,b,c->a', quad, p, p)

    def jet(p, order):
        p = np.asarray(p, dtype=float)
        terms = [evaluate(p)]
        if order >= 1:
            terms.append((lin + np.einsum('abc,c->ab', quad, p)).T)
        if order >= 2:
            terms.append(quad.transpose(1, 2, 0))
        if order >= 3:
            terms.append(np.zeros((dim,) * 3 + (dim,)))
        return Jet(terms, dim)

    return TensorFieldFn((1, 0), evaluate, jet=jet if exact else None, name=name)


def soliton_field(s, kind, seed=0):
    """ The potential selected by ``--soliton-field`` """
    if kind == "xi":
        return s.xi
    if kind == "zero":
        return constant_jet_field((1, 0), np.zeros(s.dim), name="zero")
    if kind == "poly":
        return polynomial_field(s.dim, seed)
    raise InputError("unknown soliton field '%s', expected one of %s" % (kind, ", ".join(SOLITON_FIELDS)))


def _check_reach(inst, p, order, config):
    inst.manifold.check_point(p, inst.V.reach(order, config))


def lie_metric(inst, p, config=None):
    return lie_derivative(inst.manifold, inst.V, inst.manifold.metric, p, config).components


def lowered_field(inst):
    """ v = g(V, .) as a 1-form, exact when V and the metric are """
    m = inst.manifold
    V = inst.V

    def evaluate(p):
        return m.metric(p).dot(V(p))

    def jet(p, order):
        return jet_einsum('ab,b->a', m.metric.jet_at(p, order), V.jet_at(p, order))

    return TensorFieldFn((0, 1), evaluate, jet=jet if (m.exact and V.exact) else None, name="v")


def ricci_soliton_residual(inst, plan, suite="soliton"):
    """ (L_V g) + 2 Ric + 2 lambda g, reported as a premise row """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    config = plan.fd_config

    def residual(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        return frame_residual(m, p, lie_metric(inst, p, config) + 2.0 * geo.ricci + 2.0 * inst.lam * geo.g,
                              (0, 2), config)

    return run.premise("ricci-soliton", "(L_V g)(X, Y) + 2 Ric(X, Y) + 2 lambda g(X, Y) = 0", residual)


def _star_soliton(inst, plan):
    m = inst.manifold
    config = plan.fd_config

    def residual(sample):
        p = sample.point
        diff = lie_metric(inst, p, config) + 2.0 * star_ricci_frame_sum(inst.structure, p, config).components \
            + 2.0 * inst.lam * m.metric(p)
        return frame_residual(m, p, diff, (0, 2), config)
    return residual


def star_soliton_residual(inst, plan, suite="soliton"):
    """
    The *-Ricci soliton equation as a premise row, and the reduced form
    (L_V g)(X, Y) = -lambda {g(X, Y) + eta(X) eta(Y)} it implies.

    :return: (Premise, [premise report, reduced form report])
    """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config
    premise, report = run.premise("star-soliton", "(L_V g)(X, Y) + 2 Ric*(X, Y) + 2 lambda g(X, Y) = 0",
                                  _star_soliton(inst, plan))

    def reduced(sample):
        p = sample.point
        eta = s.eta(p)
        diff = lie_metric(inst, p, config) + inst.lam * (m.metric(p) + np.outer(eta, eta))
        return frame_residual(m, p, diff, (0, 2), config)

    return premise, [report, run.evaluate("star-soliton-reduced", "(L_V g)(X, Y) = -lambda {g(X, Y) + eta(X) eta(Y)}",
                                          reduced, premise)]


def lie_nabla_tensor(inst, p, config=None, route="covariant"):
    """
    (L_V nabla) as ``[a, x, y]`` = ((L_V nabla)(d_x, d_y))^a.

    Routes:

    * ``covariant``: nabla_X nabla_Y V - nabla_{nabla_X Y} V + R(V, X) Y
    * ``metric``: g((L_V nabla)(X, Y), Z) = 1/2 {(nabla_X L_V g)(Y, Z) + (nabla_Y L_V g)(Z, X) - (nabla_Z L_V g)(X, Y)}
    * ``coordinate``: the Lie derivative of the Christoffel symbols
    """
    m = inst.manifold
    geo = m.geometry(p, 0, config)
    _check_reach(inst, p, 2, config)
    v_jet = inst.V.jet_at(p, 2, config)
    if route == "covariant":
        hessian = second_covariant_jet(v_jet, geo.gamma_jet).value
        return hessian + np.einsum('avxy,v->axy', geo.riemann, v_jet.value)
    if route == "metric":
        lie_g = lie_jet(v_jet, geo.metric_jet, (0, 2))
        d = covariant_jet(lie_g, geo.gamma_jet, (0, 2)).value
        lowered = 0.5 * (np.einsum('xyz->xyz', d) + np.einsum('yzx->xyz', d) - np.einsum('zxy->xyz', d))
        return np.einsum('az,xyz->axy', geo.g_inv, lowered)
    if route == "coordinate":
        return lie_connection_jet(geo.gamma_jet, v_jet).value
    raise InputError("unknown route '%s' for L_V nabla" % route)


def lie_nabla(inst, p, x, y, config=None):
    """ (L_V nabla)(X, Y) """
    value = np.einsum('axy,x,y->a', lie_nabla_tensor(inst, p, config), np.asarray(x, dtype=float),
                      np.asarray(y, dtype=float))
    return TensorValue(value, (1, 0))


def lie_nabla_from_metric(inst, p, x, y, config=None):
    value = np.einsum('axy,x,y->a', lie_nabla_tensor(inst, p, config, "metric"), np.asarray(x, dtype=float),
                      np.asarray(y, dtype=float))
    return TensorValue(value, (1, 0))


def lie_curvature(inst, p, config=None):
    """ (L_V R) ``[l, i, j, k]`` from the first order curvature jet """
    m = inst.manifold
    _check_reach(inst, p, 1, config)
    geo = m.geometry(p, 1, config)
    return lie_jet(inst.V.jet_at(p, 1, config), geo.riemann_jet, (1, 3)).value


def nabla_lie_nabla(inst, p, config=None):
    """ nabla (L_V nabla), ``[a, k, x, y]`` = ((nabla_k L_V nabla)(d_x, d_y))^a """
    m = inst.manifold
    _check_reach(inst, p, 3, config)
    geo = m.geometry(p, 1, config)
    lie = lie_connection_jet(geo.gamma_jet, inst.V.jet_at(p, 3, config))
    return covariant_jet(lie, geo.gamma_jet, (1, 2)).value


def commutation_check(inst, plan, suite="soliton"):
    """ (L_V R)(X, Y) Z = (nabla_X L_V nabla)(Y, Z) - (nabla_Y L_V nabla)(X, Z) """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    config = plan.fd_config

    def commutation(sample):
        p = sample.point
        lr = lie_curvature(inst, p, config)
        d = nabla_lie_nabla(inst, p, config)
        return frame_residual(m, p, lr - d + d.transpose(0, 2, 1, 3), (1, 3), config)

    return [run.evaluate("commutation", "(L_V R)(X, Y) Z = (nabla_X L_V nabla)(Y, Z) - (nabla_Y L_V nabla)(X, Z)",
                         commutation)]


def lie_nabla_routes_check(inst, plan, suite="soliton"):
    """ L_V nabla by three routes, and its symmetry """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    config = plan.fd_config

    def covariant_metric(sample):
        p = sample.point
        return frame_residual(m, p, lie_nabla_tensor(inst, p, config) - lie_nabla_tensor(inst, p, config, "metric"),
                              (1, 2), config)

    def covariant_coordinate(sample):
        p = sample.point
        return frame_residual(m, p, lie_nabla_tensor(inst, p, config)
                              - lie_nabla_tensor(inst, p, config, "coordinate"), (1, 2), config)

    def symmetry(sample):
        p = sample.point
        t = lie_nabla_tensor(inst, p, config)
        return frame_residual(m, p, t - t.transpose(0, 2, 1), (1, 2), config)

    return [
        run.evaluate("lie-nabla-metric-route", "nabla^2 V + R(V, .) . agrees with the L_V g half sum",
                     covariant_metric),
        run.evaluate("lie-nabla-coordinate-route", "nabla^2 V + R(V, .) . agrees with L_V Gamma",
                     covariant_coordinate),
        run.evaluate("lie-nabla-symmetry", "(L_V nabla)(X, Y) = (L_V nabla)(Y, X)", symmetry),
    ]


def lie_curvature_routes_check(inst, plan, suite="soliton"):
    """ L_V R by flow transport against the Leibniz expansion with nabla """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    config = plan.fd_config
    field = curvature_field(m, config)

    def routes(sample):
        p = sample.point
        transported = lie_derivative_transport(m, inst.V, field, p, config).components
        leibniz = lie_derivative_covariant(m, inst.V, field, p, config).components
        return frame_residual(m, p, transported - leibniz, (1, 3), config)

    return [run.evaluate("lie-curvature-routes", "L_V R by flow transport equals the covariant Leibniz form",
                         routes)]


def reeb_connection_check(inst, plan, suite="soliton", premise=None):
    """ (L_V nabla)(X, xi) = -2 Q phi X + 2(2n - 1) phi X, and (L_V nabla)(xi, xi) = 0 """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config
    n = inst.n

    def reeb(sample):
        p = sample.point
        t = lie_nabla_tensor(inst, p, config)
        q = m.geometry(p, 0, config).ricci_operator
        phi, xi = s.phi(p), s.xi(p)
        diff = np.einsum('axy,y->ax', t, xi) + 2.0 * q.dot(phi) - 2.0 * (2 * n - 1) * phi
        return frame_residual(m, p, diff, (1, 1), config)

    def reeb_reeb(sample):
        p = sample.point
        xi = s.xi(p)
        return frame_residual(m, p, np.einsum('axy,x,y->a', lie_nabla_tensor(inst, p, config), xi, xi),
                              (1, 0), config)

    return [
        run.evaluate("lie-nabla-reeb", "(L_V nabla)(X, xi) = -2 Q phi X + 2(2n-1) phi X", reeb, premise),
        run.evaluate("lie-nabla-reeb-reeb", "(L_V nabla)(xi, xi) = 0", reeb_reeb, premise),
    ]


def jacobi_along_reeb(inst, plan, suite="soliton", premise=None):
    """ nabla_xi nabla_xi V + R(V, xi) xi """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config

    def jacobi(sample):
        return frame_residual(m, sample.point, _jacobi(inst, sample.point, config), (1, 0), config)

    return [run.evaluate("jacobi-along-reeb", "nabla_xi nabla_xi V + R(V, xi) xi = 0", jacobi, premise)]


def _jacobi(inst, p, config):
    m = inst.manifold
    geo = m.geometry(p, 0, config)
    _check_reach(inst, p, 2, config)
    v_jet = inst.V.jet_at(p, 2, config)
    xi = inst.structure.xi(p)
    hessian = second_covariant_jet(v_jet, geo.gamma_jet).value
    dxi = covariant_derivative(m, inst.structure.xi, p, config).components
    dv = covariant_jet(v_jet, geo.gamma_jet, (1, 0)).value
    along = np.einsum('axy,x,y->a', hessian, xi, xi) + dv.dot(dxi.dot(xi))
    return along + np.einsum('lijk,i,j,k->l', geo.riemann, v_jet.value, xi, xi)


def soliton_ricci_form(inst, plan):
    """
    Fit Ric to alpha g + gamma eta (x) eta and attach the alpha that a
    *-Ricci soliton with this lambda forces, 2n - 1 - lambda / 2.
    """
    s = inst.structure
    fit = classify_einstein(s, plan, ricci_fn(s, plan.fd_config), "etaEinstein")
    fit.reference = 2 * inst.n - 1 - inst.lam / 2.0
    return fit


def _ricci_target(inst, p, config):
    s = inst.structure
    geo = inst.manifold.geometry(p, 0, config)
    eta = s.eta(p)
    n, lam = inst.n, inst.lam
    return geo.ricci - (2 * n - 1 - lam / 2.0) * geo.g - (1 + lam / 2.0) * np.outer(eta, eta)


def lambda_class(lam, n, tol):
    """ ``zero``, ``twoTimes2nPlus1`` or ``other`` """
    if abs(lam) <= tol:
        return LAMBDA_ZERO
    if abs(lam - 2 * (2 * n + 1)) <= tol:
        return LAMBDA_CASE_II
    return LAMBDA_OTHER


def soliton_type(lam, tol):
    if abs(lam) <= tol:
        return "steady"
    return "shrinking" if lam < 0 else "expanding"


def dv_and_F(inst, p, config=None):
    """
    dv for v = g(V, .) and F with dv(X, Y) = g(X, F Y).

    :return: (dv (0,2), F (1,1))
    """
    m = inst.manifold
    dv = exterior_derivative_1form(m, lowered_field(inst), p, config).components
    f = m.geometry(p, 0, config).g_inv.dot(dv)
    return TensorValue(dv, (0, 2)), TensorValue(f, (1, 1))


def _dv_from_nabla(inst, p, config):
    """ 2 dv(X, Y) = g(nabla_X V, Y) - g(nabla_Y V, X) """
    m = inst.manifold
    dV = covariant_derivative(m, inst.V, p, config).components
    lowered = m.metric(p).dot(dV)
    return 0.5 * (lowered - lowered.T).T


def _lie_phi(inst, p, config):
    return lie_derivative(inst.manifold, inst.V, inst.structure.phi, p, config).components


def _nabla_v_phi(inst, p, config):
    """ nabla_V phi """
    d = covariant_derivative(inst.manifold, inst.structure.phi, p, config).components
    return np.einsum('akb,k->ab', d, inst.V(p))


def _phi_invariance_side(inst, p, config):
    """ g(phi (nabla_V phi) X, Y) - dv(X, Y) + dv(phi X, phi Y) + dv(X, xi) eta(Y), as ``[x, y]`` """
    s = inst.structure
    g = inst.manifold.metric(p)
    phi, xi, eta = s.fields(p)
    dv = dv_and_F(inst, p, config)[0].components
    first = g.dot(phi).dot(_nabla_v_phi(inst, p, config)).T
    return first - dv + phi.T.dot(dv).dot(phi) + np.outer(dv.dot(xi), eta)


class PhiInvarianceEquivalence(object):
    """
    Whether L_V phi and the right hand side of the phi invariance identity
    vanish, each over the whole plan.

    :param lie_residual: largest frame component of L_V phi
    :param side_residual: largest frame component of the right hand side
    """

    def __init__(self, lie_residual, side_residual, tolerance):
        self.lie_residual = lie_residual
        self.side_residual = side_residual
        self.tolerance = tolerance

    @property
    def lie_vanishes(self):
        return self.lie_residual <= self.tolerance

    @property
    def side_vanishes(self):
        return self.side_residual <= self.tolerance

    @property
    def equivalent(self):
        return self.lie_vanishes == self.side_vanishes

    def describe(self):
        return "L_V phi = 0: %s; identity side = 0: %s" % (
            "yes" if self.lie_vanishes else "no", "yes" if self.side_vanishes else "no")

    def __repr__(self):
        return "PhiInvarianceEquivalence(lie=%.3e, side=%.3e, equivalent=%s)" % (
            self.lie_residual, self.side_residual, self.equivalent)


def phi_invariance_equivalence(inst, plan, suite="soliton"):
    m = inst.manifold
    config = plan.fd_config
    lie = sweep(m, plan, lambda sample: frame_residual(
        m, sample.point, _lie_phi(inst, sample.point, config), (1, 1), config)).max_residual
    side = sweep(m, plan, lambda sample: frame_residual(
        m, sample.point, _phi_invariance_side(inst, sample.point, config), (0, 2), config)).max_residual
    return PhiInvarianceEquivalence(lie, side, plan.tolerance(suite, "phi-invariance", m.exact))


def phi_invariance_identity(inst, plan, suite="soliton", premise=None):
    """
    g(phi (L_V phi) X, Y) against g(phi (nabla_V phi) X, Y) - dv(X, Y) + dv(phi X, phi Y) + dv(X, xi) eta(Y),
    gated on the soliton equation and Q* phi = phi Q*. A second row fails when
    only one of L_V phi and the right hand side vanishes.
    """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config

    def commutes(sample):
        return frame_residual(m, sample.point, _star_commutator(s, sample.point, config), (1, 1), config)

    commuting, commuting_report = run.premise("star-ricci-commutes", "Q* phi = phi Q*", commutes)
    gate = commuting if premise is None else Premise.combine(premise, commuting)

    def lie_side(p):
        return m.metric(p).dot(s.phi(p)).dot(_lie_phi(inst, p, config)).T

    def identity(sample):
        p = sample.point
        return frame_residual(m, p, lie_side(p) - _phi_invariance_side(inst, p, config), (0, 2), config)

    failure = []
    try:
        equivalence = phi_invariance_equivalence(inst, plan, suite)
        note = equivalence.describe()
    except EvaluationError as e:
        utility.critical("%s/phi-invariance: %s" % (suite, e))
        failure.append(e)
        equivalence, note = None, None

    def equivalent():
        if equivalence is None:
            raise failure[0]
        return 0.0 if equivalence.equivalent else 1.0

    return [
        commuting_report,
        run.evaluate("phi-invariance", "g(phi (L_V phi) X, Y) = g(phi (nabla_V phi) X, Y) - dv(X, Y) "
                     "+ dv(phi X, phi Y) + dv(X, xi) eta(Y)", identity, gate, note),
        run.evaluate_plan("phi-invariance-equivalence", "L_V phi = 0 if and only if the right hand side vanishes",
                          equivalent, gate, note),
    ]


class SolitonDiagnostics(object):
    """
    Plan level residuals of a soliton instance and its classification.

    :param lambda_class: ``zero``, ``twoTimes2nPlus1`` or ``other``
    :param signature: ``killing``, ``contactTransformation`` or ``other``
    :param soliton_type: ``shrinking``, ``steady`` or ``expanding``
    """

    def __init__(self, soliton, jacobi, ricci_form, eta_lie, xi_lie, phi_lie, phi_invariance,
                 lambda_class, signature, soliton_type, killing=None, contact=None, commutes=None):
        self.soliton = soliton
        self.jacobi = jacobi
        self.ricci_form = ricci_form
        self.eta_lie = eta_lie
        self.xi_lie = xi_lie
        self.phi_lie = phi_lie
        self.phi_invariance = phi_invariance
        self.lambda_class = lambda_class
        self.signature = signature
        self.soliton_type = soliton_type
        self.killing = killing
        self.contact = contact
        self.commutes = commutes

    def __repr__(self):
        return "SolitonDiagnostics(lambda=%s, signature=%s, type=%s, soliton=%.3e)" % (
            self.lambda_class, self.signature, self.soliton_type, self.soliton)


def _eta_lie(inst, p, config):
    return lie_derivative(inst.manifold, inst.V, inst.structure.eta, p, config).components


def _xi_lie(inst, p, config):
    return lie_derivative(inst.manifold, inst.V, inst.structure.xi, p, config).components


def contact_transformation_diagnostics(inst, plan):
    """ Residuals of the contact transformation (case II) signature, and the classifications. """
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config
    n = inst.n
    tol = plan.tolerance("soliton", "diagnostics", m.exact)
    k = 2 * (2 * n + 1)

    def maximum(fn, valence):
        return sweep(m, plan, lambda sample: frame_residual(m, sample.point, fn(sample.point), valence,
                                                            config)).max_residual

    soliton = sweep(m, plan, _star_soliton(inst, plan)).max_residual
    jacobi = maximum(lambda p: _jacobi(inst, p, config), (1, 0))
    ricci_form = maximum(lambda p: _ricci_target(inst, p, config), (0, 2))
    eta_lie = maximum(lambda p: _eta_lie(inst, p, config) + k * s.eta(p), (0, 1))
    xi_lie = maximum(lambda p: _xi_lie(inst, p, config) - k * s.xi(p), (1, 0))
    phi_lie = maximum(lambda p: _lie_phi(inst, p, config), (1, 1))
    phi_invariance = maximum(lambda p: m.metric(p).dot(s.phi(p)).dot(_lie_phi(inst, p, config)).T
                             - _phi_invariance_side(inst, p, config), (0, 2))
    killing = maximum(lambda p: lie_metric(inst, p, config), (0, 2))
    contact = maximum(lambda p: _eta_lie(inst, p, config)
                      - _eta_lie(inst, p, config).dot(s.xi(p)) * s.eta(p), (0, 1))
    if killing <= tol:
        signature = "killing"
    elif contact <= tol:
        signature = "contactTransformation"
    else:
        signature = "other"
    commutes = maximum(lambda p: _star_commutator(s, p, config), (1, 1))
    return SolitonDiagnostics(soliton, jacobi, ricci_form, eta_lie, xi_lie, phi_lie, phi_invariance,
                              lambda_class(inst.lam, n, tol), signature, soliton_type(inst.lam, tol),
                              killing, contact, commutes)


def _star_commutator(s, p, config):
    q = star_ricci_operator(s, p, config).components
    phi = s.phi(p)
    return q.dot(phi) - phi.dot(q)


def diagnostic_checks(inst, plan, suite="soliton", premise=None):
    """
    The plan level diagnostics as report rows. The soliton, Jacobi and Ricci
    form residuals are gated on the soliton equation, the case II residuals
    also on lambda = 2(2n+1). Whether V is Killing or a contact transformation
    is a classification, not a claim, so those rows show up as skipped rather
    than failed when V is neither.
    """
    run = SuiteRun(suite, inst.manifold, plan)
    n = inst.n
    try:
        d = contact_transformation_diagnostics(inst, plan)
    except EvaluationError as e:
        utility.critical("%s: diagnostics failed: %s" % (suite, e))
        return [ResidualReport(suite, "diagnostics", "plan level soliton diagnostics", None,
                               run.tolerance("diagnostics"), worst_point=getattr(e, "point", None), cause=str(e))]
    note = "lambda class %s, V is %s, %s soliton" % (d.lambda_class, d.signature, d.soliton_type)
    utility.status("%s: %s" % (suite, note))

    def gated(*premises):
        premises = [p for p in premises if p is not None]
        return Premise.combine(*premises) if premises else None

    def classified(identity, residual, otherwise):
        tol = run.tolerance(identity)
        if residual <= tol:
            return Premise(PREMISE_PASSED, residual, tol, identity)
        return Premise.violated(identity, otherwise)

    case_ii = Premise(PREMISE_PASSED, identity="lambda-class") if d.lambda_class == LAMBDA_CASE_II \
        else Premise.violated("lambda-class", "lambda is not 2(2n+1)")
    commuting = classified("diagnostic-star-ricci-commutes", d.commutes, "Q* phi != phi Q*")
    k = 2 * (2 * n + 1)
    rows = [
        ("diagnostic-soliton", "(L_V g) + 2 Ric* + 2 lambda g = 0", d.soliton, gated(premise)),
        ("diagnostic-jacobi", "nabla_xi nabla_xi V + R(V, xi) xi = 0", d.jacobi, gated(premise)),
        ("diagnostic-ricci-form", "Ric = (2n - 1 - lambda/2) g + (1 + lambda/2) eta (x) eta", d.ricci_form,
         gated(premise)),
        ("diagnostic-eta-lie", "L_V eta = -%d eta" % k, d.eta_lie, gated(premise, case_ii)),
        ("diagnostic-xi-lie", "L_V xi = %d xi" % k, d.xi_lie, gated(premise, case_ii)),
        ("diagnostic-phi-lie", "L_V phi = 0", d.phi_lie, gated(premise, case_ii)),
        ("diagnostic-phi-invariance", "phi invariance identity", d.phi_invariance, gated(premise, commuting)),
        ("diagnostic-killing", "L_V g = 0", d.killing,
         classified("diagnostic-killing", d.killing, "V is not Killing")),
        ("diagnostic-contact", "L_V eta = (L_V eta)(xi) eta", d.contact,
         classified("diagnostic-contact", d.contact, "V is not a contact transformation")),
    ]
    return [run.evaluate_plan(identity, anchor, lambda value=value: value, gate, note)
            for identity, anchor, value, gate in rows]


def soliton_ricci_form_check(inst, plan, suite="soliton", premise=None):
    """ The pooled eta-Einstein fit of Ric against alpha = 2n - 1 - lambda/2, gamma = 1 + lambda/2. """
    run = SuiteRun(suite, inst.manifold, plan)

    def misfit():
        fit = soliton_ricci_form(inst, plan)
        return max(fit.residual, fit.variation, abs(fit.alpha - fit.reference), abs(fit.gamma - 1 - inst.lam / 2.0))

    return [run.evaluate_plan("ricci-form-fit", "pooled Ric = alpha g + gamma eta (x) eta, alpha = 2n - 1 - lambda/2",
                              misfit, premise)]


def consequence_checks(inst, plan, suite="soliton", premise=None):
    """ Identities a *-Ricci soliton forces, each gated on ``premise``. """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config
    n, lam = inst.n, inst.lam

    def curvature_reeb(sample):
        p = sample.point
        lr = lie_curvature(inst, p, config)
        q = m.geometry(p, 0, config).ricci_operator
        xi, eta = s.xi(p), s.eta(p)
        expected = 4.0 * (q - np.outer(xi, eta) - (2 * n - 1) * np.eye(m.dim))
        return frame_residual(m, p, np.einsum('lijk,j,k->li', lr, xi, xi) - expected, (1, 1), config)

    def eta_xi_lie(sample):
        p = sample.point
        diff = _eta_lie(inst, p, config) - m.metric(p).dot(_xi_lie(inst, p, config)) + 2.0 * lam * s.eta(p)
        return frame_residual(m, p, diff, (0, 1), config)

    def connection_form(sample):
        p = sample.point
        phi, eta = s.phi(p), s.eta(p)
        expected = lam * (np.einsum('y,ax->axy', eta, phi) + np.einsum('x,ay->axy', eta, phi))
        return frame_residual(m, p, lie_nabla_tensor(inst, p, config) - expected, (1, 2), config)

    def ricci_lie(sample):
        p = sample.point
        _check_reach(inst, p, 1, config)
        geo = m.geometry(p, 1, config)
        lie_ric = lie_jet(inst.V.jet_at(p, 1, config), geo.ricci_jet, (0, 2)).value
        eta = s.eta(p)
        return frame_residual(m, p, lie_ric - 2.0 * lam * (geo.g - (2 * n + 1) * np.outer(eta, eta)), (0, 2), config)

    def nabla_v(sample):
        p = sample.point
        dV = covariant_derivative(m, inst.V, p, config).components
        f = dv_and_F(inst, p, config)[1].components
        q = star_ricci_operator(s, p, config).components
        return frame_residual(m, p, dV + q + lam * np.eye(m.dim) + f, (1, 1), config)

    def phi_lie_difference(sample):
        p = sample.point
        phi = s.phi(p)
        f = dv_and_F(inst, p, config)[1].components
        diff = _lie_phi(inst, p, config) - _nabla_v_phi(inst, p, config) - (f.dot(phi) - phi.dot(f))
        return frame_residual(m, p, diff, (1, 1), config)

    def ricci_form(sample):
        return frame_residual(m, sample.point, _ricci_target(inst, sample.point, config), (0, 2), config)

    def dichotomy(sample):
        return min(abs(lam), abs(lam - 2 * (2 * n + 1)))

    reports = reeb_connection_check(inst, plan, suite, premise)
    reports += jacobi_along_reeb(inst, plan, suite, premise)
    reports += [
        run.evaluate("lie-curvature-reeb", "(L_V R)(X, xi) xi = 4 {QX - eta(X) xi - (2n-1) X}", curvature_reeb,
                     premise),
        run.evaluate("lie-eta-xi", "(L_V eta)(X) - g(X, L_V xi) + 2 lambda eta(X) = 0", eta_xi_lie, premise),
        run.evaluate("ricci-form", "Ric = [2n-1-lambda/2] g + [1+lambda/2] eta (x) eta", ricci_form, premise),
        run.evaluate("lambda-dichotomy", "lambda = 0 or lambda = 2(2n+1)", dichotomy, premise),
        run.evaluate("lie-nabla-form", "(L_V nabla)(X, Y) = lambda {eta(Y) phi X + eta(X) phi Y}", connection_form,
                     premise),
        run.evaluate("lie-ricci", "(L_V Ric)(Y, Z) = 2 lambda {g(Y, Z) - (2n+1) eta(Y) eta(Z)}", ricci_lie, premise),
        run.evaluate("nabla-v", "nabla_X V = -Q* X - lambda X - F X", nabla_v, premise),
        run.evaluate("lie-phi-difference", "(L_V phi) X - (nabla_V phi) X = (F phi - phi F) X", phi_lie_difference,
                     premise),
    ]
    return reports


def case_checks(inst, plan, suite="soliton", premise=None):
    """
    The two cases of the lambda dichotomy: lambda = 0 makes V Killing;
    lambda = 2(2n+1) makes V a contact transformation leaving phi invariant.
    """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config
    n = inst.n
    k = 2 * (2 * n + 1)
    cls = lambda_class(inst.lam, n, run.tolerance("lambda-dichotomy"))

    def gate(wanted, note):
        own = Premise(PREMISE_PASSED, identity="lambda-class") if cls == wanted \
            else Premise.violated("lambda-class", note)
        return own if premise is None else Premise.combine(premise, own)

    case_i = gate(LAMBDA_ZERO, "lambda is not 0")
    case_ii = gate(LAMBDA_CASE_II, "lambda is not 2(2n+1)")

    def killing(sample):
        return frame_residual(m, sample.point, lie_metric(inst, sample.point, config), (0, 2), config)

    def eta_lie(sample):
        p = sample.point
        return frame_residual(m, p, _eta_lie(inst, p, config) + k * s.eta(p), (0, 1), config)

    def xi_lie(sample):
        p = sample.point
        return frame_residual(m, p, _xi_lie(inst, p, config) - k * s.xi(p), (1, 0), config)

    def phi_lie(sample):
        return frame_residual(m, sample.point, _lie_phi(inst, sample.point, config), (1, 1), config)

    return [
        run.evaluate("case-i-killing", "L_V g = 0", killing, case_i),
        run.evaluate("case-ii-eta-lie", "(L_V eta) = -2(2n+1) eta", eta_lie, case_ii),
        run.evaluate("case-ii-xi-lie", "L_V xi = 2(2n+1) xi", xi_lie, case_ii),
        run.evaluate("case-ii-phi-lie", "L_V phi = 0", phi_lie, case_ii),
    ]


def cross_checks(inst, plan, suite="soliton"):
    """ Identities valid for every vector field V. """
    run = SuiteRun(suite, inst.manifold, plan)
    m = inst.manifold
    s = inst.structure
    config = plan.fd_config

    def eta_lie_xi(sample):
        p = sample.point
        xi = s.xi(p)
        return abs(s.eta(p).dot(_xi_lie(inst, p, config)) + 0.5 * xi.dot(lie_metric(inst, p, config)).dot(xi))

    def phi_lie_expansion(sample):
        p = sample.point
        phi = s.phi(p)
        dV = covariant_derivative(m, inst.V, p, config).components
        expected = _nabla_v_phi(inst, p, config) - dV.dot(phi) + phi.dot(dV)
        return frame_residual(m, p, _lie_phi(inst, p, config) - expected, (1, 1), config)

    def dv_routes(sample):
        p = sample.point
        dv, f = dv_and_F(inst, p, config)
        g = m.metric(p)
        gf = g.dot(f.components)
        return max(frame_residual(m, p, dv.components - _dv_from_nabla(inst, p, config), (0, 2), config),
                   frame_residual(m, p, gf + gf.T, (0, 2), config))

    reports = lie_nabla_routes_check(inst, plan, suite)
    reports += commutation_check(inst, plan, suite)
    reports += lie_curvature_routes_check(inst, plan, suite)
    reports += [
        run.evaluate("eta-lie-xi", "eta(L_V xi) = -1/2 (L_V g)(xi, xi)", eta_lie_xi),
        run.evaluate("lie-phi-expansion", "(L_V phi) X = (nabla_V phi) X - nabla_{phi X} V + phi nabla_X V",
                     phi_lie_expansion),
        run.evaluate("dv-routes", "dv from d and from nabla V agree, F is skew self-adjoint", dv_routes),
    ]
    return reports


def structural_checks(s, plan, suite="soliton"):
    """
    Consequences of the Ricci form alone: alpha = -2 gives the lambda = 2(2n+1)
    form with alpha + gamma = 2n; Ric = (2n-1) g + eta (x) eta gives r = 4n^2.
    """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n

    def fixed(sample):
        p = sample.point
        fit = fit_einstein_form(m.geometry(p, 0, config).ricci, s, p, "etaEinstein", config)
        return max(fit.residual, abs(fit.alpha + 2.0))

    def case_ii_form(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        return frame_residual(m, p, geo.ricci + 2.0 * geo.g - 2.0 * (n + 1) * np.outer(eta, eta), (0, 2), config)

    def constants(sample):
        p = sample.point
        fit = fit_einstein_form(m.geometry(p, 0, config).ricci, s, p, "etaEinstein", config)
        return abs(fit.alpha + fit.gamma - 2 * n)

    def case_i(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        return frame_residual(m, p, geo.ricci - (2 * n - 1) * geo.g - np.outer(eta, eta), (0, 2), config)

    def scalar(sample):
        return abs(m.geometry(sample.point, 0, config).scalar - 4 * n * n)

    fixed_premise, fixed_report = run.premise("d-homothetically-fixed", "Ric = alpha g + gamma eta (x) eta, alpha = -2",
                                              fixed)
    case_i_premise, case_i_report = run.premise("ricci-case-i", "Ric = (2n-1) g + eta (x) eta", case_i)
    return [
        fixed_report,
        run.evaluate("case-ii-ricci-form", "Ric = -2 g + 2(n+1) eta (x) eta", case_ii_form, fixed_premise),
        run.evaluate("case-ii-constants", "alpha + gamma = 2n", constants, fixed_premise),
        case_i_report,
        run.evaluate("case-i-scalar", "r = 4n^2", scalar, case_i_premise),
    ]


def soliton_suite(inst, plan, suite="soliton"):
    """ Every soliton check for one (V, lambda). """
    premise, reports = star_soliton_residual(inst, plan, suite)
    reports.insert(0, ricci_soliton_residual(inst, plan, suite)[1])
    reports += consequence_checks(inst, plan, suite, premise)
    reports += case_checks(inst, plan, suite, premise)
    reports += phi_invariance_identity(inst, plan, suite, premise)
    reports += cross_checks(inst, plan, suite)
    reports += soliton_ricci_form_check(inst, plan, suite, premise)
    reports += structural_checks(inst.structure, plan, suite)
    reports += diagnostic_checks(inst, plan, suite, premise)
    return reports

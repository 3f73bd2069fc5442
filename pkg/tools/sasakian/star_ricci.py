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
The *-Ricci tensor Ric*(X, Y) = sum_i R(X, e_i, phi e_i, phi Y), its
relatives (phi-Ricci tensor, g^phi, *-scalar curvature) and Einstein type
classification of (0,2) tensors.
"""
from __future__ import division

import math

import numpy as np

from .calculus import covariant_jet, covariant_derivative, ricci_derivative, curvature_action, frame_residual
from .errors import InputError
from .jet import jet_einsum
from .sampling import SuiteRun, map_samples
from .tensor_core import TensorValue, adapted_frame, to_frame

# per point fit residual and variation of fitted constants accepted by a classification
CLASSIFY_TOL = 1e-5

KINDS = ["etaEinstein", "starEtaEinstein", "weaklyPhiEinstein", "phiEinstein", "einstein"]
NONE = "none"


def star_ricci_frame_sum(s, p, config=None, frame=None):
    """
    sum_i R(X, e_i, phi e_i, phi Y) over a g-orthonormal frame.

    :param frame: OrthonormalFrame, defaults to the one built from the coordinate basis
    """
    geo = s.manifold.geometry(p, 0, config)
    phi = s.phi(p)
    e = (frame or geo.frame).matrix
    value = np.einsum('xjkw,ji,kl,li,wy->xy', geo.riemann_lowered, e, phi, e, phi)
    return TensorValue(value, (0, 2))


def star_ricci_bianchi(s, p, config=None, frame=None):
    """ 1/2 sum_i g(phi R(X, phi Y) e_i, e_i) """
    geo = s.manifold.geometry(p, 0, config)
    phi = s.phi(p)
    e = (frame or geo.frame).matrix
    value = 0.5 * np.einsum('lxbk,by,ki,al,ac,ci->xy', geo.riemann, phi, e, phi, geo.g, e)
    return TensorValue(value, (0, 2))


def star_ricci_lemma(s, p, config=None):
    """ Ric - (2n - 1) g - eta (x) eta, the closed form on Sasakian manifolds """
    geo = s.manifold.geometry(p, 0, config)
    eta = s.eta(p)
    return TensorValue(geo.ricci - (2 * s.n - 1) * geo.g - np.outer(eta, eta), (0, 2))


def star_ricci_jet(s, p, order, config=None):
    """ Frame free jet of Ric*, R^l_xjk g_lw g^jm phi^k_m phi^w_y. """
    geo = s.manifold.geometry(p, order, config)
    phi = s.phi.jet_at(p, order, config)
    return jet_einsum('lxjk,lw,jm,km,wy->xy', geo.riemann_jet, geo.metric_jet, geo.inverse_jet, phi, phi)


def star_ricci_derivative(s, p, config=None):
    """ nabla Ric*, ``[k, x, y]`` = (nabla_k Ric*)(x, y) """
    geo = s.manifold.geometry(p, 1, config)
    return TensorValue(covariant_jet(star_ricci_jet(s, p, 1, config), geo.gamma_jet, (0, 2)).value, (0, 3))


def star_ricci_operator(s, p, config=None):
    """ Q* with Ric*(X, Y) = g(Q* X, Y) """
    geo = s.manifold.geometry(p, 0, config)
    return TensorValue(geo.g_inv.dot(star_ricci_frame_sum(s, p, config).components.T), (1, 1))


def star_scalar(s, p, config=None):
    geo = s.manifold.geometry(p, 0, config)
    e = geo.frame.matrix
    return float(np.einsum('xy,xi,yi->', star_ricci_frame_sum(s, p, config).components, e, e))


def phi_ricci(s, p, config=None):
    """ Symmetric part of Ric* """
    star = star_ricci_frame_sum(s, p, config).components
    return TensorValue(0.5 * (star + star.T), (0, 2))


def g_phi(s, p):
    """ g^phi(X, Y) = g(phi X, phi Y) """
    phi = s.phi(p)
    return TensorValue(phi.T.dot(s.manifold.metric(p)).dot(phi), (0, 2))


class EinsteinFit(object):
    """
    Result of fitting a (0,2) tensor to alpha g + gamma eta (x) eta.

    For the phi kinds the model is beta g^phi = beta g - beta eta (x) eta,
    reported as alpha = beta, gamma = -beta.

    :param kind: requested kind, or ``none`` when the fit does not hold
    :param residual: largest frame component of the misfit
    :param variation: largest deviation of per point constants from the pooled ones
    :param reference: expected value of alpha (or beta) from a formula, when one is compared
    """

    def __init__(self, kind, alpha, gamma, residual, variation=0.0, reference=None):
        self.kind = kind
        self.alpha = alpha
        self.gamma = gamma
        self.residual = residual
        self.variation = variation
        self.reference = reference

    @property
    def beta(self):
        return self.alpha

    @property
    def holds(self):
        return self.kind != NONE

    def __repr__(self):
        return "EinsteinFit(%s, alpha=%.6g, gamma=%.6g, residual=%.3e, variation=%.3e)" % (
            self.kind, self.alpha, self.gamma, self.residual, self.variation)


def _check_kind(kind):
    if kind not in KINDS:
        raise InputError("unknown Einstein kind '%s', expected one of %s" % (kind, ", ".join(KINDS)))


def _basis(s, p, kind):
    g = s.manifold.metric(p)
    eta = s.eta(p)
    if kind in ("etaEinstein", "starEtaEinstein"):
        return [g, np.outer(eta, eta)]
    if kind in ("weaklyPhiEinstein", "phiEinstein"):
        return [g_phi(s, p).components]
    return [g]


def _coefficients(kind, c):
    if kind in ("etaEinstein", "starEtaEinstein"):
        return float(c[0]), float(c[1])
    if kind in ("weaklyPhiEinstein", "phiEinstein"):
        return float(c[0]), -float(c[0])
    return float(c[0]), 0.0


def _frame_rows(t, s, p, kind, config):
    """ Least squares rows in the orthonormal frame: (A, b) with A c ~ b. """
    frame = s.manifold.geometry(p, 0, config).frame
    t = np.asarray(t, dtype=float)
    sym = 0.5 * (t + t.T)
    columns = [to_frame(b, (0, 2), frame).ravel() for b in _basis(s, p, kind)]
    return np.array(columns).T, to_frame(sym, (0, 2), frame).ravel()


def fit_einstein_form(t, s, p, kind, config=None, tol=CLASSIFY_TOL):
    """
    Pointwise least squares fit of the symmetric part of ``t``.

    :param t: (0,2) components or TensorValue at p
    :return: EinsteinFit, kind ``none`` when the misfit exceeds ``tol``
    """
    _check_kind(kind)
    t = t.components if isinstance(t, TensorValue) else t
    a, b = _frame_rows(t, s, p, kind, config)
    c = np.linalg.lstsq(a, b, rcond=None)[0]
    residual = float(np.abs(a.dot(c) - b).max())
    alpha, gamma = _coefficients(kind, c)
    return EinsteinFit(kind if residual <= tol else NONE, alpha, gamma, residual)


def classify_einstein(s, plan, tensor_fn, kind, tol=CLASSIFY_TOL):
    """
    Fit ``tensor_fn(p)`` over every sample of ``plan``.

    The normal equations are pooled with ``math.fsum`` so the constants do not
    depend on the sample order. ``weaklyPhiEinstein`` lets beta vary from point
    to point; every other kind needs the constants to agree across the samples.

    :return: EinsteinFit with the pooled constants
    """
    _check_kind(kind)
    rows, _ = map_samples(s.manifold, plan, lambda sample: _frame_rows(
        tensor_fn(sample.point), s, sample.point, kind, plan.fd_config))
    k = rows[0][0].shape[1]
    normal = np.array([[math.fsum(float(x) for a, b in rows for x in a[:, i] * a[:, j]) for j in range(k)]
                       for i in range(k)])
    rhs = np.array([math.fsum(float(x) for a, b in rows for x in a[:, i] * b) for i in range(k)])
    pooled = np.linalg.solve(normal, rhs)
    local = [np.linalg.lstsq(a, b, rcond=None)[0] for a, b in rows]
    variation = max(float(np.abs(c - pooled).max()) for c in local)
    if kind == "weaklyPhiEinstein":
        residual = max(float(np.abs(a.dot(c) - b).max()) for (a, b), c in zip(rows, local))
        holds = residual <= tol
    else:
        residual = max(float(np.abs(a.dot(pooled) - b).max()) for a, b in rows)
        holds = residual <= tol and variation <= tol
    alpha, gamma = _coefficients(kind, pooled)
    return EinsteinFit(kind if holds else NONE, alpha, gamma, residual, variation)


def _fit_misfit(s, p, t, alpha, gamma, config):
    """ Frame residual of the symmetric part of t - (alpha g + gamma eta (x) eta) """
    eta = s.eta(p)
    model = alpha * s.manifold.metric(p) + gamma * np.outer(eta, eta)
    t = np.asarray(t, dtype=float)
    return frame_residual(s.manifold, p, 0.5 * (t + t.T) - model, (0, 2), config)


def sample_frames(s, sample, config=None):
    """ Two orthonormal frames seeded by the sample vectors, for frame independence checks. """
    metric = s.manifold.geometry(sample.point, 0, config).metric
    coordinates = list(np.eye(s.dim))
    first = adapted_frame(metric, candidates=list(sample.vectors[0]) + coordinates)
    second = adapted_frame(metric, candidates=list(sample.vectors[-1][::-1]) + coordinates[::-1])
    return first, second


def star_ricci_routes_check(s, plan, suite="star-ricci"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n

    def residual(p, t):
        return frame_residual(m, p, t, (0, 2), config)

    def frame_bianchi(sample):
        p = sample.point
        return residual(p, star_ricci_frame_sum(s, p, config).components - star_ricci_bianchi(s, p, config).components)

    def frame_lemma(sample):
        p = sample.point
        return residual(p, star_ricci_frame_sum(s, p, config).components - star_ricci_lemma(s, p, config).components)

    def bianchi_lemma(sample):
        p = sample.point
        return residual(p, star_ricci_bianchi(s, p, config).components - star_ricci_lemma(s, p, config).components)

    def reeb(sample):
        p = sample.point
        star = star_ricci_frame_sum(s, p, config).components
        xi = s.xi(p)
        return max(frame_residual(m, p, star.dot(xi), (0, 1), config),
                   frame_residual(m, p, xi.dot(star), (0, 1), config))

    def symmetry(sample):
        star = star_ricci_frame_sum(s, sample.point, config).components
        return residual(sample.point, star - star.T)

    def phi_ricci_equal(sample):
        p = sample.point
        return residual(p, phi_ricci(s, p, config).components - star_ricci_frame_sum(s, p, config).components)

    def g_phi_form(sample):
        p = sample.point
        eta = s.eta(p)
        return residual(p, g_phi(s, p).components - m.metric(p) + np.outer(eta, eta))

    def star_scalar_trace(sample):
        p = sample.point
        return abs(star_scalar(s, p, config) - (m.geometry(p, 0, config).scalar - 4 * n * n))

    def frame_independence(sample):
        p = sample.point
        reference = star_ricci_frame_sum(s, p, config).components
        return max(residual(p, star_ricci_frame_sum(s, p, config, frame).components - reference)
                   for frame in sample_frames(s, sample, config))

    return [
        run.evaluate("routes-frame-bianchi", "frame sum and first Bianchi routes to Ric* agree", frame_bianchi),
        run.evaluate("routes-frame-lemma", "Ric* = Ric - (2n-1) g - eta (x) eta", frame_lemma),
        run.evaluate("routes-bianchi-lemma", "first Bianchi route and closed form of Ric* agree", bianchi_lemma),
        run.evaluate("star-ricci-reeb", "Ric*(X, xi) = Ric*(xi, X) = 0", reeb),
        run.evaluate("star-ricci-symmetry", "Ric*(X, Y) = Ric*(Y, X)", symmetry),
        run.evaluate("phi-ricci", "Ric^phi = Ric*", phi_ricci_equal),
        run.evaluate("g-phi", "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", g_phi_form),
        run.evaluate("star-scalar", "r* = r - 4n^2", star_scalar_trace),
        run.evaluate("frame-independence", "Ric* does not depend on the orthonormal frame", frame_independence),
    ]


def yano_kon_check(s, plan, suite="star-ricci"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def yano_kon(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        diff = geo.ricci - star_ricci_bianchi(s, p, config).components - (2 * s.n - 1) * geo.g - np.outer(eta, eta)
        return frame_residual(m, p, diff, (0, 2), config)

    return [run.evaluate("yano-kon", "Ric(X, Y) = 1/2 sum g(phi R(X, phi Y) e_i, e_i) + (2n-1) g(X, Y) "
                                     "+ eta(X) eta(Y)", yano_kon)]


def weakly_phi_einstein_check(s, plan, suite="star-ricci"):
    """ Pointwise fit Ric* = beta g^phi. """
    run = SuiteRun(suite, s.manifold, plan)
    config = plan.fd_config

    def fit(sample):
        p = sample.point
        return fit_einstein_form(star_ricci_frame_sum(s, p, config), s, p, "weaklyPhiEinstein", config).residual

    return [run.evaluate("weakly-phi-einstein", "Ric* = beta g^phi pointwise", fit)]


def eta_parallel_star_residual(s, plan, suite="star-ricci"):
    """
    (nabla_Z Ric*)(phi X, phi Y) from the full nabla Ric* tensor, and the
    decomposition nabla Ric* = nabla Ric - nabla eta (x) eta - eta (x) nabla eta
    checked on the same samples.
    """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config

    def eta_parallel(sample):
        p = sample.point
        d = star_ricci_derivative(s, p, config).components
        phi = s.phi(p)
        return sample.each(lambda x, y, z, w: abs(np.einsum('kxy,k,x,y->', d, z, phi.dot(x), phi.dot(y))))

    def decomposition(sample):
        p = sample.point
        d = star_ricci_derivative(s, p, config).components
        d_ric = ricci_derivative(m, p, config).components
        d_eta = covariant_derivative(m, s.eta, p, config).components
        eta = s.eta(p)
        expected = d_ric - np.einsum('kx,y->kxy', d_eta, eta) - np.einsum('x,ky->kxy', eta, d_eta)
        return frame_residual(m, p, d - expected, (0, 3), config)

    return [
        run.evaluate("eta-parallel", "(nabla_Z Ric*)(phi X, phi Y) = 0", eta_parallel),
        run.evaluate("eta-parallel-decomposition",
                     "(nabla_Z Ric*)(X, Y) = (nabla_Z Ric)(X, Y) - g(Z, phi X) eta(Y) - g(Z, phi Y) eta(X)",
                     decomposition),
    ]


def _semi_symmetry(s, plan, substitute=None):
    config = plan.fd_config
    m = s.manifold

    def residual(sample):
        p = sample.point
        t = star_ricci_frame_sum(s, p, config).components if substitute is None else substitute(p)
        return sample.each(lambda x, y, z, w: abs(
            z.dot(curvature_action(m, p, x, y, t, config).components).dot(w)))
    return residual


def star_semi_symmetry_residual(s, plan, suite="semi-symmetry", substitute=None):
    """
    Ric*(R(X, Y) Z, W) + Ric*(Z, R(X, Y) W).

    :param substitute: optional ``p -> (0,2) components`` used in place of Ric*
    """
    run = SuiteRun(suite, s.manifold, plan)
    return [run.evaluate("star-semi-symmetry", "Ric*(R(X, Y) Z, W) + Ric*(Z, R(X, Y) W) = 0",
                         _semi_symmetry(s, plan, substitute))]


def semi_symmetric_flatness_check(s, plan, suite="semi-symmetry"):
    """ R(X, Y).Ric* = 0 implies Ric* = 0 and Ric = (2n - 1) g + eta (x) eta """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    premise, premise_report = run.premise("star-semi-symmetric", "R(X, Y).Ric* = 0", _semi_symmetry(s, plan))

    def flat(sample):
        p = sample.point
        return frame_residual(m, p, star_ricci_frame_sum(s, p, config).components, (0, 2), config)

    def ricci_form(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        return frame_residual(m, p, geo.ricci - (2 * s.n - 1) * geo.g - np.outer(eta, eta), (0, 2), config)

    return [
        premise_report,
        run.evaluate("star-ricci-flat", "Ric* = 0", flat, premise),
        run.evaluate("ricci-form", "Ric = (2n-1) g + eta (x) eta", ricci_form, premise),
    ]


def einstein_report(run, identity, anchor, s, tensor_fn, fit, premise=None, note=None):
    """ Report the misfit of ``tensor_fn`` against the constants of ``fit`` on every sample. """
    config = run.config

    def misfit(sample):
        p = sample.point
        return _fit_misfit(s, p, tensor_fn(p), fit.alpha, fit.gamma, config)

    return run.evaluate(identity, anchor, misfit, premise, note)


def ricci_fn(s, config=None):
    """ p -> Ric components, for classify_einstein """
    return lambda p: s.manifold.geometry(p, 0, config).ricci


def star_ricci_fn(s, config=None):
    return lambda p: star_ricci_frame_sum(s, p, config).components


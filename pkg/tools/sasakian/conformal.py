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
Weyl conformal curvature, phi-conformal flatness and the consequences of
conformal flatness for Sasakian manifolds. Sectional and phi-sectional
curvature and constant curvature fits live here as well.

In dimension 3 the Weyl tensor vanishes identically, so Weyl based premises
carry no information there. The checks that only make sense with a nontrivial
Weyl tensor are reported as skipped in that dimension.
"""
from __future__ import division

import math

import numpy as np

from .calculus import riemann_derivative, scalar_gradient, frame_residual
from .errors import ValidationError, DegenerateError
from .sampling import SuiteRun, Premise, map_samples
from .star_ricci import (star_ricci_frame_sum, star_ricci_derivative, g_phi, fit_einstein_form,
                         classify_einstein, einstein_report, star_ricci_fn, EinsteinFit, NONE)
from .tensor_core import TensorValue, GRAM_DET_MIN, to_frame

VACUOUS_DIM3 = "vacuous in dimension 3"
WEYL_DIM3 = "Weyl tensor vanishes identically in dimension 3"

# phi-sectional inputs must be horizontal and unit to this accuracy
PHI_SECTIONAL_TOL = 1e-8


def _manifold(s):
    return getattr(s, "manifold", s)


def weyl_tensor(s, p, config=None):
    """
    C(X,Y)Z = R(X,Y)Z - 1/(2n-1) {Ric(Y,Z) X - Ric(X,Z) Y + g(Y,Z) QX - g(X,Z) QY}
              + r / (2n(2n-1)) {g(Y,Z) X - g(X,Z) Y}

    :param s: ContactStructure or ChartManifold
    """
    m = _manifold(s)
    geo = m.geometry(p, 0, config)
    n = m.n
    delta = np.eye(m.dim)
    ric, g, q = geo.ricci, geo.g, geo.ricci_operator
    ricci_part = (np.einsum('jk,li->lijk', ric, delta) - np.einsum('ik,lj->lijk', ric, delta)
                  + np.einsum('jk,li->lijk', g, q) - np.einsum('ik,lj->lijk', g, q))
    metric_part = np.einsum('jk,li->lijk', g, delta) - np.einsum('ik,lj->lijk', g, delta)
    value = geo.riemann - ricci_part / (2 * n - 1) + geo.scalar / (2 * n * (2 * n - 1)) * metric_part
    return TensorValue(value, (1, 3))


def beta_from_scalar(r, n):
    """ (r - 4n) / (2n(2n - 1)) """
    return (r - 4 * n) / (2 * n * (2 * n - 1))


def weyl_trace_check(s, plan, suite="conformal"):
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold

    def traces(sample):
        p = sample.point
        c = weyl_tensor(s, p, plan.fd_config).components
        return max(frame_residual(m, p, np.einsum('lljk->jk', c), (0, 2), plan.fd_config),
                   frame_residual(m, p, np.einsum('lilk->ik', c), (0, 2), plan.fd_config),
                   frame_residual(m, p, np.einsum('lijl->ij', c), (0, 2), plan.fd_config))

    return [run.evaluate("weyl-trace-free", "every contraction of C vanishes", traces)]


def _phi_conformal(s, plan):
    config = plan.fd_config

    def residual(sample):
        p = sample.point
        c = weyl_tensor(s, p, config).components
        phi = s.phi(p)
        return sample.each(lambda x, y, z, w: frame_residual(
            s.manifold, p, phi.dot(phi).dot(np.einsum('lijk,i,j,k->l', c, phi.dot(x), phi.dot(y), phi.dot(z))),
            (1, 0), config))
    return residual


def phi_conformal_premise(run, s):
    """ phi^2 C(phi X, phi Y) phi Z = 0, reported as a premise row. """
    note = WEYL_DIM3 if s.dim == 3 else None
    return run.premise("phi-conformally-flat", "phi^2 C(phi X, phi Y) phi Z = 0", _phi_conformal(s, run.plan), note)


def phi_conformal_flatness_residual(s, plan, suite="conformal"):
    run = SuiteRun(suite, s.manifold, plan)
    return [phi_conformal_premise(run, s)[1]]


def horizontal_curvature_check(s, plan, suite="conformal", premise=None):
    """
    R(phi X, phi Y, phi Z, phi W) = beta {g(phi Y, phi Z) g(phi X, phi W) - g(phi X, phi Z) g(phi Y, phi W)}
    with beta = (r - 4n) / (2n(2n - 1)).
    """
    run = SuiteRun(suite, s.manifold, plan)
    identity = "horizontal-curvature"
    anchor = "R(phi X, phi Y, phi Z, phi W) = beta {g(phi Y, phi Z) g(phi X, phi W) - g(phi X, phi Z) g(phi Y, phi W)}"
    if s.dim == 3:
        return [run.skip(identity, anchor, VACUOUS_DIM3)]
    m = s.manifold
    config = plan.fd_config

    def horizontal(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        phi = s.phi(p)
        beta = beta_from_scalar(geo.scalar, s.n)

        def residual(x, y, z, w):
            px, py, pz, pw = phi.dot(x), phi.dot(y), phi.dot(z), phi.dot(w)
            g = geo.g
            left = np.einsum('ijkl,i,j,k,l->', geo.riemann_lowered, px, py, pz, pw)
            right = beta * (py.dot(g).dot(pz) * px.dot(g).dot(pw) - px.dot(g).dot(pz) * py.dot(g).dot(pw))
            return abs(left - right)
        return sample.each(residual)

    return [run.evaluate(identity, anchor, horizontal, premise)]


def expanded_curvature_check(s, plan, suite="conformal", premise=None):
    """
    R(X,Y,Z,W) = beta {g(Y,Z) g(X,W) - g(X,Z) g(Y,W)}
                 - (r - 2n(2n+1)) / (2n(2n-1)) {g(Y,Z) eta(X) eta(W) - g(X,Z) eta(Y) eta(W)
                                                + g(X,W) eta(Y) eta(Z) - g(Y,W) eta(X) eta(Z)}
    """
    run = SuiteRun(suite, s.manifold, plan)
    identity = "expanded-curvature"
    anchor = "R = beta g.g - (r - 2n(2n+1)) / (2n(2n-1)) (g.eta eta terms)"
    if s.dim == 3:
        return [run.skip(identity, anchor, VACUOUS_DIM3)]
    m = s.manifold
    config = plan.fd_config
    n = s.n

    def expanded(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        g = geo.g
        beta = beta_from_scalar(geo.scalar, n)
        mixed = (geo.scalar - 2 * n * (2 * n + 1)) / (2 * n * (2 * n - 1))

        def residual(x, y, z, w):
            ex, ey, ez, ew = eta.dot(x), eta.dot(y), eta.dot(z), eta.dot(w)
            gyz, gxz, gxw, gyw = y.dot(g).dot(z), x.dot(g).dot(z), x.dot(g).dot(w), y.dot(g).dot(w)
            left = np.einsum('ijkl,i,j,k,l->', geo.riemann_lowered, x, y, z, w)
            right = beta * (gyz * gxw - gxz * gyw) - mixed * (gyz * ex * ew - gxz * ey * ew + gxw * ey * ez
                                                              - gyw * ex * ez)
            return abs(left - right)
        return sample.each(residual)

    return [run.evaluate(identity, anchor, expanded, premise)]


def phi_conformal_star_eta_einstein(s, plan):
    """
    Fit Ric* against beta (g - eta (x) eta) and compare with beta computed from
    the scalar curvature. ``reference`` holds the mean of the latter.

    :return: EinsteinFit of kind ``starEtaEinstein`` or ``none``
    """
    config = plan.fd_config
    m = s.manifold
    fit = classify_einstein(s, plan, star_ricci_fn(s, config), "weaklyPhiEinstein")
    betas, _ = map_samples(m, plan, lambda sample: beta_from_scalar(m.geometry(sample.point, 0, config).scalar, s.n))
    reference = math.fsum(betas) / len(betas)
    deviation = max(abs(fit.beta - b) for b in betas)
    holds = fit.holds and fit.variation <= plan.tolerance("conformal", "star-eta-einstein", m.exact) \
        and deviation <= plan.tolerance("conformal", "star-eta-einstein", m.exact)
    return EinsteinFit("starEtaEinstein" if holds else NONE, fit.alpha, fit.gamma, max(fit.residual, deviation),
                       fit.variation, reference)


def _star_fit_misfit(s, plan):
    fit = phi_conformal_star_eta_einstein(s, plan)
    return max(fit.residual, abs(fit.beta - fit.reference))


def star_eta_einstein_check(s, plan, suite="conformal", premise=None):
    """ Ric* = beta (g - eta (x) eta) with beta = (r - 4n) / (2n(2n - 1)), fitted beta against formula beta. """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    note = WEYL_DIM3 if s.dim == 3 else None

    def star_form(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        eta = s.eta(p)
        beta = beta_from_scalar(geo.scalar, s.n)
        diff = star_ricci_frame_sum(s, p, config).components - beta * (geo.g - np.outer(eta, eta))
        return frame_residual(m, p, diff, (0, 2), config)

    def beta_agreement(sample):
        p = sample.point
        fit = fit_einstein_form(star_ricci_frame_sum(s, p, config), s, p, "weaklyPhiEinstein", config)
        return abs(fit.beta - beta_from_scalar(m.geometry(p, 0, config).scalar, s.n))

    return [
        run.evaluate("star-eta-einstein", "Ric* = beta g - beta eta (x) eta, beta = (r - 4n) / (2n(2n-1))",
                     star_form, premise, note),
        run.evaluate("star-eta-einstein-beta", "fitted beta of Ric* = beta g^phi equals (r - 4n) / (2n(2n-1))",
                     beta_agreement, premise, note),
        run.evaluate_plan("star-eta-einstein-fit", "pooled Ric* = beta g^phi, beta = (r - 4n) / (2n(2n-1))",
                          lambda: _star_fit_misfit(s, plan), premise, note),
    ]


def phi_conformal_corollaries(s, plan, suite="conformal", premise=None):
    """
    Ric is eta-Einstein; with constant r, Ric* is phi-Einstein; and
    (nabla_W Ric*)(phi X, phi Y) = dr(W) / (2n(2n - 1)) g(phi X, phi Y).
    """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n
    note = WEYL_DIM3 if s.dim == 3 else None
    reports = []

    def eta_einstein(sample):
        p = sample.point
        return fit_einstein_form(m.geometry(p, 0, config).ricci, s, p, "etaEinstein", config).residual

    reports.append(run.evaluate("eta-einstein", "Ric = alpha g + gamma eta (x) eta", eta_einstein, premise, note))

    def constant_scalar(sample):
        p = sample.point
        return frame_residual(m, p, scalar_gradient(m, p, config).components, (0, 1), config)

    constant, constant_report = run.premise("constant-scalar-curvature", "dr = 0", constant_scalar)
    reports.append(constant_report)
    both = constant if premise is None else Premise.combine(premise, constant)
    fit = classify_einstein(s, plan, star_ricci_fn(s, config), "phiEinstein")
    reports.append(einstein_report(run, "phi-einstein", "Ric* = beta g^phi with constant beta",
                                   s, star_ricci_fn(s, config), fit, both, note))

    def eta_parallel(sample):
        p = sample.point
        d = star_ricci_derivative(s, p, config).components
        dr = scalar_gradient(m, p, config).components
        gp = g_phi(s, p).components
        expected = np.einsum('k,xy->kxy', dr, gp) / (2 * n * (2 * n - 1))
        phi = s.phi(p)
        diff = np.einsum('kab,ax,by->kxy', d, phi, phi) - expected
        return frame_residual(m, p, diff, (0, 3), config)

    reports.append(run.evaluate("eta-parallel-scalar",
                                "(nabla_W Ric*)(phi X, phi Y) = dr(W) / (2n(2n-1)) g(phi X, phi Y)",
                                eta_parallel, premise, note))
    return reports


def sectional_curvature(s, p, x, y, config=None):
    """ K(X, Y) = R(X, Y, Y, X) / (g(X, X) g(Y, Y) - g(X, Y)^2) """
    m = _manifold(s)
    geo = m.geometry(p, 0, config)
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    g = geo.g
    gram = x.dot(g).dot(x) * y.dot(g).dot(y) - x.dot(g).dot(y) ** 2
    if gram <= GRAM_DET_MIN:
        raise DegenerateError("2-plane", gram)
    return float(np.einsum('ijkl,i,j,k,l->', geo.riemann_lowered, x, y, y, x) / gram)


def phi_sectional(s, p, x, config=None):
    """ K(X, phi X) for a unit X orthogonal to xi """
    x = np.asarray(x, dtype=float)
    g = s.manifold.metric(p)
    if abs(s.eta(p).dot(x)) > PHI_SECTIONAL_TOL:
        raise ValidationError("phi-sectional input", "vector is not orthogonal to xi")
    if abs(x.dot(g).dot(x) - 1.0) > PHI_SECTIONAL_TOL:
        raise ValidationError("phi-sectional input", "vector is not unit")
    return sectional_curvature(s, p, x, s.phi(p).dot(x), config)


def horizontal_unit(s, p, x):
    """ The unit vector along X - eta(X) xi """
    x = np.asarray(x, dtype=float)
    h = x - s.eta(p).dot(x) * s.xi(p)
    length = np.sqrt(h.dot(s.manifold.metric(p)).dot(h))
    if length <= np.sqrt(GRAM_DET_MIN):
        raise DegenerateError("horizontal projection", length ** 2)
    return h / length


class CurvatureFit(object):
    """ R(X,Y)Z ~ kappa (g(Y,Z) X - g(X,Z) Y); residual is the largest frame component of the misfit """

    def __init__(self, kappa, residual):
        self.kappa = kappa
        self.residual = residual

    def __repr__(self):
        return "CurvatureFit(kappa=%.6g, residual=%.3e)" % (self.kappa, self.residual)


def _constant_curvature_form(g):
    delta = np.eye(len(g))
    return np.einsum('jk,li->lijk', g, delta) - np.einsum('ik,lj->lijk', g, delta)


def constant_curvature_fit(s, plan):
    """ Least squares kappa over the plan, pooled with exactly rounded sums. """
    m = _manifold(s)
    config = plan.fd_config

    def rows(sample):
        geo = m.geometry(sample.point, 0, config)
        frame = geo.frame
        return (to_frame(_constant_curvature_form(geo.g), (1, 3), frame).ravel(),
                to_frame(geo.riemann, (1, 3), frame).ravel())

    pairs, _ = map_samples(m, plan, rows)
    kappa = math.fsum(float(v) for a, b in pairs for v in a * b) / math.fsum(float(v) for a, b in pairs for v in a * a)
    residual = max(float(np.abs(b - kappa * a).max()) for a, b in pairs)
    return CurvatureFit(kappa, residual)


def _conformal_flatness(s, plan):
    m = s.manifold
    config = plan.fd_config
    if s.dim == 3:
        # C vanishes identically, Einstein is the check that survives
        def einstein(sample):
            p = sample.point
            geo = m.geometry(p, 0, config)
            return frame_residual(m, p, geo.ricci - geo.scalar / 3.0 * geo.g, (0, 2), config)
        return einstein

    def weyl(sample):
        p = sample.point
        return frame_residual(m, p, weyl_tensor(s, p, config).components, (1, 3), config)
    return weyl


def conformally_flat_chain(s, plan, suite="section4"):
    """
    Conformal flatness and its consequences for a Sasakian manifold, each
    conclusion gated on the premise C = 0 (Ric = (r/3) g in dimension 3).
    """
    run = SuiteRun(suite, s.manifold, plan)
    m = s.manifold
    config = plan.fd_config
    n = s.n
    note = WEYL_DIM3 if s.dim == 3 else None
    anchor = "Ric = (r/3) g" if s.dim == 3 else "C = 0"
    premise, premise_report = run.premise("conformally-flat", anchor, _conformal_flatness(s, plan), note)
    reports = [premise_report]

    def ricci_operator(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        return frame_residual(m, p, geo.ricci_operator - (geo.scalar - 2 * n) / (2 * n) * np.eye(m.dim),
                              (1, 1), config)

    def curvature_form(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        diff = geo.riemann - beta_from_scalar(geo.scalar, n) * _constant_curvature_form(geo.g)
        return frame_residual(m, p, diff, (1, 3), config)

    def star_form(sample):
        p = sample.point
        geo = m.geometry(p, 0, config)
        diff = star_ricci_frame_sum(s, p, config).components - beta_from_scalar(geo.scalar, n) * g_phi(s, p).components
        return frame_residual(m, p, diff, (0, 2), config)

    def phi_sectional_beta(sample):
        p = sample.point
        beta = beta_from_scalar(m.geometry(p, 0, config).scalar, n)
        return sample.each(lambda x, y, z, w: abs(beta - phi_sectional(s, p, horizontal_unit(s, p, x), config)))

    def star_phi_symmetry(sample):
        p = sample.point
        star = star_ricci_frame_sum(s, p, config).components
        phi = s.phi(p)
        return frame_residual(m, p, phi.T.dot(star).dot(phi).T - star, (0, 2), config)

    def star_phi_skew(sample):
        p = sample.point
        star = star_ricci_frame_sum(s, p, config).components
        phi = s.phi(p)

        def skew(x, y, z, w):
            h = horizontal_unit(s, p, x)
            return abs(h.dot(star).dot(phi.dot(h)))
        return sample.each(skew)

    reports += [
        run.evaluate("ricci-operator", "QX = (r - 2n) / (2n) X", ricci_operator, premise, note),
        run.evaluate("curvature-form", "R(X, Y) Z = beta {g(Y, Z) X - g(X, Z) Y}", curvature_form, premise, note),
        run.evaluate("star-ricci-form", "Ric* = beta g^phi", star_form, premise, note),
        run.evaluate("phi-sectional-beta", "beta = K(X, phi X)", phi_sectional_beta, premise, note),
        run.evaluate("star-ricci-phi-symmetry", "Ric*(phi Y, phi X) = Ric*(X, Y)", star_phi_symmetry, premise, note),
        run.evaluate("star-ricci-phi-skew", "Ric*(X, phi X) = 0", star_phi_skew, premise, note),
    ]

    curvature = constant_curvature_fit(s, plan)

    def curvature_misfit(sample):
        geo = m.geometry(sample.point, 0, config)
        return frame_residual(m, sample.point, geo.riemann - curvature.kappa * _constant_curvature_form(geo.g),
                              (1, 3), config)

    def scalar(sample):
        return abs(m.geometry(sample.point, 0, config).scalar - (2 * n * (2 * n - 1) + 4 * n))

    def local_symmetry(sample):
        p = sample.point
        return frame_residual(m, p, riemann_derivative(m, p, config).components, (1, 4), config)

    reports += [
        run.evaluate("constant-curvature", "R(X, Y) Z = kappa {g(Y, Z) X - g(X, Z) Y}", curvature_misfit, premise,
                     note),
        run.evaluate("unit-curvature", "kappa = 1 (fitted kappa %.9g)" % curvature.kappa,
                     lambda sample: abs(curvature.kappa - 1.0), premise, note),
        run.evaluate("scalar-curvature", "r = 2n(2n-1) + 4n", scalar, premise, note),
        run.evaluate("local-symmetry", "nabla R = 0", local_symmetry, premise, note),
    ]
    fit = classify_einstein(s, plan, star_ricci_fn(s, config), "phiEinstein")
    reports.append(einstein_report(run, "phi-einstein", "Ric* = beta g^phi with constant beta",
                                   s, star_ricci_fn(s, config), fit, premise, note))
    return reports


def conformal_suite(s, plan, suite="conformal"):
    """ Weyl trace, the phi-conformal flatness premise and every check it gates. """
    reports = weyl_trace_check(s, plan, suite)
    run = SuiteRun(suite, s.manifold, plan)
    premise, premise_report = phi_conformal_premise(run, s)
    reports.append(premise_report)
    reports += horizontal_curvature_check(s, plan, suite, premise)
    reports += expanded_curvature_check(s, plan, suite, premise)
    reports += star_eta_einstein_check(s, plan, suite, premise)
    reports += phi_conformal_corollaries(s, plan, suite, premise)
    return reports

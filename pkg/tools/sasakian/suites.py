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
Suite registry and the driver that runs suites in order.

The ``convention`` suite always runs first, on the unit S^3, so a sign or
index convention slip shows up before any theorem is reported on.
"""
from __future__ import division

import numpy as np

from . import utility
from .calculus import frame_residual
from .conformal import conformal_suite, conformally_flat_chain, constant_curvature_fit
from .contact import (d_homothetic_deform, verify_almost_contact, verify_compatibility, contact_metric_check,
                      verify_sasakian, nijenhuis_normality, reeb_killing_check, verify_curvature_identities,
                      first_bianchi_check, riemann_symmetry_check, metric_parallel_check, phi_projection_identity,
                      ricci_operator_identities)
from .errors import InputError, EvaluationError
from .models import unit_sphere, verify_space_form
from .report import ResidualReport
from .sampling import SuiteRun
from .soliton import SolitonInstance, soliton_field, soliton_suite
from .star_ricci import (star_ricci_routes_check, yano_kon_check, weakly_phi_einstein_check,
                         eta_parallel_star_residual, semi_symmetric_flatness_check, classify_einstein,
                         fit_einstein_form, ricci_fn)

CONVENTION = "convention"

SUITES = [
    "axioms",
    "sasakian",
    "curvature-identities",
    "star-ricci",
    "conformal",
    "section4",
    "semi-symmetry",
    "soliton",
    "deformation",
]


def parse_suites(text):
    """
    :param text: ``all`` or a comma separated list of suite names
    :return: suite names in registry order
    """
    if text is None or text == "all":
        return list(SUITES)
    wanted = [t.strip() for t in text.split(",") if t.strip()]
    if not wanted:
        raise InputError("no suite given")
    for name in wanted:
        if name not in SUITES and name != CONVENTION:
            raise InputError("unknown suite '%s', expected 'all' or some of %s" % (name, ", ".join(SUITES)))
    return [name for name in SUITES if name in wanted]


def convention_check(plan):
    """ R(X, Y) xi = eta(Y) X - eta(X) Y and constant curvature 1 on the unit S^3. """
    s = unit_sphere(1)
    m = s.manifold
    run = SuiteRun(CONVENTION, m, plan)
    config = plan.fd_config

    def reeb_curvature(sample):
        p = sample.point
        r = m.geometry(p, 0, config).riemann
        xi, eta = s.xi(p), s.eta(p)
        return sample.each(lambda x, y, z, w: frame_residual(
            m, p, np.einsum('lijk,i,j,k->l', r, x, y, xi) - eta.dot(y) * x + eta.dot(x) * y, (1, 0), config))

    reports = [run.evaluate("reeb-curvature", "R(X, Y) xi = eta(Y) X - eta(X) Y on S^3", reeb_curvature)]
    fit = constant_curvature_fit(s, plan)
    reports.append(run.evaluate("constant-curvature", "R(X, Y) Z = g(Y, Z) X - g(X, Z) Y on S^3",
                                lambda sample: max(fit.residual, abs(fit.kappa - 1.0))))
    return reports


def axioms_suite(s, plan, suite="axioms"):
    return verify_almost_contact(s, plan, suite) + verify_compatibility(s, plan, suite) \
        + contact_metric_check(s, plan, suite)


def sasakian_suite(s, plan, suite="sasakian"):
    return verify_sasakian(s, plan, suite) + nijenhuis_normality(s, plan, suite) + reeb_killing_check(s, plan, suite)


def curvature_suite(s, plan, suite="curvature-identities"):
    reports = verify_curvature_identities(s, plan, suite)
    for check in (first_bianchi_check, riemann_symmetry_check, metric_parallel_check, phi_projection_identity,
                  ricci_operator_identities, verify_space_form):
        reports += check(s, plan, suite)
    return reports


def star_ricci_suite(s, plan, suite="star-ricci"):
    reports = star_ricci_routes_check(s, plan, suite)
    for check in (yano_kon_check, eta_parallel_star_residual, weakly_phi_einstein_check):
        reports += check(s, plan, suite)
    return reports


def deformation_suite(s, a, plan, suite="deformation"):
    """
    D-homothetic deformation by ``a``: the axioms survive, the eta-Einstein
    constants follow alpha' = (alpha + 2 - 2a) / a and gamma' = 2n - alpha',
    deforming back by 1/a is the identity, and alpha = -2 is a fixed point.
    """
    config = plan.fd_config
    n = s.n
    deformed = d_homothetic_deform(s, a)
    back = d_homothetic_deform(deformed, 1.0 / a)
    base_run = SuiteRun(suite, s.manifold, plan)
    run = SuiteRun(suite, deformed.manifold, plan)

    reports = axioms_suite(deformed, plan, suite)

    def eta_einstein(sample):
        p = sample.point
        return fit_einstein_form(s.manifold.geometry(p, 0, config).ricci, s, p, "etaEinstein", config).residual

    premise, premise_report = base_run.premise("base-eta-einstein", "Ric = alpha g + gamma eta (x) eta on the base",
                                               eta_einstein)
    reports.append(premise_report)
    base = classify_einstein(s, plan, ricci_fn(s, config), "etaEinstein")
    alpha = (base.alpha + 2.0 - 2.0 * a) / a

    def deformed_fit(p):
        return fit_einstein_form(deformed.manifold.geometry(p, 0, config).ricci, deformed, p, "etaEinstein", config)

    def alpha_law(sample):
        fit = deformed_fit(sample.point)
        return max(fit.residual, abs(fit.alpha - alpha), abs(fit.gamma - (2 * n - alpha)))

    reports.append(run.evaluate("alpha-law", "alpha' = (alpha + 2 - 2a) / a, gamma' = 2n - alpha'", alpha_law,
                                premise, note="a = %g, alpha = %.6g, alpha' = %.6g" % (a, base.alpha, alpha)))

    back_run = SuiteRun(suite, back.manifold, plan)

    def round_trip(sample):
        p = sample.point
        diffs = [
            frame_residual(s.manifold, p, back.manifold.metric(p) - s.manifold.metric(p), (0, 2), config),
            frame_residual(s.manifold, p, back.xi(p) - s.xi(p), (1, 0), config),
            frame_residual(s.manifold, p, back.eta(p) - s.eta(p), (0, 1), config),
            frame_residual(s.manifold, p, back.phi(p) - s.phi(p), (1, 1), config),
        ]
        return max(diffs)

    reports.append(back_run.evaluate("round-trip", "deforming by a then by 1/a gives back (phi, xi, eta, g)",
                                     round_trip))

    def fixed(sample):
        p = sample.point
        fit = fit_einstein_form(s.manifold.geometry(p, 0, config).ricci, s, p, "etaEinstein", config)
        return max(fit.residual, abs(fit.alpha + 2.0))

    fixed_premise, fixed_report = base_run.premise("base-alpha-minus-two", "Ric = -2 g + gamma eta (x) eta on the base",
                                                   fixed)
    reports.append(fixed_report)
    reports.append(run.evaluate("fixed-point", "alpha = -2 gives alpha' = -2",
                                lambda sample: abs(deformed_fit(sample.point).alpha + 2.0), fixed_premise))
    return reports


def _soliton(s, plan, options):
    V = soliton_field(s, options.get("soliton-field", "xi"), plan.seed)
    return soliton_suite(SolitonInstance(s, V, options.get("lambda", 0.0)), plan)


def _runners(options):
    return {
        "axioms": axioms_suite,
        "sasakian": sasakian_suite,
        "curvature-identities": curvature_suite,
        "star-ricci": star_ricci_suite,
        "conformal": conformal_suite,
        "section4": conformally_flat_chain,
        "semi-symmetry": semi_symmetric_flatness_check,
        "soliton": lambda s, plan: _soliton(s, plan, options),
        "deformation": lambda s, plan: deformation_suite(s, options.get("deform-a", 2.0), plan),
    }


def summarize(suite, reports):
    passed = sum(1 for r in reports if r.passed)
    skipped = sum(1 for r in reports if r.skipped)
    failed = sum(1 for r in reports if r.failed)
    if failed:
        color = "red"
    elif skipped:
        color = "orange"
    else:
        color = "green"
    utility.status("%s: %d passed, %d skipped, %d failed" % (suite, passed, skipped, failed), color)


def run_suites(s, suites, plan, options=None):
    """
    Run the convention lock and then ``suites`` on structure ``s``.

    :param s: ContactStructure
    :param suites: suite names, see parse_suites
    :param plan: SamplePlan
    :param options: dict with ``deform-a``, ``soliton-field`` and ``lambda``
    :return: list of ResidualReport
    """
    runners = _runners(options or {})
    utility.status("suite %s" % CONVENTION)
    reports = _guarded(CONVENTION, unit_sphere(1).manifold, plan, lambda: convention_check(plan))
    summarize(CONVENTION, reports)
    for suite in suites:
        if suite == CONVENTION:
            continue
        if suite not in runners:
            raise InputError("unknown suite '%s'" % suite)
        utility.status("suite %s on %s (n=%d)" % (suite, s.name, s.n))
        suite_reports = _guarded(suite, s.manifold, plan, lambda: runners[suite](s, plan))
        summarize(suite, suite_reports)
        reports += suite_reports
    return reports


def _guarded(suite, manifold, plan, fn):
    """ A suite that stops on an evaluation failure reports it as one failed identity. """
    try:
        return fn()
    except EvaluationError as e:
        utility.critical("%s: evaluation failed: %s" % (suite, e))
        return [ResidualReport(suite, "evaluation", "suite evaluation completes", None,
                               plan.tolerance(suite, "evaluation", manifold.exact),
                               worst_point=getattr(e, "point", None), cause=str(e))]

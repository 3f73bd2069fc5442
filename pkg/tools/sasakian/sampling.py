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
Seeded sample plans and the sweep that turns a residual function into a report.

Samples come from ``numpy.random.Generator(numpy.random.Philox(...))`` seeded
with ``SeedSequence([seed, crc32(chart name)])``, so every chart gets its own
stream and the draws are the same on every platform.
"""
from __future__ import division

import threading
import zlib
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import utility
from .calculus import DEFAULT_DERIVATIVES
from .config import resolve_tolerance, PREMISE
from .errors import InputError, EvaluationError
from .report import ResidualReport, PREMISE_NA, PREMISE_PASSED, PREMISE_VIOLATED

# samples stay this fraction of the box half-width away from the boundary
MARGIN = 0.25


class Sample(object):
    """
    One evaluation point with ``vectors_per_point`` tuples (X, Y, Z, W) of
    g-unit tangent vectors.
    """

    def __init__(self, index, point, vectors):
        self.index = index
        self.point = point
        self.vectors = vectors

    def each(self, fn):
        """ Largest value of ``fn(X, Y, Z, W)`` over the vector tuples. """
        return max(float(fn(*t)) for t in self.vectors)


class SamplePlan(object):
    """
    :param point_count: number of sample points
    :param seed: 64-bit unsigned seed
    :param vectors_per_point: vector tuples drawn per point
    :param tolerances: user tolerances keyed ``suite`` or ``suite.identity``
    :param fd_config: DerivativeConfig
    :param jobs: worker threads evaluating points
    """

    def __init__(self, point_count=20, seed=0, vectors_per_point=4, tolerances=None, fd_config=None, jobs=1):
        if int(point_count) != point_count or point_count < 1:
            raise InputError("point count must be a positive integer, got %r" % (point_count,))
        if int(vectors_per_point) != vectors_per_point or vectors_per_point < 1:
            raise InputError("vectors per point must be a positive integer, got %r" % (vectors_per_point,))
        if int(seed) != seed or not 0 <= seed < 2 ** 64:
            raise InputError("seed must be an integer in [0, 2**64), got %r" % (seed,))
        if int(jobs) != jobs or jobs < 1:
            raise InputError("jobs must be a positive integer, got %r" % (jobs,))
        self.point_count = int(point_count)
        self.seed = int(seed)
        self.vectors_per_point = int(vectors_per_point)
        self.tolerances = dict(tolerances or {})
        self.fd_config = fd_config or DEFAULT_DERIVATIVES
        self.jobs = int(jobs)
        self._samples = {}
        self._lock = threading.Lock()

    def tolerance(self, suite, identity, exact=True):
        return resolve_tolerance(self.tolerances, suite, identity, exact)

    def samples(self, manifold):
        key = (manifold.name, manifold.dim, tuple(manifold.lower), tuple(manifold.upper))
        with self._lock:
            if key not in self._samples:
                self._samples[key] = draw_samples(manifold, self)
            return self._samples[key]


def generator(seed, name):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, zlib.crc32(name.encode())])))


def draw_samples(manifold, plan):
    """ Points uniform in the chart box shrunk by MARGIN, vectors standard normal then g-normalised. """
    rng = generator(plan.seed, manifold.name)
    half = 0.5 * (manifold.upper - manifold.lower)
    low = manifold.lower + MARGIN * half
    high = manifold.upper - MARGIN * half
    samples = []
    for index in range(plan.point_count):
        point = rng.uniform(low, high)
        raw = rng.standard_normal((plan.vectors_per_point, 4, manifold.dim))
        g = manifold.metric(point)
        norms = np.sqrt(np.einsum('tva,ab,tvb->tv', raw, g, raw))
        point.setflags(write=False)
        samples.append(Sample(index, point, raw / norms[:, :, None]))
    return samples


class SweepResult(object):
    def __init__(self, values, samples):
        self.values = values
        worst = int(np.argmax(values))
        self.max_residual = float(values[worst])
        self.worst_point = samples[worst].point


def map_samples(manifold, plan, fn):
    """ ``[fn(sample) for sample in plan.samples(manifold)]``, on ``plan.jobs`` threads, in sample order. """
    samples = plan.samples(manifold)
    if plan.jobs == 1:
        return [fn(s) for s in samples], samples
    with ThreadPoolExecutor(max_workers=plan.jobs) as executor:
        return list(executor.map(fn, samples)), samples


def sweep(manifold, plan, fn):
    """ Max-reduce a non-negative residual over the plan. """
    values, samples = map_samples(manifold, plan, fn)
    values = np.array(values, dtype=float)
    if not np.all(np.isfinite(values)):
        bad = samples[int(np.argmin(np.isfinite(values)))]
        raise EvaluationError("non-finite residual at sample %d" % bad.index)
    return SweepResult(values, samples)


class Premise(object):
    """ Outcome of a hypothesis check, attached to the conclusions it gates. """

    def __init__(self, status, residual=None, tolerance=None, identity=None, note=None):
        self.status = status
        self.residual = residual
        self.tolerance = tolerance
        self.identity = identity
        self.note = note

    @property
    def holds(self):
        return self.status == PREMISE_PASSED

    @classmethod
    def combine(cls, *premises):
        """ Passed only when every premise passed. """
        violated = [p for p in premises if p.status != PREMISE_PASSED]
        if violated:
            return cls(PREMISE_VIOLATED, identity=violated[0].identity, note=violated[0].note)
        return cls(PREMISE_PASSED, identity="+".join(p.identity for p in premises))

    @classmethod
    def violated(cls, identity, note):
        return cls(PREMISE_VIOLATED, identity=identity, note=note)


class SuiteRun(object):
    """ Evaluates the identities of one suite on one chart and builds their reports. """

    def __init__(self, suite, manifold, plan):
        self.suite = suite
        self.manifold = manifold
        self.plan = plan
        self.config = plan.fd_config

    def tolerance(self, identity):
        return self.plan.tolerance(self.suite, identity, self.manifold.exact)

    def evaluate(self, identity, anchor, residual, premise=None, note=None):
        """
        :param residual: sample -> non-negative float
        :param premise: Premise gating this identity, or None
        """
        tolerance = self.tolerance(identity)
        status = PREMISE_NA if premise is None else premise.status
        if premise is not None and not premise.holds and premise.note:
            note = premise.note if note is None else "%s; %s" % (note, premise.note)
        try:
            result = sweep(self.manifold, self.plan, residual)
        except EvaluationError as e:
            utility.critical("%s/%s: evaluation failed: %s" % (self.suite, identity, e))
            return ResidualReport(self.suite, identity, anchor, None, tolerance, status,
                                  getattr(e, "point", None), note, cause=str(e))
        report = ResidualReport(self.suite, identity, anchor, result.max_residual, tolerance, status,
                                result.worst_point, note)
        _log(report)
        return report

    def evaluate_plan(self, identity, anchor, compute, premise=None, note=None):
        """
        Report a residual that is computed once over the whole plan (a pooled
        fit, a classification) rather than point by point.

        :param compute: () -> non-negative float
        """
        tolerance = self.tolerance(identity)
        status = PREMISE_NA if premise is None else premise.status
        if premise is not None and not premise.holds and premise.note:
            note = premise.note if note is None else "%s; %s" % (note, premise.note)
        try:
            residual = float(compute())
        except EvaluationError as e:
            utility.critical("%s/%s: evaluation failed: %s" % (self.suite, identity, e))
            return ResidualReport(self.suite, identity, anchor, None, tolerance, status,
                                  getattr(e, "point", None), note, cause=str(e))
        report = ResidualReport(self.suite, identity, anchor, residual, tolerance, status, note=note)
        _log(report)
        return report

    def premise(self, identity, anchor, residual, note=None):
        """
        Evaluate a hypothesis. Its own report carries its status, so a violated
        hypothesis shows up as skipped and never fails the run.

        :return: (Premise, ResidualReport)
        """
        tolerance = self.tolerance(PREMISE)
        try:
            result = sweep(self.manifold, self.plan, residual)
        except EvaluationError as e:
            utility.critical("%s/%s: evaluation failed: %s" % (self.suite, identity, e))
            report = ResidualReport(self.suite, identity, anchor, None, tolerance, PREMISE_NA,
                                    getattr(e, "point", None), note, cause=str(e))
            return Premise.violated(identity, "premise %s could not be evaluated" % identity), report
        if result.max_residual <= tolerance:
            status = PREMISE_PASSED
            gate_note = None
        else:
            status = PREMISE_VIOLATED
            gate_note = "premise %s violated" % identity
        report = ResidualReport(self.suite, identity, anchor, result.max_residual, tolerance, status,
                                result.worst_point, note)
        _log(report)
        return Premise(status, result.max_residual, tolerance, identity, gate_note), report

    def skip(self, identity, anchor, note):
        """ Report an identity that is not evaluated (premise known to be vacuous). """
        report = ResidualReport(self.suite, identity, anchor, None, self.tolerance(identity), PREMISE_VIOLATED,
                                note=note)
        _log(report)
        return report


def _log(report):
    if report.failed:
        utility.critical("%s/%s: FAIL (max residual %s, tolerance %.1e)" % (
            report.suite, report.identity,
            "n/a" if report.max_residual is None else "%.3e" % report.max_residual, report.tolerance))
    elif report.skipped:
        utility.status("%s/%s: skipped%s" % (report.suite, report.identity,
                                             " (%s)" % report.note if report.note else ""), "orange")
    else:
        utility.status("%s/%s: pass (%.3e)" % (report.suite, report.identity, report.max_residual))

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
Residual reports and their renderings (JSON, markdown, XUNIT).

The JSON layout is documented in docs/verify-report.rst. Key order is fixed
so two runs with the same flags give byte-identical output.
"""
from __future__ import division

import json
import time
from collections import OrderedDict

import xunitgen

from .errors import InputError

SCHEMA_VERSION = 1

PREMISE_NA = "n/a"
PREMISE_PASSED = "passed"
PREMISE_VIOLATED = "violated"

FORMATS = ["json", "markdown"]

XUNIT_DEFAULT_TEST_SUITE = "sasakian-verify"


class ResidualReport(object):
    """
    Result of one identity over a sample plan.

    :param suite: suite name
    :param identity: identity slug
    :param anchor: formula checked, as text
    :param max_residual: largest residual over the samples, None when evaluation failed
    :param tolerance: threshold the residual is compared against
    :param premise_status: ``n/a``, ``passed`` or ``violated``
    :param worst_point: coordinates of the sample with the largest residual
    :param note: free text shown next to the result
    :param cause: evaluation failure message
    """

    def __init__(self, suite, identity, anchor, max_residual, tolerance,
                 premise_status=PREMISE_NA, worst_point=None, note=None, cause=None):
        if premise_status not in (PREMISE_NA, PREMISE_PASSED, PREMISE_VIOLATED):
            raise InputError("unknown premise status '%s'" % premise_status)
        self.suite = suite
        self.identity = identity
        self.anchor = anchor
        self.max_residual = None if max_residual is None else float(max_residual)
        self.tolerance = float(tolerance)
        self.premise_status = premise_status
        self.worst_point = None if worst_point is None else [float(c) for c in worst_point]
        self.note = note
        self.cause = cause

    @property
    def skipped(self):
        return self.premise_status == PREMISE_VIOLATED

    @property
    def passed(self):
        return (self.max_residual is not None
                and self.max_residual <= self.tolerance
                and self.premise_status != PREMISE_VIOLATED)

    @property
    def failed(self):
        return not self.passed and not self.skipped

    @property
    def result(self):
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self, model=None, n=None, seed=None):
        return OrderedDict([
            ("schemaVersion", SCHEMA_VERSION),
            ("model", model),
            ("n", n),
            ("seed", seed),
            ("suite", self.suite),
            ("identity", self.identity),
            ("anchor", self.anchor),
            ("maxResidual", self.max_residual),
            ("tolerance", self.tolerance),
            ("pass", self.passed),
            ("skipped", self.skipped),
            ("premiseStatus", self.premise_status),
            ("worstPoint", self.worst_point),
            ("note", self.note),
            ("cause", self.cause),
        ])

    def __repr__(self):
        return "ResidualReport(%s/%s %s)" % (self.suite, self.identity, self.result)


def exit_code(reports):
    """ 0 when every report passed or was skipped, 1 otherwise. """
    return 1 if any(r.failed for r in reports) else 0


def emit_report(reports, fmt="json", model=None, n=None, seed=None):
    """
    Render reports as text.

    :param reports: list of ResidualReport
    :param fmt: ``json`` or ``markdown``
    :return: text ending with a newline
    """
    if fmt == "json":
        return json.dumps([r.to_dict(model, n, seed) for r in reports], indent=2) + "\n"
    elif fmt == "markdown":
        return _to_markdown(reports, model, n, seed)
    raise InputError("unknown report format '%s', expected one of %s" % (fmt, ", ".join(FORMATS)))


def _format_residual(value):
    return "n/a" if value is None else "%.3e" % value


def _to_markdown(reports, model, n, seed):
    lines = []
    if model is not None:
        lines.append("# %s (n=%s, seed=%s)" % (model, n, seed))
        lines.append("")
    suites = []
    for r in reports:
        if r.suite not in suites:
            suites.append(r.suite)
    for suite in suites:
        lines.append("## %s" % suite)
        lines.append("")
        lines.append("| identity | anchor | max residual | tolerance | premise | result | note |")
        lines.append("|---|---|---|---|---|---|---|")
        for r in reports:
            if r.suite != suite:
                continue
            note = r.note or ""
            if r.cause:
                note = (note + "; " if note else "") + r.cause
            lines.append("| %s | %s | %s | %.1e | %s | %s | %s |" % (
                r.identity, r.anchor.replace("|", "\\|"), _format_residual(r.max_residual),
                r.tolerance, r.premise_status, r.result, note.replace("|", "\\|")))
        lines.append("")
    return "\n".join(lines) + "\n"


def write_xunit(reports, path, test_suite_name=XUNIT_DEFAULT_TEST_SUITE):
    """ Write one XUNIT case per report. Skipped reports are recorded without a failure. """
    receiver = xunitgen.EventReceiver()
    for r in reports:
        case_name = "%s.%s" % (r.suite, r.identity)
        receiver.begin_case(case_name, time.time(), r.suite)
        if r.failed:
            message = r.cause or "max residual %s above tolerance %.1e" % (_format_residual(r.max_residual),
                                                                           r.tolerance)
            receiver.failure(message, r.suite)
        receiver.end_case(case_name, time.time())
    data = xunitgen.toxml(receiver.results(), test_suite_name)
    if not isinstance(data, bytes):
        data = data.encode("utf-8")
    with open(path, "wb") as f:
        f.write(data)

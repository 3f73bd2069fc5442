#!/usr/bin/env python
#
# Check the identities of Sasakian and almost contact metric geometry as
# residuals over seeded random samples on chart-defined model spaces.
#
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
#
from __future__ import print_function
import argparse
import sys

from sasakian import utility
from sasakian.calculus import DerivativeConfig
from sasakian.config import load_config_file, merge_config, parse_tolerance
from sasakian.errors import InputError
from sasakian.models import load_model
from sasakian.report import FORMATS, emit_report, exit_code, write_xunit
from sasakian.sampling import SamplePlan
from sasakian.soliton import SOLITON_FIELDS
from sasakian.suites import SUITES, parse_suites, run_suites


def _number(config, key, kind):
    try:
        return kind(config[key])
    except (TypeError, ValueError):
        raise InputError("%s must be a number, got %r" % (key, config[key]))


def build_parser():
    parser = argparse.ArgumentParser(description='Sasakian manifold identity verifier')
    parser.add_argument('--model', help='Model space: r2n1, sphere or <base>-deformed:a=<value> (default sphere)')
    parser.add_argument('--n', help='Half dimension, the manifold has dimension 2n+1 (default 1)', type=int)
    parser.add_argument('--suite', help='"all" or a comma separated list of: %s' % ", ".join(SUITES))
    parser.add_argument('--points', help='Number of sample points (default 20)', type=int)
    parser.add_argument('--vectors-per-point', help='Vector tuples per sample point (default 4)', type=int)
    parser.add_argument('--seed', help='Sampling seed, unsigned 64-bit (default 0)', type=int)
    parser.add_argument('--tol', help='Tolerance override suite=value or suite.identity=value, repeatable',
                        action='append', default=[])
    parser.add_argument('--fd-h1', help='First order finite difference step', type=float)
    parser.add_argument('--fd-h2', help='Second order finite difference step', type=float)
    parser.add_argument('--fd-h3', help='Third order finite difference step', type=float)
    parser.add_argument('--format', help='Report format', choices=FORMATS)
    parser.add_argument('--deform-a', help='Parameter of the deformation suite (default 2)', type=float)
    parser.add_argument('--soliton-field', help='Potential vector field of the soliton suite', choices=SOLITON_FIELDS)
    parser.add_argument('--lambda', help='Soliton constant (default 0)', type=float, dest='lam')
    parser.add_argument('--config', help='YAML file with defaults for any of the options above')
    parser.add_argument('--output', '-o', help='Write the report to this file instead of stdout')
    parser.add_argument('--xunit', help='Also write an XUNIT result file')
    parser.add_argument('--jobs', '-j', help='Worker threads evaluating sample points (default 1)', type=int)
    parser.add_argument('--quiet', '-q', help="Don't print non-critical status messages to stderr",
                        action='store_true', default=None)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    flags = {
        "model": args.model,
        "n": args.n,
        "suite": args.suite,
        "points": args.points,
        "vectors-per-point": args.vectors_per_point,
        "seed": args.seed,
        "fd-h1": args.fd_h1,
        "fd-h2": args.fd_h2,
        "fd-h3": args.fd_h3,
        "format": args.format,
        "deform-a": args.deform_a,
        "soliton-field": args.soliton_field,
        "lambda": args.lam,
        "output": args.output,
        "xunit": args.xunit,
        "jobs": args.jobs,
        "quiet": args.quiet,
        "tol": dict(parse_tolerance(t) for t in args.tol),
    }
    config = merge_config(flags, load_config_file(args.config) if args.config else None)
    utility.quiet = bool(config["quiet"])

    fd_config = DerivativeConfig(_number(config, "fd-h1", float), _number(config, "fd-h2", float),
                                 _number(config, "fd-h3", float), bool(config["richardson"]))
    plan = SamplePlan(_number(config, "points", int), _number(config, "seed", int),
                      _number(config, "vectors-per-point", int), config["tol"], fd_config,
                      _number(config, "jobs", int))
    n = _number(config, "n", int)
    suites = parse_suites(config["suite"])
    if config["format"] not in FORMATS:
        raise InputError("unknown report format '%s', expected one of %s" % (config["format"], ", ".join(FORMATS)))

    utility.status("Building model %s (n=%d)..." % (config["model"], n))
    structure = load_model(config["model"], n)
    options = {
        "deform-a": _number(config, "deform-a", float),
        "soliton-field": config["soliton-field"],
        "lambda": _number(config, "lambda", float),
    }
    reports = run_suites(structure, suites, plan, options)

    output = emit_report(reports, config["format"], config["model"], n, plan.seed)
    if config["output"]:
        try:
            with open(config["output"], "w") as f:
                f.write(output)
        except (OSError, IOError) as e:
            raise InputError("cannot write report to '%s': %s" % (config["output"], e))
    else:
        sys.stdout.write(output)
    if config["xunit"]:
        write_xunit(reports, config["xunit"])
    return exit_code(reports)


if __name__ == '__main__':
    try:
        sys.exit(main())
    except InputError as e:
        print(e, file=sys.stderr)
        sys.exit(2)

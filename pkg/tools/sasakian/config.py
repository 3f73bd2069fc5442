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
Run configuration for the verify tool.

Values come from three layers: command line flags, then an optional YAML
config file, then the built-in defaults below. The config file is a mapping
that uses the long flag names as keys, for example::

    model: sphere-deformed:a=4/3
    n: 2
    points: 30
    fd-h3: 2.5e-4
    tol:
      soliton: 1.0e-4
      star-ricci.eta-parallel: 5.0e-4
"""

import yaml

from .errors import InputError

DEFAULT_CONFIG = {
    "model": "sphere",
    "n": 1,
    "suite": "all",
    "points": 20,
    "seed": 0,
    "vectors-per-point": 4,
    "fd-h1": 1e-6,
    "fd-h2": 1e-4,
    "fd-h3": 5e-4,
    "richardson": True,
    "format": "json",
    "deform-a": 2.0,
    "soliton-field": "xi",
    "lambda": 0.0,
    "jobs": 1,
    "output": None,
    "xunit": None,
    "quiet": False,
    "tol": {},
}

# suite level defaults, then identity level overrides
DEFAULT_TOLERANCES = {
    "convention": 1e-6,
    "axioms": 1e-8,
    "sasakian": 1e-6,
    "curvature-identities": 1e-6,
    "star-ricci": 1e-6,
    "conformal": 1e-6,
    "section4": 1e-5,
    "semi-symmetry": 1e-6,
    "soliton": 1e-5,
    "deformation": 1e-5,
    "curvature-identities.space-form-oracle": 1e-5,
    "star-ricci.eta-parallel": 1e-4,
    "star-ricci.eta-parallel-decomposition": 1e-4,
    "section4.local-symmetry": 1e-4,
    "soliton.commutation": 1e-3,
}

# used instead of DEFAULT_TOLERANCES when the chart has no exact metric jet
FD_TOLERANCES = {
    "sasakian": 1e-5,
    "curvature-identities": 1e-4,
    "star-ricci": 1e-4,
    "conformal": 1e-4,
    "section4": 1e-3,
    "semi-symmetry": 1e-4,
    "soliton": 1e-3,
    "deformation": 1e-4,
}

PREMISE = "premise"


def parse_tolerance(text):
    """
    Parse one ``--tol`` value.

    :param text: ``suite=value`` or ``suite.identity=value``
    :return: (key, value)
    """
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise InputError("tolerance '%s' is not of the form suite=value" % text)
    try:
        value = float(value)
    except ValueError:
        raise InputError("tolerance '%s' has a non-numeric value" % text)
    if not value > 0:
        raise InputError("tolerance '%s' must be positive" % text)
    return key, value


def resolve_tolerance(user, suite, identity, exact=True):
    """
    Tolerance for ``suite``/``identity``.

    Lookup order: user ``suite.identity``, user ``suite``, built-in
    ``suite.identity``, built-in ``suite``. Charts without an exact metric jet
    take their built-in suite values from FD_TOLERANCES.
    """
    key = "%s.%s" % (suite, identity)
    user = user or {}
    if key in user:
        return user[key]
    if suite in user:
        return user[suite]
    if key in DEFAULT_TOLERANCES:
        return DEFAULT_TOLERANCES[key]
    if not exact and suite in FD_TOLERANCES:
        return FD_TOLERANCES[suite]
    if suite in DEFAULT_TOLERANCES:
        return DEFAULT_TOLERANCES[suite]
    raise InputError("no tolerance known for suite '%s'" % suite)


def load_config_file(config_file):
    """
    Load a YAML config file.

    :param config_file: path
    :return: dict with validated keys
    """
    try:
        with open(config_file) as f:
            configs = yaml.safe_load(f)
    except (OSError, IOError) as e:
        raise InputError("cannot read config file '%s': %s" % (config_file, e))
    except yaml.YAMLError as e:
        raise InputError("config file '%s' is not valid YAML: %s" % (config_file, e))
    if configs is None:
        return {}
    if not isinstance(configs, dict):
        raise InputError("config file '%s' must hold a mapping" % config_file)
    unknown = sorted(k for k in configs if k not in DEFAULT_CONFIG)
    if unknown:
        raise InputError("unknown key(s) in config file '%s': %s" % (config_file, ", ".join(unknown)))
    tol = configs.get("tol", {})
    if not isinstance(tol, dict):
        raise InputError("'tol' in config file '%s' must be a mapping" % config_file)
    configs["tol"] = dict(parse_tolerance("%s=%s" % (k, v)) for k, v in tol.items())
    return configs


def merge_config(flags, file_configs=None):
    """
    Combine the three layers. ``flags`` holds None for every flag not given.

    :param flags: dict of flag values keyed like DEFAULT_CONFIG
    :param file_configs: dict from load_config_file
    :return: complete config dict
    """
    merged = dict(DEFAULT_CONFIG)
    merged["tol"] = {}
    for layer in (file_configs or {}, flags):
        for key, value in layer.items():
            if key == "tol":
                merged["tol"].update(value or {})
            elif value is not None:
                merged[key] = value
    return merged

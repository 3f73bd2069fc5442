#!/usr/bin/env python
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
from __future__ import print_function
import os
import sys
try:
    import pkg_resources
except ImportError:
    print('pkg_resources cannot be imported probably because the pip package is not installed. '
          'Install setuptools and pip, then run this script again.')
    sys.exit(1)


def requirements_file():
    root = os.getenv("SASAKIAN_PATH") or os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
    return os.path.join(root, "requirements.txt")


def unsatisfied(req_file):
    missing = []
    with open(req_file) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                pkg_resources.require(line)
            except (pkg_resources.DistributionNotFound, pkg_resources.VersionConflict):
                missing.append(line)
    return missing


if __name__ == "__main__":
    req_file = requirements_file()
    not_satisfied = unsatisfied(req_file)
    if not_satisfied:
        print('The following Python requirements are not satisfied:')
        for requirement in not_satisfied:
            print(requirement)
        print('Please run "{} -m pip install -r {}" for resolving the issue.'.format(sys.executable, req_file))
        sys.exit(1)

    print('Python requirements are satisfied.')

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

""" Console logging helpers. Everything goes to stderr, stdout is reserved for reports. """
from __future__ import print_function

import sys


_COLOR_CODES = {
    "white": '\033[0m',
    "red":  '\033[31m',
    "green": '\033[32m',
    "orange": '\033[33m',
    "blue": '\033[34m',
    "W": '\033[0m',
    "R":  '\033[31m',
    "G": '\033[32m',
    "O": '\033[33m',
    "B": '\033[34m',
}

quiet = False
use_color = sys.stderr.isatty()


def console_log(data, color="white"):
    """
    log data to console.

    :param data: data content
    :param color: color, one of the keys of ``_COLOR_CODES``
    """
    if color not in _COLOR_CODES:
        color = "white"
    if use_color:
        print(_COLOR_CODES[color] + data + _COLOR_CODES["white"], file=sys.stderr)
    else:
        print(data, file=sys.stderr)
    sys.stderr.flush()


def status(msg, color="white"):
    """ Print status message to stderr, unless quiet """
    if not quiet:
        console_log(msg, color)


def critical(msg):
    """ Print critical message to stderr """
    console_log(msg, "red")

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

""" Exceptions raised by the engine and the verify tool. """


class InputError(RuntimeError):
    """ Bad user input: unknown model or suite, malformed option, index out of range. """
    def __init__(self, e):
        super(InputError, self).__init__(e)


class ValidationError(InputError):
    """ A value failed validation. ``what`` names the value. """
    def __init__(self, what, message):
        super(ValidationError, self).__init__(
            "%s failed validation: %s" % (what, message))
        self.what = what


class EvaluationError(RuntimeError):
    """ Numerical evaluation failed at a sample point. """
    def __init__(self, e):
        super(EvaluationError, self).__init__(e)


class StencilError(EvaluationError):
    def __init__(self, point, reach):
        super(StencilError, self).__init__(
            "point %s is within %g of the chart boundary" % (_format_point(point), reach))
        self.point = point
        self.reach = reach


class DegenerateError(EvaluationError):
    def __init__(self, what, gram_det):
        super(DegenerateError, self).__init__(
            "%s is degenerate (Gram determinant %.3e)" % (what, gram_det))
        self.gram_det = gram_det


def _format_point(point):
    return "(" + ", ".join("%.6g" % c for c in point) + ")"

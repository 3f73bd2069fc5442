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
Truncated Taylor jets.

A jet carries the value of an array valued function at one point together
with its partial derivatives up to third order. ``terms[k]`` has shape
``(dim,) * k + shape``: the k derivative axes come first and are symmetric.

Products (``jet_einsum``), matrix inverses and scalar functions follow the
Leibniz and chain rules exactly, so curvature built from the exact metric jet
of a model needs no finite differences. ``fd_jet`` builds the same object
from a plain function by central differences.
"""
from __future__ import division

import itertools

import numpy as np

MAX_ORDER = 3

# einsum letters reserved for derivative axes, subscripts passed to jet_einsum
# must stick to lowercase
_DERIVATIVE_LETTERS = "XYZ"


class Jet(object):

    # make ndarray + Jet dispatch to Jet.__radd__
    __array_ufunc__ = None

    def __init__(self, terms, dim):
        terms = [np.asarray(t, dtype=float) for t in terms]
        if not 1 <= len(terms) <= MAX_ORDER + 1:
            raise ValueError("jet order must be between 0 and %d" % MAX_ORDER)
        shape = terms[0].shape
        for k, t in enumerate(terms):
            if t.shape != (dim,) * k + shape:
                raise ValueError("jet term %d has shape %s, expected %s"
                                 % (k, t.shape, (dim,) * k + shape))
        self.terms = terms
        self.dim = dim

    @classmethod
    def constant(cls, value, dim, order):
        value = np.asarray(value, dtype=float)
        return cls([value] + [np.zeros((dim,) * k + value.shape) for k in range(1, order + 1)], dim)

    @classmethod
    def affine(cls, p, constant, linear, order):
        """
        Jet of ``constant + sum_c p[c] * linear[c]``.

        :param p: evaluation point
        :param constant: constant part, any shape S
        :param linear: array of shape (dim,) + S
        :param order: jet order
        """
        p = np.asarray(p, dtype=float)
        linear = np.asarray(linear, dtype=float)
        dim = len(p)
        value = np.asarray(constant, dtype=float) + np.tensordot(p, linear, axes=1)
        terms = [value]
        if order >= 1:
            terms.append(linear)
        terms.extend(np.zeros((dim,) * k + value.shape) for k in range(2, order + 1))
        return cls(terms, dim)

    @classmethod
    def coordinates(cls, p, order):
        dim = len(p)
        return cls.affine(p, np.zeros(dim), np.eye(dim), order)

    @property
    def order(self):
        return len(self.terms) - 1

    @property
    def value(self):
        return self.terms[0]

    @property
    def shape(self):
        return self.terms[0].shape

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise jet order from %d to %d" % (self.order, order))
        return Jet(self.terms[:order + 1], self.dim)

    def derivative(self):
        """ Jet of the gradient. The new tensor axis comes first. """
        if self.order == 0:
            raise ValueError("order 0 jet has no derivative")
        return Jet(self.terms[1:], self.dim)

    def transpose(self, axes):
        terms = []
        for k, t in enumerate(self.terms):
            terms.append(np.transpose(t, tuple(range(k)) + tuple(k + a for a in axes)))
        return Jet(terms, self.dim)

    def reshape(self, shape):
        shape = tuple(shape)
        return Jet([t.reshape((self.dim,) * k + shape) for k, t in enumerate(self.terms)], self.dim)

    def __add__(self, other):
        if isinstance(other, Jet):
            order = min(self.order, other.order)
            return Jet([a + b for a, b in zip(self.terms[:order + 1], other.terms[:order + 1])], self.dim)
        return Jet([self.terms[0] + other] + self.terms[1:], self.dim)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-t for t in self.terms], self.dim)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, factor):
        if isinstance(factor, Jet):
            raise TypeError("use jet_einsum for products of two jets")
        factor = float(factor)
        return Jet([factor * t for t in self.terms], self.dim)

    __rmul__ = __mul__

    def __truediv__(self, factor):
        return self * (1.0 / float(factor))

    def inverse(self):
        """ Jet of the matrix inverse, from Y X = I differentiated term by term. """
        x = self.terms
        y0 = np.linalg.inv(x[0])
        terms = [y0]
        if self.order >= 1:
            y1 = -np.einsum('ab,kbc,cd->kad', y0, x[1], y0)
            terms.append(y1)
        if self.order >= 2:
            y2 = -(np.einsum('lab,kbc,cd->klad', y1, x[1], y0)
                   + np.einsum('ab,klbc,cd->klad', y0, x[2], y0)
                   + np.einsum('ab,kbc,lcd->klad', y0, x[1], y1))
            terms.append(y2)
        if self.order >= 3:
            y3 = -(np.einsum('lmab,kbc,cd->klmad', y2, x[1], y0)
                   + np.einsum('lab,kmbc,cd->klmad', y1, x[2], y0)
                   + np.einsum('lab,kbc,mcd->klmad', y1, x[1], y1)
                   + np.einsum('mab,klbc,cd->klmad', y1, x[2], y0)
                   + np.einsum('ab,klmbc,cd->klmad', y0, x[3], y0)
                   + np.einsum('ab,klbc,mcd->klmad', y0, x[2], y1)
                   + np.einsum('mab,kbc,lcd->klmad', y1, x[1], y1)
                   + np.einsum('ab,kmbc,lcd->klmad', y0, x[2], y1)
                   + np.einsum('ab,kbc,lmcd->klmad', y0, x[1], y2))
            terms.append(y3)
        return Jet(terms, self.dim)

    def apply(self, derivatives):
        """
        Chain rule for an elementwise scalar function f.

        :param derivatives: f, f', f'', f''' evaluated at ``self.value`` (at least order + 1 of them)
        """
        u = self.terms
        f = derivatives
        terms = [np.asarray(f[0], dtype=float)]
        if self.order >= 1:
            terms.append(f[1] * u[1])
        if self.order >= 2:
            terms.append(f[2] * u[1][:, None] * u[1][None, :] + f[1] * u[2])
        if self.order >= 3:
            terms.append(f[3] * u[1][:, None, None] * u[1][None, :, None] * u[1][None, None, :]
                         + f[2] * (u[2][:, :, None] * u[1][None, None, :]
                                   + u[2][:, None, :] * u[1][None, :, None]
                                   + u[2][None, :, :] * u[1][:, None, None])
                         + f[1] * u[3])
        return Jet(terms, self.dim)

    def power(self, alpha):
        v = self.value
        derivatives = []
        coefficient = 1.0
        for k in range(self.order + 1):
            derivatives.append(coefficient * v ** (alpha - k))
            coefficient *= alpha - k
        return self.apply(derivatives)

    def exp(self):
        e = np.exp(self.value)
        return self.apply([e] * (self.order + 1))


def jet_einsum(subscripts, *operands):
    """
    ``numpy.einsum`` over jets. Plain arrays are constants.

    The k-th derivative of the product is the sum, over every way of handing
    the k derivative axes to the jet operands, of the einsum of the matching
    derivative terms. Subscripts must use an explicit ``->`` output.
    """
    inputs, output = subscripts.replace(" ", "").split("->")
    inputs = inputs.split(",")
    if len(inputs) != len(operands):
        raise ValueError("%d subscripts for %d operands" % (len(inputs), len(operands)))
    jets = [i for i, op in enumerate(operands) if isinstance(op, Jet)]
    if not jets:
        raise ValueError("jet_einsum needs at least one jet operand")
    dim = operands[jets[0]].dim
    order = min(operands[i].order for i in jets)
    terms = []
    for r in range(order + 1):
        letters = _DERIVATIVE_LETTERS[:r]
        total = None
        for assignment in itertools.product(jets, repeat=r):
            specs = []
            arrays = []
            for i, (spec, op) in enumerate(zip(inputs, operands)):
                owned = "".join(letters[q] for q in range(r) if assignment[q] == i)
                specs.append(owned + spec)
                arrays.append(op.terms[len(owned)] if isinstance(op, Jet) else np.asarray(op, dtype=float))
            term = np.einsum("%s->%s" % (",".join(specs), letters + output), *arrays)
            total = term if total is None else total + term
        terms.append(total)
    return Jet(terms, dim)


def jet_concatenate(jets, axis=0):
    order = min(j.order for j in jets)
    dim = jets[0].dim
    terms = [np.concatenate([j.terms[k] for j in jets], axis=k + axis) for k in range(order + 1)]
    return Jet(terms, dim)


def fd_jet(fn, p, order, config):
    """
    Build a jet of ``fn`` at ``p`` by central differences.

    First and second order use ``config.h_first`` and ``config.h_second``;
    third order differentiates the second order stencil with ``config.h_third``
    and, with ``config.richardson``, extrapolates from steps h and h/2.
    """
    p = np.asarray(p, dtype=float)
    f0 = np.asarray(fn(p), dtype=float)
    terms = [f0]
    if order >= 1:
        terms.append(_central_first(fn, p, config.h_first))
    if order >= 2:
        terms.append(_central_second(fn, p, config.h_second, f0))
    if order >= 3:
        d3 = _central_third(fn, p, config.h_third)
        if config.richardson:
            d3 = (4.0 * _central_third(fn, p, 0.5 * config.h_third) - d3) / 3.0
        terms.append(d3)
    return Jet(terms, len(p))


def _shift(p, k, h):
    q = p.copy()
    q[k] += h
    return q


def _eval(fn, p):
    return np.asarray(fn(p), dtype=float)


def _central_first(fn, p, h):
    return np.array([(_eval(fn, _shift(p, k, h)) - _eval(fn, _shift(p, k, -h))) / (2.0 * h)
                     for k in range(len(p))])


def _central_second(fn, p, h, f0=None):
    if f0 is None:
        f0 = _eval(fn, p)
    dim = len(p)
    out = np.empty((dim, dim) + f0.shape)
    for k in range(dim):
        out[k, k] = (_eval(fn, _shift(p, k, h)) - 2.0 * f0 + _eval(fn, _shift(p, k, -h))) / (h * h)
        for l in range(k + 1, dim):
            pk, mk = _shift(p, k, h), _shift(p, k, -h)
            mixed = (_eval(fn, _shift(pk, l, h)) - _eval(fn, _shift(pk, l, -h))
                     - _eval(fn, _shift(mk, l, h)) + _eval(fn, _shift(mk, l, -h))) / (4.0 * h * h)
            out[k, l] = mixed
            out[l, k] = mixed
    return out


def _central_third(fn, p, h):
    slices = []
    for m in range(len(p)):
        plus = _central_second(fn, _shift(p, m, h), h)
        minus = _central_second(fn, _shift(p, m, -h), h)
        slices.append((plus - minus) / (2.0 * h))
    d3 = np.array(slices)
    rest = tuple(range(3, d3.ndim))
    # average over the six orderings of the derivative axes
    return sum(np.transpose(d3, perm + rest) for perm in itertools.permutations(range(3))) / 6.0

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
Differentiation over a single coordinate chart.

Conventions used throughout the package:

* R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, stored as
  ``R[l, i, j, k]`` = component l of R(d_i, d_j) d_k.
* R(X,Y,Z,W) = g(R(X,Y)Z, W) and Ric(Y,Z) = trace of X -> R(X,Y)Z.
* Covariant derivatives insert the differentiation slot first among the
  covariant slots: ``(nabla T)[a.., k, b..] = (nabla_k T)^a.._b..``.
* d(omega)(X,Y) = 1/2 (X omega(Y) - Y omega(X) - omega([X,Y])).

Curvature comes from the metric jet at the point: exact when the chart has a
jet callback, central differences otherwise.
"""
from __future__ import division

import functools

import numpy as np

from .errors import InputError, ValidationError, StencilError
from .jet import Jet, jet_einsum, fd_jet
from .tensor_core import TensorValue, MetricAtPoint, as_array, raise_lower, adapted_frame, frame_norm

# einsum letters for tensor slots; k, m and c are kept for derivative and dummy indices
_SLOT_LETTERS = "pqrstuvw"


class DerivativeConfig(object):
    """
    Finite difference steps, in chart units.

    :param h_first: step of first order central differences
    :param h_second: step of second order central differences
    :param h_third: step of third order central differences
    :param richardson: extrapolate third order (and flow transport) results from h and h/2
    """

    def __init__(self, h_first=1e-6, h_second=1e-4, h_third=5e-4, richardson=True):
        for name, h in (("h_first", h_first), ("h_second", h_second), ("h_third", h_third)):
            if not h > 0:
                raise ValidationError("derivative config", "%s must be positive, got %r" % (name, h))
        self.h_first = float(h_first)
        self.h_second = float(h_second)
        self.h_third = float(h_third)
        self.richardson = bool(richardson)

    def reach(self, order):
        """ Largest coordinate offset touched by the stencils up to ``order`` """
        reach = 0.0
        if order >= 1:
            reach = max(reach, self.h_first)
        if order >= 2:
            reach = max(reach, self.h_second)
        if order >= 3:
            reach = max(reach, 2.0 * self.h_third)
        return reach

    def _key(self):
        return (self.h_first, self.h_second, self.h_third, self.richardson)

    def __eq__(self, other):
        return isinstance(other, DerivativeConfig) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "DerivativeConfig(h_first=%g, h_second=%g, h_third=%g, richardson=%s)" % self._key()


DEFAULT_DERIVATIVES = DerivativeConfig()


class TensorFieldFn(object):
    """
    A tensor field given pointwise.

    :param valence: (p, q)
    :param evaluator: point -> components (array or TensorValue)
    :param jet: optional exact jet callback ``(point, order) -> Jet``
    :param name: label used in messages
    """

    def __init__(self, valence, evaluator, jet=None, name=None):
        self.valence = tuple(valence)
        self.evaluator = evaluator
        self._jet = jet
        self.name = name or "field"

    @property
    def exact(self):
        return self._jet is not None

    def __call__(self, p):
        return as_array(self.evaluator(np.asarray(p, dtype=float)))

    def value(self, p):
        return TensorValue(self(p), self.valence, len(p))

    def jet_at(self, p, order, config=None):
        p = np.asarray(p, dtype=float)
        if self._jet is not None:
            return self._jet(p, order)
        return fd_jet(self, p, order, config or DEFAULT_DERIVATIVES)

    def reach(self, order, config=None):
        if self._jet is not None:
            return 0.0
        return (config or DEFAULT_DERIVATIVES).reach(order)

    def __repr__(self):
        return "TensorFieldFn(%s, valence=%s%s)" % (self.name, self.valence, ", exact" if self.exact else "")


class PointGeometry(object):
    """
    Metric, Christoffel and curvature jets at one point.

    Riemann, Ricci and Q carry ``depth`` derivative orders (0 or 1), which
    needs the metric jet to order depth + 2.
    """

    def __init__(self, metric_jet, depth):
        g = metric_jet
        g_inv = g.inverse()
        dg = g.derivative()
        first_kind = dg + dg.transpose((1, 0, 2)) - dg.transpose((1, 2, 0))
        gamma = 0.5 * jet_einsum('kl,ijl->kij', g_inv, first_kind)
        dgamma = gamma.derivative()
        riemann = (dgamma.transpose((1, 0, 2, 3)) - dgamma.transpose((1, 2, 0, 3))
                   + jet_einsum('lim,mjk->lijk', gamma, gamma)
                   - jet_einsum('ljm,mik->lijk', gamma, gamma))
        ricci = jet_einsum('lljk->jk', riemann)
        q_op = jet_einsum('ac,cb->ab', g_inv, ricci)
        self.depth = depth
        self.metric_jet = g
        self.inverse_jet = g_inv
        self.gamma_jet = gamma
        self.riemann_jet = riemann
        self.ricci_jet = ricci
        self.ricci_operator_jet = q_op
        self.scalar_jet = jet_einsum('aa->', q_op)
        self.metric = MetricAtPoint(g.value)
        self._frame = None

    @property
    def frame(self):
        """ g-orthonormal frame from the coordinate basis, the frame residuals are measured in. """
        if self._frame is None:
            self._frame = adapted_frame(self.metric)
        return self._frame

    @property
    def g(self):
        return self.metric.matrix

    @property
    def g_inv(self):
        return self.metric.inverse

    @property
    def gamma(self):
        return self.gamma_jet.value

    @property
    def riemann(self):
        return self.riemann_jet.value

    @property
    def riemann_lowered(self):
        return np.einsum('lijk,lw->ijkw', self.riemann, self.g)

    @property
    def ricci(self):
        return self.ricci_jet.value

    @property
    def ricci_operator(self):
        return self.ricci_operator_jet.value

    @property
    def scalar(self):
        return float(self.scalar_jet.value)


class ChartManifold(object):
    """
    An odd dimensional coordinate chart with a metric.

    :param n: dim = 2n + 1
    :param lower: lower corner of the coordinate box
    :param upper: upper corner of the coordinate box
    :param metric_fn: point -> (0,2) components
    :param metric_jet: optional exact jet callback ``(point, order) -> Jet`` (order up to 3)
    :param name: label used in reports
    """

    def __init__(self, n, lower, upper, metric_fn, metric_jet=None, name="chart"):
        if int(n) != n or n < 1:
            raise InputError("n must be a positive integer, got %r" % (n,))
        self.n = int(n)
        self.dim = 2 * self.n + 1
        self.lower = np.array(lower, dtype=float)
        self.upper = np.array(upper, dtype=float)
        if self.lower.shape != (self.dim,) or self.upper.shape != (self.dim,):
            raise ValidationError("chart domain", "box corners must have %d coordinates" % self.dim)
        if not np.all(self.lower < self.upper):
            raise ValidationError("chart domain", "empty box")
        self.metric = TensorFieldFn((0, 2), metric_fn, jet=metric_jet, name="g")
        self.name = name
        self._geometry = functools.lru_cache(maxsize=1024)(self._build_geometry)

    @property
    def exact(self):
        return self.metric.exact

    @property
    def center(self):
        return 0.5 * (self.lower + self.upper)

    @property
    def half_width(self):
        return float(np.min(0.5 * (self.upper - self.lower)))

    def contains(self, p, reach=0.0):
        p = np.asarray(p, dtype=float)
        return bool(np.all(p - reach >= self.lower) and np.all(p + reach <= self.upper))

    def check_point(self, p, reach=0.0):
        if not self.contains(p, reach):
            raise StencilError(p, reach)

    def check_config(self, config):
        if config.reach(3) >= self.half_width:
            raise ValidationError("derivative config", "steps %r do not fit in the chart box" % (config,))

    def metric_at(self, p):
        return MetricAtPoint(self.metric(p))

    def geometry(self, p, depth=0, config=None):
        key = tuple(float(c) for c in p)
        return self._geometry(key, depth, config or DEFAULT_DERIVATIVES)

    def _build_geometry(self, key, depth, config):
        p = np.array(key)
        order = depth + 2
        self.check_point(p, self.metric.reach(order, config))
        return PointGeometry(self.metric.jet_at(p, order, config), depth)

    def __repr__(self):
        return "ChartManifold(%s, n=%d%s)" % (self.name, self.n, ", exact" if self.exact else "")


def christoffel(m, p, config=None):
    """ Gamma^k_ij as a (1,2) tensor value (not a tensor, but stored the same way). """
    return TensorValue(m.geometry(p, 0, config).gamma, (1, 2))


def riemann(m, p, config=None):
    return TensorValue(m.geometry(p, 0, config).riemann, (1, 3))


def riemann_lowered(m, p, config=None):
    geo = m.geometry(p, 0, config)
    return raise_lower(TensorValue(geo.riemann, (1, 3)), 0, geo.metric, "down")


def riemann_derivative(m, p, config=None):
    """ nabla R as a (1,4) tensor, differentiation slot first among the covariant ones. """
    geo = m.geometry(p, 1, config)
    return TensorValue(covariant_jet(geo.riemann_jet, geo.gamma_jet, (1, 3)).value, (1, 4))


def ricci(m, p, config=None):
    return TensorValue(m.geometry(p, 0, config).ricci, (0, 2))


def ricci_derivative(m, p, config=None):
    """ nabla Ric, ``[k, x, y]`` = (nabla_k Ric)(x, y). """
    geo = m.geometry(p, 1, config)
    return TensorValue(covariant_jet(geo.ricci_jet, geo.gamma_jet, (0, 2)).value, (0, 3))


def ricci_operator_derivative(m, p, config=None):
    """ nabla Q, ``[a, k, b]`` = ((nabla_k Q) d_b)^a. """
    geo = m.geometry(p, 1, config)
    return TensorValue(covariant_jet(geo.ricci_operator_jet, geo.gamma_jet, (1, 1)).value, (1, 2))


def scalar_gradient(m, p, config=None):
    """ dr at p. """
    return TensorValue(m.geometry(p, 1, config).scalar_jet.terms[1], (0, 1))


def scalar_curvature(m, p, config=None):
    return m.geometry(p, 0, config).scalar


def ricci_operator(m, p, config=None):
    return TensorValue(m.geometry(p, 0, config).ricci_operator, (1, 1))


def covariant_jet(t_jet, gamma_jet, valence):
    """
    Jet of nabla T from the jet of T and the Christoffel jet.
    The result has one order less than ``t_jet``.
    """
    p, q = valence
    letters = _SLOT_LETTERS[:p + q]
    out = letters[:p] + 'k' + letters[p:]
    result = jet_einsum('k%s->%s' % (letters, out), t_jet.derivative())
    for s in range(p + q):
        swapped = letters[:s] + 'm' + letters[s + 1:]
        if s < p:
            result = result + jet_einsum('%skm,%s->%s' % (letters[s], swapped, out), gamma_jet, t_jet)
        else:
            result = result - jet_einsum('mk%s,%s->%s' % (letters[s], swapped, out), gamma_jet, t_jet)
    return result


def lie_jet(v_jet, t_jet, valence):
    """ Jet of L_V T from the coordinate formula. One order less than the inputs. """
    p, q = valence
    letters = _SLOT_LETTERS[:p + q]
    dv = v_jet.derivative()
    result = jet_einsum('c,c%s->%s' % (letters, letters), v_jet, t_jet.derivative())
    for s in range(p + q):
        swapped = letters[:s] + 'c' + letters[s + 1:]
        if s < p:
            result = result - jet_einsum('c%s,%s->%s' % (letters[s], swapped, letters), dv, t_jet)
        else:
            result = result + jet_einsum('%sc,%s->%s' % (letters[s], swapped, letters), dv, t_jet)
    return result


def lie_connection_jet(gamma_jet, v_jet):
    """
    Jet of (L_V Gamma)^a_bc = d_b d_c V^a + V^d d_d Gamma^a_bc - Gamma^d_bc d_d V^a
    + Gamma^a_dc d_b V^d + Gamma^a_bd d_c V^d.
    """
    dv = v_jet.derivative()
    ddv = dv.derivative()
    dgamma = gamma_jet.derivative()
    return (ddv.transpose((2, 0, 1))
            + jet_einsum('d,dabc->abc', v_jet, dgamma)
            - jet_einsum('dbc,da->abc', gamma_jet, dv)
            + jet_einsum('adc,bd->abc', gamma_jet, dv)
            + jet_einsum('abd,cd->abc', gamma_jet, dv))


def second_covariant_jet(v_jet, gamma_jet):
    """ Jet of nabla^2 V, ``[a, x, y]`` = (nabla_X nabla_Y V - nabla_{nabla_X Y} V)^a. """
    return covariant_jet(covariant_jet(v_jet, gamma_jet, (1, 0)), gamma_jet, (1, 1))


def covariant_derivative(m, field, p, config=None):
    config = config or DEFAULT_DERIVATIVES
    m.check_point(p, field.reach(1, config))
    geo = m.geometry(p, 0, config)
    p_, q_ = field.valence
    value = covariant_jet(field.jet_at(p, 1, config), geo.gamma_jet, field.valence).value
    return TensorValue(value, (p_, q_ + 1), m.dim)


def lie_derivative(m, flow, field, p, config=None):
    """ L_V T at p from the coordinate formula. """
    config = config or DEFAULT_DERIVATIVES
    _check_flow(flow)
    m.check_point(p, max(flow.reach(1, config), field.reach(1, config)))
    value = lie_jet(flow.jet_at(p, 1, config), field.jet_at(p, 1, config), field.valence).value
    return TensorValue(value, field.valence, m.dim)


def lie_derivative_covariant(m, flow, field, p, config=None):
    """ L_V T = nabla_V T - (nabla V) acting on T, the Leibniz form of the Lie derivative. """
    _check_flow(flow)
    p_, q_ = field.valence
    letters = _SLOT_LETTERS[:p_ + q_]
    t = field(p)
    v = flow(p)
    dt = covariant_derivative(m, field, p, config).components
    dv = covariant_derivative(m, flow, p, config).components
    result = np.einsum('%sk%s,k->%s' % (letters[:p_], letters[p_:], letters), dt, v)
    for s in range(p_ + q_):
        swapped = letters[:s] + 'c' + letters[s + 1:]
        if s < p_:
            result = result - np.einsum('%sc,%s->%s' % (letters[s], swapped, letters), dv, t)
        else:
            result = result + np.einsum('c%s,%s->%s' % (letters[s], swapped, letters), dv, t)
    return TensorValue(result, field.valence, m.dim)


def lie_derivative_transport(m, flow, field, p, config=None):
    """
    L_V T at p by transporting T along the first order flow x -> x + t V(x):
    the pulled back field is differenced centrally in t.
    """
    config = config or DEFAULT_DERIVATIVES
    _check_flow(flow)
    p = np.asarray(p, dtype=float)
    v = flow(p)
    dv = flow.jet_at(p, 1, config).terms[1].T
    step = config.h_second
    m.check_point(p, step * float(np.abs(v).max()) + flow.reach(1, config))
    p_, q_ = field.valence
    identity = np.eye(m.dim)

    def pulled(t):
        jac = identity + t * dv
        ops = [np.linalg.inv(jac)] * p_ + [jac.T] * q_
        arr = field(p + t * v)
        for axis, op in enumerate(ops):
            arr = np.moveaxis(np.tensordot(op, arr, axes=([1], [axis])), 0, axis)
        return arr

    result = (pulled(step) - pulled(-step)) / (2.0 * step)
    if config.richardson:
        half = (pulled(0.5 * step) - pulled(-0.5 * step)) / step
        result = (4.0 * half - result) / 3.0
    return TensorValue(result, field.valence, m.dim)


def exterior_derivative_1form(m, omega, p, config=None):
    if omega.valence != (0, 1):
        raise ValidationError(omega.name, "exterior derivative needs a 1-form, valence is %s" % (omega.valence,))
    config = config or DEFAULT_DERIVATIVES
    m.check_point(p, omega.reach(1, config))
    d1 = omega.jet_at(p, 1, config).terms[1]
    return TensorValue(0.5 * (d1 - d1.T), (0, 2), m.dim)


def curvature_action(m, p, x, y, t, config=None):
    """ (R(X,Y).T)(Z,W) = -T(R(X,Y)Z, W) - T(Z, R(X,Y)W) for a (0,2) tensor T. """
    if isinstance(t, TensorValue) and t.valence != (0, 2):
        raise ValidationError("tensor", "curvature action needs valence (0, 2), got %s" % (t.valence,))
    r = m.geometry(p, 0, config).riemann
    rxy = np.einsum('lijk,i,j->lk', r, as_array(x), as_array(y))
    t = as_array(t)
    result = -np.einsum('lw,lz->zw', t, rxy) - np.einsum('zl,lw->zw', t, rxy)
    return TensorValue(result, (0, 2), m.dim)


def frame_residual(m, p, components, valence, config=None):
    """ Size of a residual tensor at p: largest component in the g-orthonormal frame. """
    if sum(valence) == 0:
        return abs(float(as_array(components)))
    return frame_norm(components, valence, m.geometry(p, 0, config).frame)


def _check_flow(flow):
    if flow.valence != (1, 0):
        raise ValidationError(flow.name, "flow must be a vector field, valence is %s" % (flow.valence,))


def curvature_field(m, config=None):
    """ R as a (1,3) field. Its jet is exact to first order when the metric jet is. """
    def evaluate(p):
        return m.geometry(p, 0, config).riemann

    def jet(p, order):
        if order > 1:
            raise ValueError("curvature jets are available to first order only")
        return m.geometry(p, order, config).riemann_jet

    return TensorFieldFn((1, 3), evaluate, jet=jet if m.exact else None, name="R")


def gradient_field(scalar):
    """ The exact 1-form df of a scalar field, differenced at first order. """
    def evaluate(p):
        return scalar.jet_at(p, 1).terms[1]

    def jet(p, order):
        return scalar.jet_at(p, order + 1).derivative()

    return TensorFieldFn((0, 1), evaluate, jet=jet if scalar.exact else None, name="d" + scalar.name)


def constant_jet_field(valence, value, name="constant"):
    """ A field with the same components everywhere. """
    value = np.asarray(value, dtype=float)
    return TensorFieldFn(valence, lambda p: value,
                         jet=lambda p, order: Jet.constant(value, len(p), order), name=name)

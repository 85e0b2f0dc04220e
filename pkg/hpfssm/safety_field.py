"""
This module contains the scalar pipeline of the haptic potential field: weighted relative velocity,
approaching speed, haptic radius and haptic activation distance.

Author:
    hpfssm developers
"""

import numpy as np

from hpfssm.geometry import as_vector3
from hpfssm.utils.errors import DegenerateGeometryError, RejectedInputError
from hpfssm.utils.hpf_global import gl
from hpfssm.utils.tool_function import ToolFunction

_ZERO = np.zeros(3)


class FieldEvaluation:
    """
    Result of evaluating the field for one sample.
    """

    def __init__(self, v_w, v_a, r_h, d_ha, d):
        """
        :param v_w: weighted relative velocity, m/s
        :param v_a: signed approaching speed, m/s, positive when closing
        :param r_h: haptic radius extension, meters
        :param d_ha: haptic activation distance, meters
        :param d: current TCP-hand distance, meters
        """
        self.v_w = v_w
        self.v_a = v_a
        self.r_h = r_h
        self.d_ha = d_ha
        self.d = d

    def __repr__(self):
        return 'FieldEvaluation(v_a=%r, r_h=%r, d_ha=%r, d=%r)' % (self.v_a, self.r_h, self.d_ha, self.d)


def weighted_relative_velocity(v_r, v_h, k_r=1.0, k_h=1.0):
    """
    k_r * v_r - k_h * v_h, componentwise.

    :param v_r: TCP velocity
    :param v_h: hand velocity
    :param k_r: robot weight, >= 0
    :param k_h: hand weight, >= 0
    :return: numpy array (3,)
    """
    if k_r < 0 or k_h < 0:
        raise RejectedInputError('safety_field.py: weights must be non-negative (k_r=%r, k_h=%r)' % (k_r, k_h))
    return k_r * as_vector3(v_r, 'v_r') - k_h * as_vector3(v_h, 'v_h')


def approaching_speed(v_w, tcp, hand):
    """
    Projection of v_w on the unit vector from the TCP toward the hand.

    :param v_w: weighted relative velocity
    :param tcp: TCP position
    :param hand: hand position
    :return: m/s, positive means net closing motion
    """
    offset = as_vector3(hand, 'hand') - as_vector3(tcp, 'tcp')
    distance = ToolFunction.norm(offset)
    if distance < gl.coincidence_tolerance:
        raise DegenerateGeometryError('safety_field.py: tcp and hand coincide (distance %r m)' % distance)
    return float(np.dot(as_vector3(v_w, 'v_w'), offset)) / distance


def haptic_radius(v_a, t_r):
    """
    0 when the robot does not close in, v_a * t_r otherwise.
    """
    if not t_r > 0:
        raise RejectedInputError('safety_field.py: t_r > 0 required, got %r' % t_r)
    if v_a <= 0:
        return 0.0
    return v_a * t_r


def haptic_activation_distance(d_ps, r_h, d_hmax):
    """
    min(d_hmax, d_ps + r_h).

    :return: meters, always within [d_ps, d_hmax]
    """
    if not 0 < d_ps <= d_hmax:
        raise RejectedInputError('safety_field.py: invariant violated: 0 < d_ps <= d_hmax (d_ps=%r, d_hmax=%r)'
                                 % (d_ps, d_hmax))
    if not r_h >= 0:
        raise RejectedInputError('safety_field.py: invariant violated: r_h >= 0 (r_h=%r)' % r_h)
    return min(d_hmax, d_ps + r_h)


def evaluate_field(sample, params, robot_stopped=False):
    """
    Evaluate the field for one sample.

    :param sample: a PoseSample
    :param params: a SafetyParams
    :param robot_stopped: if True the robot velocity does not contribute to v_w
    :return: a FieldEvaluation; raises DegenerateGeometryError when tcp and hand coincide
    """
    tcp, hand = sample.get_tcp(), sample.get_hand()
    v_r = _ZERO if robot_stopped else sample.get_tcp_v()
    v_w = weighted_relative_velocity(v_r, sample.get_hand_v(), params.get_k_r(), params.get_k_h())
    v_a = approaching_speed(v_w, tcp, hand)
    r_h = haptic_radius(v_a, params.get_t_r())
    d_ha = params.get_d_ha_fixed()
    if d_ha is None:
        d_ha = haptic_activation_distance(params.get_d_ps(), r_h, params.get_d_hmax())
    return FieldEvaluation(v_w, v_a, r_h, d_ha, ToolFunction.norm(hand - tcp))


def conservative_evaluation(sample, params):
    """
    Evaluation used when the geometry is degenerate: zero distance and the largest field.
    """
    v_w = weighted_relative_velocity(sample.get_tcp_v(), sample.get_hand_v(), params.get_k_r(), params.get_k_h())
    d_hmax = params.get_d_hmax()
    d_ha = params.get_d_ha_fixed()
    if d_ha is None:
        d_ha = d_hmax
    # closing speed taken as the full relative speed
    speed = ToolFunction.norm(v_w)
    return FieldEvaluation(v_w, speed, haptic_radius(speed, params.get_t_r()), d_ha, 0.0)

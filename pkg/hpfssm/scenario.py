"""
This module contains the configuration classes of a simulated run: the robot script, the hand model,
the visual cue model and the Scenario that ties them to a SafetyParams.

Author:
    hpfssm developers
"""

import hashlib
import json
import math

from hpfssm.geometry import as_vector3
from hpfssm.parameter import SafetyParams
from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.tool_function import ToolFunction

HAND_STATIC = 'static'
HAND_SCRIPTED = 'scripted'
HAND_REACTIVE = 'reactive'
HAND_KINDS = (HAND_STATIC, HAND_SCRIPTED, HAND_REACTIVE)

TRIGGER_HAPTIC = 'haptic'
TRIGGER_VISUAL = 'visual'
TRIGGERS = (TRIGGER_HAPTIC, TRIGGER_VISUAL)

_SEED_LIMIT = 2 ** 64


def _reject(invariant):
    ToolFunction.log('scenario.py: invariant violated: ' + invariant)
    raise RejectedInputError('invariant violated: ' + invariant)


def _number(value):
    """
    JSON-safe float: infinities are written as strings so that float() reads them back.
    """
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return value


def _optional_number(value):
    return None if value is None else _number(value)


def _points(values, name):
    if values is None:
        return []
    return [as_vector3(p, name) for p in values]


def _point_list(points):
    return [[float(c) for c in p] for p in points]


class RobotScript:
    """
    Piecewise-linear TCP motion through waypoints at constant speed.
    """

    def __init__(self, waypoints, speed, obeys_stop=True, cyclic=False, dwell=0.0):
        """
        :param waypoints: list of points, the first one is the start position
        :param speed: m/s along every segment
        :param obeys_stop: whether the robot stands still while a stop is latched
        :param cyclic: whether the robot goes back to the first waypoint after the last one
        :param dwell: seconds spent standing at every waypoint it arrives at
        """
        self.__waypoints = _points(waypoints, 'robot waypoint')
        self.__speed = float(speed)
        self.__obeys_stop = bool(obeys_stop)
        self.__cyclic = bool(cyclic)
        self.__dwell = float(dwell)
        self.check()

    def check(self):
        if len(self.__waypoints) < 1:
            _reject('robot script has >= 1 waypoint')
        if not (math.isfinite(self.__speed) and self.__speed > 0):
            _reject('robot speed > 0 (speed=%r)' % self.__speed)
        if not (math.isfinite(self.__dwell) and self.__dwell >= 0):
            _reject('robot dwell >= 0 (dwell=%r)' % self.__dwell)

    def get_waypoints(self):
        return self.__waypoints

    def get_speed(self):
        return self.__speed

    def get_obeys_stop(self):
        return self.__obeys_stop

    def get_cyclic(self):
        return self.__cyclic

    def get_dwell(self):
        return self.__dwell

    def to_dict(self):
        return {'waypoints': _point_list(self.__waypoints), 'speed': self.__speed,
                'obeys_stop': self.__obeys_stop, 'cyclic': self.__cyclic, 'dwell': self.__dwell}

    @staticmethod
    def from_dict(d):
        return RobotScript(d['waypoints'], d['speed'], d.get('obeys_stop', True), d.get('cyclic', False),
                           d.get('dwell', 0.0))


class VisualTrigger:
    """
    Model of an operator who only sees the robot: every glance_period seconds the operator looks up,
    and a glance at a distance <= threshold misses the cue with probability miss_probability.
    """

    def __init__(self, threshold=0.45, latency_mean=0.7, latency_std=0.3, miss_probability=0.3,
                 glance_period=0.2):
        self.__threshold = float(threshold)
        self.__latency_mean = float(latency_mean)
        self.__latency_std = float(latency_std)
        self.__miss_probability = float(miss_probability)
        self.__glance_period = float(glance_period)
        self.check()

    def check(self):
        if not (math.isfinite(self.__threshold) and self.__threshold > 0):
            _reject('visual threshold > 0 (threshold=%r)' % self.__threshold)
        if not (math.isfinite(self.__latency_mean) and self.__latency_mean >= 0):
            _reject('visual latency mean >= 0 (latency_mean=%r)' % self.__latency_mean)
        if not (math.isfinite(self.__latency_std) and self.__latency_std >= 0):
            _reject('visual latency std >= 0 (latency_std=%r)' % self.__latency_std)
        if not 0 <= self.__miss_probability < 1:
            _reject('0 <= miss_probability < 1 (miss_probability=%r)' % self.__miss_probability)
        if not (math.isfinite(self.__glance_period) and self.__glance_period > 0):
            _reject('glance_period > 0 (glance_period=%r)' % self.__glance_period)

    def get_threshold(self):
        return self.__threshold

    def get_latency_mean(self):
        return self.__latency_mean

    def get_latency_std(self):
        return self.__latency_std

    def get_miss_probability(self):
        return self.__miss_probability

    def get_glance_period(self):
        return self.__glance_period

    def to_dict(self):
        return {'threshold': self.__threshold, 'latency_mean': self.__latency_mean,
                'latency_std': self.__latency_std, 'miss_probability': self.__miss_probability,
                'glance_period': self.__glance_period}

    @staticmethod
    def from_dict(d):
        return VisualTrigger(**d)


class HandModel:
    """
    The simulated operator hand.

    A static hand stays at position. A scripted hand follows waypoints at speed. A reactive hand works at
    position with small velocity jitter and, once triggered, retreats from the TCP after its latency,
    holds, and returns to position when the TCP has gone away.
    """

    def __init__(self, kind=HAND_STATIC, position=(0.0, 0.0, 0.0), waypoints=None, speed=None,
                 latency=0.3243, latency_std=0.0, retreat_speed=0.5, retreat_accel=float('inf'),
                 retreat_distance=0.3, return_speed=0.3, return_clearance=None, trigger=TRIGGER_HAPTIC,
                 visual=None, jitter_amplitude=0.0):
        """
        :param kind: 'static', 'scripted' or 'reactive'
        :param position: start (static, reactive) position of the hand, meters
        :param waypoints: path of a scripted hand
        :param speed: speed of a scripted hand, m/s
        :param latency: seconds between the haptic trigger and the retreat, the mean when latency_std > 0
        :param latency_std: seconds; if > 0 each haptic latency is drawn from a normal truncated at 3 std
        :param retreat_speed: m/s
        :param retreat_accel: m/s^2, inf for an instantaneous step to retreat_speed
        :param retreat_distance: meters travelled away from the TCP before holding
        :param return_speed: m/s
        :param return_clearance: meters; the hand returns once the TCP is farther than this from the
            work position and not approaching it. None means the hand never returns.
        :param trigger: 'haptic' (reacts to the stimulus) or 'visual' (reacts to seeing the robot)
        :param visual: a VisualTrigger, required by the visual trigger
        :param jitter_amplitude: m/s, bound of the zero-mean velocity noise of a working hand
        """
        self.__kind = kind
        self.__position = as_vector3(position, 'hand position')
        self.__waypoints = _points(waypoints, 'hand waypoint')
        self.__speed = None if speed is None else float(speed)
        self.__latency = float(latency)
        self.__latency_std = float(latency_std)
        self.__retreat_speed = float(retreat_speed)
        self.__retreat_accel = float(retreat_accel)
        self.__retreat_distance = float(retreat_distance)
        self.__return_speed = float(return_speed)
        self.__return_clearance = None if return_clearance is None else float(return_clearance)
        self.__trigger = trigger
        if trigger == TRIGGER_VISUAL and visual is None:
            visual = VisualTrigger()
        self.__visual = visual
        self.__jitter_amplitude = float(jitter_amplitude)
        self.check()

    def check(self):
        if self.__kind not in HAND_KINDS:
            _reject("hand kind in %s (kind=%r)" % (HAND_KINDS, self.__kind))
        if self.__kind == HAND_SCRIPTED:
            if len(self.__waypoints) < 1:
                _reject('scripted hand has >= 1 waypoint')
            if self.__speed is None or not (math.isfinite(self.__speed) and self.__speed > 0):
                _reject('scripted hand speed > 0 (speed=%r)' % (self.__speed,))
        if self.__trigger not in TRIGGERS:
            _reject('hand trigger in %s (trigger=%r)' % (TRIGGERS, self.__trigger))
        if not (math.isfinite(self.__latency) and self.__latency >= 0):
            _reject('latency >= 0 (latency=%r)' % self.__latency)
        if not (math.isfinite(self.__latency_std) and self.__latency_std >= 0):
            _reject('latency_std >= 0 (latency_std=%r)' % self.__latency_std)
        if not (math.isfinite(self.__retreat_speed) and self.__retreat_speed > 0):
            _reject('retreat_speed > 0 (retreat_speed=%r)' % self.__retreat_speed)
        if not self.__retreat_accel > 0:
            _reject('retreat_accel > 0 (retreat_accel=%r)' % self.__retreat_accel)
        if not (math.isfinite(self.__retreat_distance) and self.__retreat_distance > 0):
            _reject('retreat_distance > 0 (retreat_distance=%r)' % self.__retreat_distance)
        if not (math.isfinite(self.__return_speed) and self.__return_speed > 0):
            _reject('return_speed > 0 (return_speed=%r)' % self.__return_speed)
        if self.__return_clearance is not None and not (math.isfinite(self.__return_clearance)
                                                        and self.__return_clearance >= 0):
            _reject('return_clearance >= 0 (return_clearance=%r)' % self.__return_clearance)
        if not (math.isfinite(self.__jitter_amplitude) and self.__jitter_amplitude >= 0):
            _reject('jitter_amplitude >= 0 (jitter_amplitude=%r)' % self.__jitter_amplitude)

    def check_against(self, params):
        """
        Invariants of a reactive hand that depend on the intentionality threshold.

        :param params: a SafetyParams
        :return: no return value
        """
        if self.__kind != HAND_REACTIVE:
            return
        v_intent = params.get_v_intent()
        if not self.__retreat_speed > v_intent:
            _reject('retreat_speed > v_intent (retreat_speed=%r, v_intent=%r)' % (self.__retreat_speed, v_intent))
        if not self.__jitter_amplitude < v_intent:
            _reject('jitter_amplitude < v_intent (jitter_amplitude=%r, v_intent=%r)'
                    % (self.__jitter_amplitude, v_intent))

    def copy(self, **changes):
        fields = self.__fields()
        fields.update(changes)
        return HandModel(**fields)

    def __fields(self):
        return {'kind': self.__kind, 'position': self.__position, 'waypoints': self.__waypoints,
                'speed': self.__speed, 'latency': self.__latency, 'latency_std': self.__latency_std,
                'retreat_speed': self.__retreat_speed, 'retreat_accel': self.__retreat_accel,
                'retreat_distance': self.__retreat_distance, 'return_speed': self.__return_speed,
                'return_clearance': self.__return_clearance, 'trigger': self.__trigger,
                'visual': self.__visual, 'jitter_amplitude': self.__jitter_amplitude}

    def get_kind(self):
        return self.__kind

    def is_reactive(self):
        return self.__kind == HAND_REACTIVE

    def get_position(self):
        return self.__position

    def get_waypoints(self):
        return self.__waypoints

    def get_speed(self):
        return self.__speed

    def get_latency(self):
        return self.__latency

    def get_latency_std(self):
        return self.__latency_std

    def get_retreat_speed(self):
        return self.__retreat_speed

    def get_retreat_accel(self):
        return self.__retreat_accel

    def get_retreat_distance(self):
        return self.__retreat_distance

    def get_return_speed(self):
        return self.__return_speed

    def get_return_clearance(self):
        return self.__return_clearance

    def get_trigger(self):
        return self.__trigger

    def get_visual(self):
        return self.__visual

    def get_jitter_amplitude(self):
        return self.__jitter_amplitude

    def to_dict(self):
        return {'kind': self.__kind, 'position': [float(c) for c in self.__position],
                'waypoints': _point_list(self.__waypoints), 'speed': self.__speed,
                'latency': self.__latency, 'latency_std': self.__latency_std,
                'retreat_speed': self.__retreat_speed, 'retreat_accel': _number(self.__retreat_accel),
                'retreat_distance': self.__retreat_distance, 'return_speed': self.__return_speed,
                'return_clearance': _optional_number(self.__return_clearance), 'trigger': self.__trigger,
                'visual': None if self.__visual is None else self.__visual.to_dict(),
                'jitter_amplitude': self.__jitter_amplitude}

    @staticmethod
    def from_dict(d):
        fields = dict(d)
        if fields.get('visual') is not None:
            fields['visual'] = VisualTrigger.from_dict(fields['visual'])
        if fields.get('retreat_accel') is not None:
            fields['retreat_accel'] = float(fields['retreat_accel'])
        return HandModel(**fields)


class Scenario:
    """
    A complete, seeded simulation run.
    """

    def __init__(self, robot, hand, params=None, dt=0.001, duration=4.0, seed=0, label='',
                 tcp_delay_s=0.0, hand_delay_s=0.0):
        """
        :param robot: a RobotScript
        :param hand: a HandModel
        :param params: a SafetyParams, defaults are used if None
        :param dt: seconds per step
        :param duration: seconds; the run has ceil(duration / dt) steps
        :param seed: integer in [0, 2**64), the only source of randomness of the run
        :param label: free text naming the run, e.g. the experimental condition
        :param tcp_delay_s: seconds by which the monitor sees the TCP channel late
        :param hand_delay_s: seconds by which the monitor sees the hand channel late
        """
        self.__robot = robot
        self.__hand = hand
        self.__params = SafetyParams() if params is None else params
        self.__dt = float(dt)
        self.__duration = float(duration)
        self.__seed = seed
        self.__label = str(label)
        self.__tcp_delay_s = float(tcp_delay_s)
        self.__hand_delay_s = float(hand_delay_s)
        self.check()

    def check(self):
        """
        Validate the scenario and every part of it.

        :return: no return value, raises RejectedInputError naming the first violated invariant
        """
        if not isinstance(self.__robot, RobotScript):
            _reject('robot is a RobotScript')
        if not isinstance(self.__hand, HandModel):
            _reject('hand is a HandModel')
        if not isinstance(self.__params, SafetyParams):
            _reject('params is a SafetyParams')
        if not (math.isfinite(self.__dt) and self.__dt > 0):
            _reject('dt > 0 (dt=%r)' % self.__dt)
        if not (math.isfinite(self.__duration) and self.__duration > 0):
            _reject('duration > 0 (duration=%r)' % self.__duration)
        if isinstance(self.__seed, bool) or not isinstance(self.__seed, int) or not 0 <= self.__seed < _SEED_LIMIT:
            _reject('seed is an integer in [0, 2**64) (seed=%r)' % (self.__seed,))
        for name, delay in (('tcp_delay_s', self.__tcp_delay_s), ('hand_delay_s', self.__hand_delay_s)):
            if not (math.isfinite(delay) and delay >= 0):
                _reject('%s >= 0 (%s=%r)' % (name, name, delay))
        self.__hand.check_against(self.__params)

    def copy(self, **changes):
        """
        Copy this scenario, replacing the given constructor fields.
        """
        fields = {'robot': self.__robot, 'hand': self.__hand, 'params': self.__params, 'dt': self.__dt,
                  'duration': self.__duration, 'seed': self.__seed, 'label': self.__label,
                  'tcp_delay_s': self.__tcp_delay_s, 'hand_delay_s': self.__hand_delay_s}
        fields.update(changes)
        return Scenario(**fields)

    def get_robot(self):
        return self.__robot

    def get_hand(self):
        return self.__hand

    def get_params(self):
        return self.__params

    def get_dt(self):
        return self.__dt

    def get_duration(self):
        return self.__duration

    def get_seed(self):
        return self.__seed

    def get_label(self):
        return self.__label

    def get_tcp_delay_s(self):
        return self.__tcp_delay_s

    def get_hand_delay_s(self):
        return self.__hand_delay_s

    def get_step_count(self):
        return ToolFunction.steps_for(self.__duration, self.__dt)

    def to_dict(self):
        return {'robot': self.__robot.to_dict(), 'hand': self.__hand.to_dict(), 'params': self.__params.to_dict(),
                'dt': self.__dt, 'duration': self.__duration, 'seed': self.__seed, 'label': self.__label,
                'tcp_delay_s': self.__tcp_delay_s, 'hand_delay_s': self.__hand_delay_s}

    @staticmethod
    def from_dict(d):
        return Scenario(RobotScript.from_dict(d['robot']), HandModel.from_dict(d['hand']),
                        SafetyParams(**d['params']), d['dt'], d['duration'], d['seed'], d.get('label', ''),
                        d.get('tcp_delay_s', 0.0), d.get('hand_delay_s', 0.0))

    def fingerprint(self):
        """
        Hash of the configuration and the seed.

        :return: hex string
        """
        return fingerprint(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, Scenario) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'Scenario(label=%r, seed=%r, dt=%r, duration=%r)' % (self.__label, self.__seed, self.__dt,
                                                                  self.__duration)


def fingerprint(scenario_dict):
    """
    sha256 of the canonical JSON form of a scenario dictionary.

    :param scenario_dict: the output of Scenario.to_dict
    :return: hex string
    """
    canonical = json.dumps(scenario_dict, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

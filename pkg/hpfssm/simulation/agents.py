"""
This module contains the simulated agents: a path follower shared by the robot and the scripted hand,
the robot agent and the hand agent with its reactive life cycle.

Author:
    hpfssm developers
"""

import numpy as np

from hpfssm.monitor import Zone
from hpfssm.scenario import HAND_REACTIVE, HAND_SCRIPTED, TRIGGER_HAPTIC
from hpfssm.utils.tool_function import ToolFunction

# truncated normals are cut at mean +- this many standard deviations
TRUNCATION = 3.0

WORKING = 'WORKING'
TRIGGERED = 'TRIGGERED'
RETREATING = 'RETREATING'
HOLDING = 'HOLDING'
RETURNING = 'RETURNING'

_EPS = 1e-12
_ZERO = np.zeros(3)


def truncated_standard_normal(rng):
    """
    A standard normal draw conditioned on |z| <= TRUNCATION, by rejection.
    """
    while True:
        z = rng.standard_normal()
        if abs(z) <= TRUNCATION:
            return float(z)


def draw_latency(rng, mean, std):
    """
    A latency from a normal(mean, std) truncated at mean +- 3 std and floored at 0.

    :param rng: a numpy.random.Generator
    :param mean: seconds
    :param std: seconds, 0 returns mean without touching the generator
    :return: seconds
    """
    if std <= 0:
        return float(mean)
    return max(0.0, mean + std * truncated_standard_normal(rng))


def latency_steps(latency, dt):
    """
    Whole steps needed to cover a latency: the smallest n >= 1 with n * dt >= latency.
    """
    return max(1, ToolFunction.steps_for(latency, dt))


class PathFollower:
    """
    Piecewise-linear motion at constant speed with exact arrival at every waypoint. The part of a step left
    after reaching a waypoint is carried into the next segment unless the follower dwells there.
    """

    def __init__(self, waypoints, speed, cyclic=False, dwell=0.0):
        """
        :param waypoints: list of points, the follower starts at the first one
        :param speed: m/s
        :param cyclic: go back to the first waypoint after the last one
        :param dwell: seconds spent at every waypoint arrived at
        """
        self.__waypoints = [np.array(p, dtype=float) for p in waypoints]
        self.__speed = float(speed)
        self.__cyclic = cyclic
        self.__dwell = float(dwell)
        self.__position = self.__waypoints[0].copy()
        self.__target = 1
        self.__dwell_left = 0.0
        self.__finished = len(self.__waypoints) == 1
        if cyclic and all(np.array_equal(p, self.__waypoints[0]) for p in self.__waypoints):
            self.__finished = True

    def get_position(self):
        return self.__position

    def is_finished(self):
        return self.__finished

    def is_dwelling(self):
        return self.__dwell_left > 0

    def velocity(self):
        """
        Commanded velocity toward the current target, zero when dwelling or finished.
        """
        if self.__finished or self.__dwell_left > 0:
            return _ZERO.copy()
        offset = self.__waypoints[self.__target] - self.__position
        distance = ToolFunction.norm(offset)
        if distance <= _EPS:
            return _ZERO.copy()
        return offset * (self.__speed / distance)

    def advance(self, dt):
        """
        Move along the path for dt seconds.

        :param dt: seconds
        :return: no return value
        """
        if self.__finished:
            return
        if self.__dwell_left > 0:
            self.__dwell_left -= dt
            if self.__dwell_left <= _EPS:
                self.__dwell_left = 0.0
            return
        budget = self.__speed * dt
        idle_hops = 0
        while budget > 0 and not self.__finished:
            target = self.__waypoints[self.__target]
            offset = target - self.__position
            distance = ToolFunction.norm(offset)
            if distance <= budget:
                self.__position = target.copy()
                budget -= distance
                idle_hops = idle_hops + 1 if distance == 0 else 0
                self.__next_target()
                if self.__dwell > 0:
                    self.__dwell_left = self.__dwell
                    break
                if idle_hops > len(self.__waypoints):
                    break
            else:
                self.__position = self.__position + offset * (budget / distance)
                budget = 0.0

    def __next_target(self):
        self.__target += 1
        if self.__target == len(self.__waypoints):
            if self.__cyclic:
                self.__target = 0
            else:
                self.__finished = True


class RobotAgent:
    """
    The scripted robot TCP. It stands still while a stop is latched, if its script obeys stops.
    """

    def __init__(self, script):
        """
        :param script: a RobotScript
        """
        self.__script = script
        self.__follower = PathFollower(script.get_waypoints(), script.get_speed(), script.get_cyclic(),
                                       script.get_dwell())
        self.__halted = False

    def get_position(self):
        return self.__follower.get_position()

    def get_velocity(self):
        if self.__halted:
            return _ZERO.copy()
        return self.__follower.velocity()

    def step(self, dt, stop_latched):
        """
        Advance one step.

        :param dt: seconds
        :param stop_latched: the monitor's stop command after the current sample
        :return: no return value
        """
        self.__halted = stop_latched and self.__script.get_obeys_stop()
        if not self.__halted:
            self.__follower.advance(dt)


class HandAgent:
    """
    The simulated operator hand.

    A reactive hand goes through WORKING -> TRIGGERED -> RETREATING -> HOLDING -> RETURNING -> WORKING.
    Triggers are accepted while WORKING or RETURNING. The retreat starts latency seconds after the trigger,
    rounded up to whole steps and at least one step, and ramps up to retreat_speed at retreat_accel.
    """

    def __init__(self, model, rng, dt):
        """
        :param model: a HandModel
        :param rng: a numpy.random.Generator owned by this hand
        :param dt: seconds per step
        """
        self.__model = model
        self.__rng = rng
        self.__dt = dt
        self.__position = model.get_position().copy()
        self.__velocity = _ZERO.copy()
        self.__follower = None
        if model.get_kind() == HAND_SCRIPTED:
            self.__follower = PathFollower(model.get_waypoints(), model.get_speed())
            self.__position = self.__follower.get_position().copy()
            self.__velocity = self.__follower.velocity()
        self.__state = WORKING
        self.__react_step = None
        self.__retreat_start = None
        self.__retreat_direction = None
        self.__retreated = 0.0
        self.__triggers = []
        visual = model.get_visual()
        self.__glance_steps = None if visual is None else latency_steps(visual.get_glance_period(), dt)
        if model.get_kind() == HAND_REACTIVE:
            self.__velocity = self.__jitter()

    def get_position(self):
        return self.__position

    def get_velocity(self):
        return self.__velocity

    def get_state(self):
        return self.__state

    def get_triggers(self):
        """
        :return: list of (trigger step, reaction step) pairs
        """
        return self.__triggers

    def observe(self, k, zone, tcp):
        """
        Let the hand perceive step k: the haptic stimulus (on while the zone is not SAFE) or, for a visual
        hand, the true TCP position.

        :param k: step index
        :param zone: the monitor's Zone at step k
        :param tcp: true TCP position at step k
        :return: no return value
        """
        if self.__model.get_kind() != HAND_REACTIVE or self.__state not in (WORKING, RETURNING):
            return
        if self.__model.get_trigger() == TRIGGER_HAPTIC:
            if zone is not Zone.SAFE:
                self.__trigger(k, draw_latency(self.__rng, self.__model.get_latency(),
                                               self.__model.get_latency_std()))
            return
        if k % self.__glance_steps != 0:
            return
        visual = self.__model.get_visual()
        if ToolFunction.norm(self.__position - tcp) > visual.get_threshold():
            return
        if self.__rng.random() < visual.get_miss_probability():
            return
        self.__trigger(k, draw_latency(self.__rng, visual.get_latency_mean(), visual.get_latency_std()))

    def __trigger(self, k, latency):
        self.__state = TRIGGERED
        self.__react_step = k + latency_steps(latency, self.__dt)
        self.__triggers.append((k, self.__react_step))

    def advance(self, k, tcp, tcp_v):
        """
        Move from step k to step k + 1 with the current velocity, then set the velocity of step k + 1.

        :param k: step index
        :param tcp: true TCP position at step k
        :param tcp_v: true TCP velocity at step k
        :return: no return value
        """
        dt = self.__dt
        kind = self.__model.get_kind()
        if kind == HAND_SCRIPTED:
            self.__follower.advance(dt)
            self.__position = self.__follower.get_position().copy()
            self.__velocity = self.__follower.velocity()
            return
        if kind != HAND_REACTIVE:
            return
        self.__position = self.__position + self.__velocity * dt
        if self.__state == RETREATING:
            self.__retreated += ToolFunction.norm(self.__velocity) * dt
            if self.__retreated >= self.__model.get_retreat_distance() - _EPS:
                self.__state = HOLDING
        elif self.__state == RETURNING:
            if ToolFunction.norm(self.__model.get_position() - self.__position) <= _EPS:
                self.__position = self.__model.get_position().copy()
                self.__state = WORKING
        nxt = k + 1
        if self.__state == TRIGGERED and nxt >= self.__react_step:
            self.__state = RETREATING
            self.__retreat_start = nxt
            self.__retreated = 0.0
            self.__retreat_direction = self.__away_from(tcp, tcp_v)
        if self.__state == HOLDING and self.__may_return(tcp, tcp_v):
            self.__state = RETURNING
        self.__velocity = self.__next_velocity(nxt)

    def __next_velocity(self, nxt):
        model = self.__model
        dt = self.__dt
        if self.__state == RETREATING:
            ramp = model.get_retreat_accel() * (nxt - self.__retreat_start + 1) * dt
            speed = min(model.get_retreat_speed(), ramp)
            # do not overshoot the retreat distance
            speed = min(speed, (model.get_retreat_distance() - self.__retreated) / dt)
            return self.__retreat_direction * max(speed, 0.0)
        if self.__state == RETURNING:
            offset = model.get_position() - self.__position
            distance = ToolFunction.norm(offset)
            if distance <= _EPS:
                return _ZERO.copy()
            speed = min(model.get_return_speed(), distance / dt)
            return offset * (speed / distance)
        return self.__jitter()

    def __away_from(self, tcp, tcp_v):
        offset = self.__position - tcp
        distance = ToolFunction.norm(offset)
        if distance > _EPS:
            return offset / distance
        speed = ToolFunction.norm(tcp_v)
        if speed > _EPS:
            return tcp_v / speed
        return np.array([0.0, 0.0, 1.0])

    def __may_return(self, tcp, tcp_v):
        clearance = self.__model.get_return_clearance()
        if clearance is None:
            return False
        offset = self.__model.get_position() - tcp
        if ToolFunction.norm(offset) <= clearance:
            return False
        return float(np.dot(tcp_v, offset)) <= 0

    def __jitter(self):
        amplitude = self.__model.get_jitter_amplitude()
        if amplitude <= 0:
            return _ZERO.copy()
        direction = self.__rng.standard_normal(3)
        length = ToolFunction.norm(direction)
        if length <= _EPS:
            return _ZERO.copy()
        return direction * (amplitude * self.__rng.random() / length)


def reaction_latency_bounds(mean, std):
    """
    Support of the truncated latency distribution.

    :return: (low, high) seconds
    """
    if std <= 0:
        return float(mean), float(mean)
    return max(0.0, mean - TRUNCATION * std), mean + TRUNCATION * std

"""
This module contains the per-sample safety state machine. It classifies every sample into a zone, emits
edge-triggered events and latches the robot stop.

Author:
    hpfssm developers
"""

from enum import Enum

from hpfssm.safety_field import conservative_evaluation, evaluate_field
from hpfssm.utils.errors import DegenerateGeometryError, StreamError


class Zone(Enum):
    """
    Proximity zones, from the most to the least severe.
    """
    STOP = 'STOP'
    HAPTIC = 'HAPTIC'
    SAFE = 'SAFE'

    @property
    def severity(self):
        return _SEVERITY[self]


_SEVERITY = {Zone.STOP: 2, Zone.HAPTIC: 1, Zone.SAFE: 0}


class EventKind(Enum):
    HAPTIC_ON = 'HapticOn'
    HAPTIC_OFF = 'HapticOff'
    ROBOT_STOP = 'RobotStop'
    ROBOT_RESUME = 'RobotResume'


class MonitorEvent:
    """
    An edge-triggered monitor output.
    """

    def __init__(self, t, kind):
        """
        :param t: seconds, time of the sample that caused the event
        :param kind: an EventKind (or its value)
        """
        self.__t = float(t)
        self.__kind = EventKind(kind)

    def get_t(self):
        return self.__t

    def get_kind(self):
        return self.__kind

    def __eq__(self, other):
        return isinstance(other, MonitorEvent) and self.__t == other.get_t() and self.__kind == other.get_kind()

    def __hash__(self):
        return hash((self.__t, self.__kind))

    def __repr__(self):
        return '%s@%r' % (self.__kind.value, self.__t)


class MonitorState:
    """
    Immutable monitor state between two samples.
    """

    def __init__(self, zone=Zone.SAFE, haptic_active=False, stop_latched=False, last_evaluation=None, last_t=None):
        """
        :param zone: zone of the last sample
        :param haptic_active: whether the haptic stimulus is on
        :param stop_latched: whether the robot is commanded to stand still
        :param last_evaluation: FieldEvaluation of the last sample, None before the first sample
        :param last_t: time of the last sample, None before the first sample
        """
        self.zone = zone
        self.haptic_active = haptic_active
        self.stop_latched = stop_latched
        self.last_evaluation = last_evaluation
        self.last_t = last_t

    @staticmethod
    def initial():
        return MonitorState()

    def is_pristine(self):
        return (self.zone is Zone.SAFE and not self.haptic_active and not self.stop_latched
                and self.last_t is None)


def classify_zone(d, d_ha, d_ps):
    """
    Zone of a distance. Boundaries belong to the more severe zone.

    :param d: TCP-hand distance
    :param d_ha: haptic activation distance
    :param d_ps: protective separation distance
    :return: a Zone
    """
    if d <= d_ps:
        return Zone.STOP
    if d <= d_ha:
        return Zone.HAPTIC
    return Zone.SAFE


def step(state, sample, params):
    """
    Advance the monitor by one sample.

    :param state: a MonitorState
    :param sample: a PoseSample, later than the previous one
    :param params: a SafetyParams
    :return: (new MonitorState, Zone, list of MonitorEvent)
    """
    t = sample.get_t()
    if state.last_t is not None and not t > state.last_t:
        raise StreamError('monitor.py: sample time %r does not follow %r' % (t, state.last_t))
    try:
        evaluation = evaluate_field(sample, params, robot_stopped=state.stop_latched)
        zone = classify_zone(evaluation.d, evaluation.d_ha, params.get_d_ps())
    except DegenerateGeometryError:
        evaluation = conservative_evaluation(sample, params)
        zone = Zone.STOP
    if zone is Zone.SAFE and state.haptic_active and evaluation.d <= evaluation.d_ha + params.get_hysteresis():
        zone = Zone.HAPTIC

    events = []
    haptic_active = zone is not Zone.SAFE
    stop_latched = state.stop_latched
    if haptic_active and not state.haptic_active:
        events.append(MonitorEvent(t, EventKind.HAPTIC_ON))
    if zone is Zone.STOP and not stop_latched:
        stop_latched = True
        events.append(MonitorEvent(t, EventKind.ROBOT_STOP))
    elif stop_latched and params.resumes() and evaluation.d > params.get_d_ps() + params.get_resume_margin():
        stop_latched = False
        events.append(MonitorEvent(t, EventKind.ROBOT_RESUME))
    if state.haptic_active and not haptic_active:
        events.append(MonitorEvent(t, EventKind.HAPTIC_OFF))
    return MonitorState(zone, haptic_active, stop_latched, evaluation, t), zone, events


def reset(state=None):
    """
    Pristine state: zone SAFE, no stimulus, no latched stop.

    :param state: ignored, accepted so reset can be applied to any state
    :return: a MonitorState
    """
    return MonitorState.initial()


class SafetyMonitor:
    """
    Single-owner wrapper holding the current MonitorState. One caller advances it; it may move between
    threads but must not be stepped concurrently.
    """

    def __init__(self, params):
        """
        :param params: a SafetyParams
        """
        self.__params = params
        self.__state = MonitorState.initial()
        self.__event_count = 0

    def step(self, sample):
        """
        :param sample: a PoseSample
        :return: (Zone, list of MonitorEvent)
        """
        self.__state, zone, events = step(self.__state, sample, self.__params)
        self.__event_count += len(events)
        return zone, events

    def reset(self):
        self.__state = reset(self.__state)
        self.__event_count = 0

    def get_state(self):
        return self.__state

    def get_params(self):
        return self.__params

    def get_event_count(self):
        return self.__event_count

    def robot_halted(self):
        return self.__state.stop_latched

"""
This module contains the classes TraceStep and Trace, the recorded output of a simulated or replayed run.

Author:
    hpfssm developers
"""

import numpy as np

from hpfssm.monitor import EventKind
from hpfssm.utils.tool_function import ToolFunction


class TraceStep:
    """
    One recorded step: the sample the monitor saw, its zone and field, and the events it emitted.
    """

    def __init__(self, sample, zone, d, d_ha, events, evaluation=None):
        """
        :param sample: a PoseSample
        :param zone: a Zone
        :param d: TCP-hand distance seen by the monitor, meters
        :param d_ha: haptic activation distance, meters
        :param events: list of MonitorEvent
        :param evaluation: the FieldEvaluation, absent for steps read back from a file
        """
        self.__sample = sample
        self.__zone = zone
        self.__d = float(d)
        self.__d_ha = float(d_ha)
        self.__events = list(events)
        self.__evaluation = evaluation

    def get_sample(self):
        return self.__sample

    def get_t(self):
        return self.__sample.get_t()

    def get_zone(self):
        return self.__zone

    def get_d(self):
        return self.__d

    def get_d_ha(self):
        return self.__d_ha

    def get_events(self):
        return self.__events

    def get_event_kinds(self):
        return [e.get_kind() for e in self.__events]

    def get_evaluation(self):
        return self.__evaluation

    def hand_speed(self):
        return ToolFunction.norm(self.__sample.get_hand_v())


class Trace:
    """
    Ordered steps of one run, timestamps t0 + k * dt, with the fingerprint of the scenario that made it.
    """

    def __init__(self, steps, dt, fingerprint='', label='', seed=0, scenario=None):
        """
        :param steps: list of TraceStep
        :param dt: seconds between steps
        :param fingerprint: hex digest of the scenario configuration and seed
        :param label: label of the scenario
        :param seed: seed of the scenario
        :param scenario: Scenario.to_dict() of the producing scenario, None for external traces
        """
        self.__steps = list(steps)
        self.__dt = float(dt)
        self.__fingerprint = fingerprint
        self.__label = label
        self.__seed = seed
        self.__scenario = scenario

    def __len__(self):
        return len(self.__steps)

    def __iter__(self):
        return iter(self.__steps)

    def __getitem__(self, index):
        return self.__steps[index]

    def get_steps(self):
        return self.__steps

    def get_dt(self):
        return self.__dt

    def get_fingerprint(self):
        return self.__fingerprint

    def get_label(self):
        return self.__label

    def get_seed(self):
        return self.__seed

    def get_scenario(self):
        return self.__scenario

    def get_duration(self):
        return len(self.__steps) * self.__dt

    def times(self):
        return np.array([s.get_t() for s in self.__steps])

    def distances(self):
        return np.array([s.get_d() for s in self.__steps])

    def activation_distances(self):
        return np.array([s.get_d_ha() for s in self.__steps])

    def hand_speeds(self):
        return np.array([s.hand_speed() for s in self.__steps])

    def tcp_positions(self):
        return np.array([s.get_sample().get_tcp() for s in self.__steps])

    def zones(self):
        return [s.get_zone() for s in self.__steps]

    def events(self):
        """
        :return: all events of the run, in order
        """
        return [e for s in self.__steps for e in s.get_events()]

    def first_event(self, kind):
        """
        Index of the first step emitting an event of the given kind.

        :param kind: an EventKind or its value
        :return: step index, or None
        """
        kind = EventKind(kind)
        for k, s in enumerate(self.__steps):
            if kind in s.get_event_kinds():
                return k
        return None

    def count_events(self, kind):
        kind = EventKind(kind)
        return sum(1 for e in self.events() if e.get_kind() is kind)

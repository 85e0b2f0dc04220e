"""
This module contains the class SimulationEngine, the deterministic lockstep loop that runs a Scenario:
sample, monitor, hand perception, robot motion, hand motion.

Author:
    hpfssm developers
"""

import logging
from collections import deque

import numpy as np

from hpfssm.monitor import SafetyMonitor
from hpfssm.parameter import DefaultStoppingCriterion
from hpfssm.pose import PoseSample
from hpfssm.simulation.agents import HandAgent, RobotAgent
from hpfssm.trace import Trace, TraceStep
from hpfssm.utils.hpf_global import gl
from hpfssm.utils.tool_function import ToolFunction

# stream key of the hand's random generator
HAND_STREAM = 1


class SimulationEngine:
    """
    Runs one Scenario. A run is strictly sequential; independent engines may run in parallel.
    """

    def __init__(self, scenario, stopping_criterion=None):
        """
        :param scenario: a Scenario
        :param stopping_criterion: object with check(context) -> bool called after every step,
            DefaultStoppingCriterion if None
        """
        scenario.check()
        self.__scenario = scenario
        self.__criterion = DefaultStoppingCriterion() if stopping_criterion is None else stopping_criterion
        self.__steps = []
        self.__step_index = -1
        self.__robot = None
        self.__hand = None
        self.__monitor = None

    def get_scenario(self):
        return self.__scenario

    def get_steps(self):
        return self.__steps

    def get_step_index(self):
        return self.__step_index

    def get_robot_agent(self):
        return self.__robot

    def get_hand_agent(self):
        return self.__hand

    def get_monitor(self):
        return self.__monitor

    def run(self):
        """
        Run the scenario from the start.

        :return: a Trace
        """
        sc = self.__scenario
        dt = sc.get_dt()
        params = sc.get_params()
        self.__robot = RobotAgent(sc.get_robot())
        self.__hand = HandAgent(sc.get_hand(), gl.make_rng(sc.get_seed(), HAND_STREAM), dt)
        self.__monitor = SafetyMonitor(params)
        self.__steps = []
        tcp_lag = int(round(sc.get_tcp_delay_s() / dt))
        hand_lag = int(round(sc.get_hand_delay_s() / dt))
        tcp_history = deque(maxlen=tcp_lag + 1)
        hand_history = deque(maxlen=hand_lag + 1)
        n = sc.get_step_count()
        stopped_early = False
        for k in range(n):
            self.__step_index = k
            tcp, tcp_v = self.__robot.get_position().copy(), self.__robot.get_velocity()
            hand, hand_v = self.__hand.get_position().copy(), self.__hand.get_velocity().copy()
            tcp_history.append((tcp, tcp_v))
            hand_history.append((hand, hand_v))
            # oldest entry is step max(0, k - lag)
            seen_tcp, seen_tcp_v = tcp_history[0]
            seen_hand, seen_hand_v = hand_history[0]
            sample = PoseSample(k * dt, seen_tcp, seen_tcp_v, seen_hand, seen_hand_v)
            zone, events = self.__monitor.step(sample)
            evaluation = self.__monitor.get_state().last_evaluation
            self.__steps.append(TraceStep(sample, zone, evaluation.d, evaluation.d_ha, events, evaluation))
            self.__hand.observe(k, zone, tcp)
            self.__robot.step(dt, self.__monitor.robot_halted())
            self.__hand.advance(k, tcp, tcp_v)
            if self.__criterion.check(self):
                stopped_early = k + 1 < n
                break
        trace = Trace(self.__steps, dt, sc.fingerprint(), sc.get_label(), sc.get_seed(), sc.to_dict())
        ToolFunction.log('engine.py: %s seed %d, %d steps%s, %d events, min distance %.4f m'
                         % (sc.get_label() or 'scenario', sc.get_seed(), len(trace),
                            ' (stopped early)' if stopped_early else '', self.__monitor.get_event_count(),
                            float(np.min(trace.distances()))), level=logging.DEBUG)
        return trace


def run_scenario(scenario, stopping_criterion=None):
    """
    Run a scenario.

    :param scenario: a Scenario
    :param stopping_criterion: see SimulationEngine
    :return: a Trace of ceil(duration / dt) steps unless the criterion stopped the run early
    """
    return SimulationEngine(scenario, stopping_criterion).run()

"""
This module contains the reaction-time harness: a stopwatch started when the hand enters the haptic field
and stopped at the first intentional hand movement, run over subjects and trials.

Author:
    hpfssm developers
"""

from multiprocessing import Pool

import numpy as np

from hpfssm.scenario import TRIGGER_HAPTIC
from hpfssm.simulation.agents import draw_latency, truncated_standard_normal
from hpfssm.simulation.engine import run_scenario
from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.hpf_global import gl
from hpfssm.utils.tool_function import ToolFunction

LATENCY_STREAM = 2
TRIAL_STREAM = 3


class Stopwatch:
    """
    Stopping criterion timing one trial. It starts at the first step with d <= d_ha and stops at the first
    later step whose hand speed exceeds v_intent; the run ends there.
    """

    def __init__(self, v_intent):
        self.__v_intent = v_intent
        self.__start = None
        self.__stop = None

    def check(self, context):
        k = context.get_step_index()
        step = context.get_steps()[k]
        if self.__start is None:
            if step.get_d() <= step.get_d_ha():
                self.__start = k
            return False
        if step.hand_speed() > self.__v_intent:
            self.__stop = k
            return True
        return False

    def elapsed(self, dt):
        """
        :param dt: seconds per step
        :return: measured seconds, None if the stopwatch never stopped
        """
        if self.__stop is None:
            return None
        return (self.__stop - self.__start) * dt


def stopwatch_time(trace, v_intent):
    """
    Reaction time read off a recorded trace.

    :param trace: a Trace
    :param v_intent: m/s
    :return: seconds, or None when the field was never entered or the hand never moved intentionally
    """
    start = None
    for k, step in enumerate(trace):
        if start is None:
            if step.get_d() <= step.get_d_ha():
                start = k
        elif step.hand_speed() > v_intent:
            return (k - start) * trace.get_dt()
    return None


class ReactionTimes(list):
    """
    Measured reaction times in seconds, subject-major; missing trials are None.
    """

    def __init__(self, values, latencies, subjects):
        """
        :param values: measured seconds or None, one per trial
        :param latencies: configured latency of every trial
        :param subjects: subject index of every trial
        """
        list.__init__(self, values)
        self.latencies = list(latencies)
        self.subjects = list(subjects)

    @property
    def all_missing(self):
        return all(v is None for v in self)

    def measured(self):
        return [v for v in self if v is not None]

    def missing_count(self):
        return sum(1 for v in self if v is None)

    def fastest(self):
        measured = self.measured()
        return min(measured) if measured else None

    def slowest(self):
        measured = self.measured()
        return max(measured) if measured else None

    def per_subject_means(self):
        """
        :return: dict subject index -> mean measured time (None if all of its trials are missing)
        """
        result = {}
        for subject in sorted(set(self.subjects)):
            values = [v for v, s in zip(self, self.subjects) if s == subject and v is not None]
            result[subject] = float(np.mean(values)) if values else None
        return result


def draw_trial_latencies(rng, mean, std, trials, paired=True):
    """
    Latencies of one subject's trials from a normal(mean, std) truncated at 3 std and floored at 0.

    :param rng: a numpy.random.Generator
    :param mean: seconds
    :param std: seconds
    :param trials: number of latencies
    :param paired: draw antithetic pairs mean + std z, mean - std z
    :return: list of seconds
    """
    if not paired or std <= 0:
        return [draw_latency(rng, mean, std) for _ in range(trials)]
    latencies = []
    while len(latencies) < trials:
        z = truncated_standard_normal(rng)
        latencies.append(max(0.0, mean + std * z))
        latencies.append(max(0.0, mean - std * z))
    return latencies[:trials]


def trial_seed(seed, subject, trial):
    return int(gl.make_rng(seed, TRIAL_STREAM, subject, trial).integers(0, 2 ** 63))


def _run_trial(scenario):
    stopwatch = Stopwatch(scenario.get_params().get_v_intent())
    run_scenario(scenario, stopwatch)
    return stopwatch.elapsed(scenario.get_dt())


def measure_reaction_time(scenario, trials, subjects=1, paired=True, parallel=False, server_num=1):
    """
    Simulated stopwatch protocol: every trial runs the scenario with one latency of the hand's distribution
    and measures the time from entering the field to the first intentional hand movement.

    :param scenario: a Scenario with a reactive, haptic-triggered hand
    :param trials: trials per subject
    :param subjects: number of simulated subjects, each with its own latency stream
    :param paired: antithetic latency pairs per subject
    :param parallel: run trials on a process pool
    :param server_num: pool size when parallel
    :return: a ReactionTimes
    """
    hand = scenario.get_hand()
    if not hand.is_reactive() or hand.get_trigger() != TRIGGER_HAPTIC:
        raise RejectedInputError('reaction_time.py: the reaction-time protocol needs a reactive hand '
                                 'with a haptic trigger')
    if trials < 1 or subjects < 1:
        raise RejectedInputError('reaction_time.py: trials >= 1 and subjects >= 1 required '
                                 '(trials=%r, subjects=%r)' % (trials, subjects))
    seed = scenario.get_seed()
    jobs = []
    latencies = []
    owners = []
    for subject in range(subjects):
        rng = gl.make_rng(seed, LATENCY_STREAM, subject)
        drawn = draw_trial_latencies(rng, hand.get_latency(), hand.get_latency_std(), trials, paired)
        for trial, latency in enumerate(drawn):
            fixed = hand.copy(latency=latency, latency_std=0.0)
            label = '%s/subject-%d/trial-%d' % (scenario.get_label() or 'react-time', subject, trial)
            jobs.append(scenario.copy(hand=fixed, seed=trial_seed(seed, subject, trial), label=label))
            latencies.append(latency)
            owners.append(subject)
    if parallel and server_num > 1:
        with Pool(server_num) as pool:
            values = pool.map(_run_trial, jobs)
    else:
        values = [_run_trial(job) for job in jobs]
    result = ReactionTimes(values, latencies, owners)
    if result.all_missing:
        ToolFunction.warn('reaction_time.py: no trial measured a reaction, the haptic field was never '
                          'entered or the hand never moved')
    elif result.missing_count():
        ToolFunction.warn('reaction_time.py: %d of %d trials missing' % (result.missing_count(), len(result)))
    return result

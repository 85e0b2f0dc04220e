"""
This module contains the class ExpSim, which provides an experiment interface for users.

Author:
    Yu-Ren Liu

Updated by:
    hpfssm developers
"""

import numpy as np

from hpfssm.io.report import build_report, reaction_report
from hpfssm.presets import CONDITION_V, CONDITION_VH, exp2_scenario
from hpfssm.simulation.assembly import run_assembly_experiment
from hpfssm.simulation.reaction_time import measure_reaction_time
from hpfssm.utils.tool_function import ToolFunction


class ExpSim:
    """
    The experiment entrance of the simulation.
    """

    def __init__(self):
        return

    @staticmethod
    def reaction_time(scenario, trials=10, subjects=10, paired=True, parallel=False, server_num=1):
        """
        Reaction-time protocol over simulated subjects.

        :param scenario: a Scenario with a reactive, haptic-triggered hand
        :param trials: trials per subject
        :param subjects: number of subjects
        :param paired: antithetic latency pairs
        :param parallel: run trials on a process pool
        :param server_num: pool size
        :return: (ReactionTimes, Report)
        """
        times = measure_reaction_time(scenario, trials, subjects, paired, parallel, server_num)
        measured = times.measured()
        if measured:
            ExpSim.result_analysis(measured, 'reaction time [s]')
        return times, reaction_report(times)

    @staticmethod
    def assembly_comparison(subjects=5, seed=0, duration=None, parallel=False, server_num=1):
        """
        Run the assembly task under both conditions and compare them.

        :param subjects: subjects per condition
        :param seed: experiment seed
        :param duration: seconds per run, the preset's if None
        :param parallel: run subjects on a process pool
        :param server_num: pool size
        :return: (dict condition -> list of Trace, Report)
        """
        traces = {}
        for condition in (CONDITION_V, CONDITION_VH):
            scenario = exp2_scenario(condition)
            if duration is not None:
                scenario = scenario.copy(duration=duration)
            traces[condition] = run_assembly_experiment(condition, subjects, seed, scenario, parallel, server_num)
            ExpSim.result_analysis([float(np.min(t.distances())) for t in traces[condition]],
                                   '%s min distance [m]' % condition)
        report = build_report(traces[CONDITION_V] + traces[CONDITION_VH], anova=subjects >= 2,
                              baseline=CONDITION_V)
        return traces, report

    @staticmethod
    def result_analysis(results, label):
        """
        Get mean value and standard deviation of results.

        :param results: a list of results
        :param label: name of the results used in the log
        :return: mean value and standard deviation
        """
        mean_r = np.mean(results, dtype=np.float64)
        std_r = np.std(results, ddof=1, dtype=np.float64) if len(results) > 1 else 0.0
        ToolFunction.log('%s: %s +- %s' % (label, mean_r, std_r))
        return mean_r, std_r

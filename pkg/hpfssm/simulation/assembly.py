"""
This module contains the assembly experiment: one run of the parts-supply task per simulated subject
under the visual (V) or visual and haptic (VH) condition.

Author:
    hpfssm developers
"""

from multiprocessing import Pool

from hpfssm.presets import CONDITIONS, exp2_scenario
from hpfssm.simulation.engine import run_scenario
from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.hpf_global import gl
from hpfssm.utils.tool_function import ToolFunction

SUBJECT_STREAM = 4


def subject_seed(seed, condition, subject):
    return int(gl.make_rng(seed, SUBJECT_STREAM, CONDITIONS.index(condition), subject).integers(0, 2 ** 63))


def subject_scenarios(condition, subjects, seed, scenario=None):
    """
    The per-subject scenarios of one condition.

    :param condition: 'v' or 'vh'
    :param subjects: number of subjects
    :param seed: experiment seed
    :param scenario: the condition's scenario, the built-in preset if None
    :return: list of Scenario
    """
    condition = str(condition).lower()
    if condition not in CONDITIONS:
        raise RejectedInputError('assembly.py: condition must be one of %s, got %r' % (CONDITIONS, condition))
    if subjects < 1:
        raise RejectedInputError('assembly.py: subjects >= 1 required (subjects=%r)' % (subjects,))
    if scenario is None:
        scenario = exp2_scenario(condition)
    return [scenario.copy(seed=subject_seed(seed, condition, s), label=condition) for s in range(subjects)]


def run_assembly_experiment(condition, subjects, seed, scenario=None, parallel=False, server_num=1):
    """
    Run the assembly task once per subject.

    :param condition: 'v' or 'vh'
    :param subjects: number of subjects
    :param seed: experiment seed; subject runs derive their seeds from it
    :param scenario: the condition's scenario, the built-in preset if None
    :param parallel: run subjects on a process pool
    :param server_num: pool size when parallel
    :return: list of Trace, one per subject, labelled with the condition
    """
    scenarios = subject_scenarios(condition, subjects, seed, scenario)
    if parallel and server_num > 1:
        with Pool(server_num) as pool:
            traces = pool.map(run_scenario, scenarios)
    else:
        traces = [run_scenario(sc) for sc in scenarios]
    ToolFunction.log('assembly.py: condition %s, %d subjects done' % (str(condition).lower(), len(traces)))
    return traces

"""
This module contains the built-in scenarios: the reaction-time setup and the two conditions of the
assembly task.

Author:
    hpfssm developers
"""

from hpfssm.parameter import RESUME_DISTANCE, SafetyParams
from hpfssm.scenario import (HAND_REACTIVE, TRIGGER_HAPTIC, TRIGGER_VISUAL, HandModel, RobotScript, Scenario,
                             VisualTrigger)
from hpfssm.utils.errors import RejectedInputError

CONDITION_V = 'v'
CONDITION_VH = 'vh'
CONDITIONS = (CONDITION_V, CONDITION_VH)

# hand work position and the parts bin; the drop point lies on the line between them
WORK_POSITION = (0.6, 0.0, 0.0)
PARTS_BIN = (0.6, 0.9, 0.3)
DROP_POINT = (0.6, 0.15, 0.05)

MEAN_REACTION_TIME = 0.3243
REACTION_TIME_STD = 0.0715


def exp1_scenario(seed=0):
    """
    The robot approaches a resting hand slowly and head-on; the field has a constant 0.4 m radius.
    """
    params = SafetyParams(d_ps=0.2, d_hmax=1.3, t_r=MEAN_REACTION_TIME, d_pdd=0.4, d_ha_fixed=0.4)
    robot = RobotScript([(0.6, 0.5, 0.0), (0.6, 0.0, 0.0)], speed=0.1)
    hand = HandModel(kind=HAND_REACTIVE, position=(0.6, 0.0, 0.0), latency=MEAN_REACTION_TIME,
                     latency_std=REACTION_TIME_STD, retreat_speed=0.5, retreat_accel=20.0, retreat_distance=0.3,
                     trigger=TRIGGER_HAPTIC, jitter_amplitude=0.05)
    return Scenario(robot, hand, params, dt=0.001, duration=4.0, seed=seed, label='exp1')


def exp2_scenario(condition=CONDITION_VH, seed=0, duration=30.0):
    """
    Parts supply for manual assembly: the robot shuttles between the bin and a drop point next to the
    working hand. 'vh' hands react to the haptic stimulus, 'v' hands only to what they see.

    :param condition: 'v' or 'vh'
    :param seed: integer seed
    :param duration: seconds
    :return: a Scenario
    """
    if condition not in CONDITIONS:
        raise RejectedInputError('presets.py: condition must be one of %s, got %r' % (CONDITIONS, condition))
    params = SafetyParams(d_ps=0.25, d_hmax=1.3, k_r=2.5, k_h=1.0, t_r=MEAN_REACTION_TIME, d_pdd=0.4,
                          resume_policy=RESUME_DISTANCE, resume_margin=0.05)
    robot = RobotScript([PARTS_BIN, DROP_POINT], speed=0.25, cyclic=True, dwell=1.0)
    common = dict(kind=HAND_REACTIVE, position=WORK_POSITION, retreat_speed=0.6, retreat_accel=5.0,
                  retreat_distance=0.35, return_speed=0.3, return_clearance=0.5, jitter_amplitude=0.05)
    if condition == CONDITION_VH:
        hand = HandModel(latency=MEAN_REACTION_TIME, latency_std=REACTION_TIME_STD, trigger=TRIGGER_HAPTIC,
                         **common)
    else:
        hand = HandModel(trigger=TRIGGER_VISUAL, visual=VisualTrigger(threshold=0.45, latency_mean=0.7,
                                                                      latency_std=0.3, miss_probability=0.3,
                                                                      glance_period=0.2), **common)
    return Scenario(robot, hand, params, dt=0.001, duration=duration, seed=seed, label=condition)

"""
This module contains the class SafetyParams, which includes all constants of speed and separation
monitoring with a haptic potential field, and the default stopping criterion of a simulation run.

Author:
    Yu-Ren Liu, Xiong-Hui Chen, Yang Yu

Updated by:
    hpfssm developers
"""

import math

from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.tool_function import ToolFunction

RESUME_LATCHED = 'latched'
RESUME_DISTANCE = 'distance'


class DefaultStoppingCriterion:
    """
    This class is the default StoppingCriterion class, which is used by run_scenario and should implement
    check(self, context) member function.
    """
    def check(self, context):
        """
        This function is invoked after every simulation step.
        The run stops early when this function returns True. In this default, the run is never stopped early.

        :param context: the running SimulationEngine. Useful accessors:
            context.get_steps(): the TraceSteps recorded so far
            context.get_step_index(): index of the step just recorded
            context.get_hand_agent() / context.get_robot_agent(): the agents
        :return: bool object.
        """
        return False


class SafetyParams:
    """
    This class contains all constants used by the haptic potential field and the safety monitor.
    """

    def __init__(self, d_ps=0.25, d_hmax=1.3, k_r=1.0, k_h=1.0, t_r=0.3243, d_pdd=0.4, v_intent=0.1,
                 hysteresis=0.02, resume_policy=RESUME_LATCHED, resume_margin=0.05, d_ha_fixed=None):
        """
        Initialization.

        :param d_ps: protective separation distance, meters
        :param d_hmax: maximum haptic activation distance, meters. 1.3 m is the reach of a UR10.
        :param k_r: weight of the robot velocity in the weighted relative velocity
        :param k_h: weight of the hand velocity in the weighted relative velocity
        :param t_r: operator reaction time to the haptic stimulus, seconds
        :param d_pdd: potentially dangerous distance, meters. Used by metrics only.
        :param v_intent: hand speed above which a hand movement is intentional, meters/second
        :param hysteresis: extra distance above d_ha required to switch the stimulus off, meters
        :param resume_policy:
            'latched' keeps the robot stopped for the rest of the run,
            'distance' resumes once the distance exceeds d_ps + resume_margin
        :param resume_margin: meters, used by the 'distance' resume policy
        :param d_ha_fixed: if not None, the field has this constant radius instead of min(d_hmax, d_ps + r_h)
        """
        self.__d_ps = float(d_ps)
        self.__d_hmax = float(d_hmax)
        self.__k_r = float(k_r)
        self.__k_h = float(k_h)
        self.__t_r = float(t_r)
        self.__d_pdd = float(d_pdd)
        self.__v_intent = float(v_intent)
        self.__hysteresis = float(hysteresis)
        self.__resume_policy = resume_policy
        self.__resume_margin = float(resume_margin)
        self.__d_ha_fixed = None if d_ha_fixed is None else float(d_ha_fixed)
        self.check()

    def check(self):
        """
        Validate every invariant.

        :return: no return value, raises RejectedInputError naming the first violated invariant
        """
        values = [self.__d_ps, self.__d_hmax, self.__k_r, self.__k_h, self.__t_r, self.__d_pdd,
                  self.__v_intent, self.__hysteresis, self.__resume_margin]
        if not all(math.isfinite(v) for v in values):
            self._reject('all safety parameters are finite')
        if not 0 < self.__d_ps <= self.__d_hmax:
            self._reject('0 < d_ps <= d_hmax (d_ps=%r, d_hmax=%r)' % (self.__d_ps, self.__d_hmax))
        if self.__k_r < 0 or self.__k_h < 0:
            self._reject('k_r >= 0 and k_h >= 0 (k_r=%r, k_h=%r)' % (self.__k_r, self.__k_h))
        if self.__t_r <= 0:
            self._reject('t_r > 0 (t_r=%r)' % self.__t_r)
        if self.__d_pdd < self.__d_ps:
            self._reject('d_pdd >= d_ps (d_pdd=%r, d_ps=%r)' % (self.__d_pdd, self.__d_ps))
        if self.__v_intent <= 0:
            self._reject('v_intent > 0 (v_intent=%r)' % self.__v_intent)
        if self.__hysteresis < 0:
            self._reject('hysteresis >= 0 (hysteresis=%r)' % self.__hysteresis)
        if self.__resume_policy not in (RESUME_LATCHED, RESUME_DISTANCE):
            self._reject("resume_policy in ('latched', 'distance') (resume_policy=%r)" % (self.__resume_policy,))
        if self.__resume_margin < 0:
            self._reject('resume_margin >= 0 (resume_margin=%r)' % self.__resume_margin)
        if self.__d_ha_fixed is not None and not self.__d_ps <= self.__d_ha_fixed <= self.__d_hmax:
            self._reject('d_ps <= d_ha_fixed <= d_hmax (d_ha_fixed=%r)' % self.__d_ha_fixed)

    @staticmethod
    def _reject(invariant):
        ToolFunction.log('parameter.py: invariant violated: ' + invariant)
        raise RejectedInputError('invariant violated: ' + invariant)

    def copy(self, **changes):
        """
        Copy this instance, replacing the given fields.

        :param changes: keyword arguments of the constructor
        :return: a new SafetyParams
        """
        fields = self.to_dict()
        fields.update(changes)
        return SafetyParams(**fields)

    def to_dict(self):
        return {'d_ps': self.__d_ps, 'd_hmax': self.__d_hmax, 'k_r': self.__k_r, 'k_h': self.__k_h,
                't_r': self.__t_r, 'd_pdd': self.__d_pdd, 'v_intent': self.__v_intent,
                'hysteresis': self.__hysteresis, 'resume_policy': self.__resume_policy,
                'resume_margin': self.__resume_margin, 'd_ha_fixed': self.__d_ha_fixed}

    def __eq__(self, other):
        return isinstance(other, SafetyParams) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'SafetyParams(%s)' % ', '.join('%s=%r' % kv for kv in sorted(self.to_dict().items()))

    def get_d_ps(self):
        return self.__d_ps

    def get_d_hmax(self):
        return self.__d_hmax

    def get_k_r(self):
        return self.__k_r

    def get_k_h(self):
        return self.__k_h

    def get_t_r(self):
        return self.__t_r

    def set_t_r(self, t_r):
        self.__t_r = float(t_r)
        self.check()

    def get_d_pdd(self):
        return self.__d_pdd

    def get_v_intent(self):
        return self.__v_intent

    def get_hysteresis(self):
        return self.__hysteresis

    def get_resume_policy(self):
        return self.__resume_policy

    def get_resume_margin(self):
        return self.__resume_margin

    def get_d_ha_fixed(self):
        return self.__d_ha_fixed

    def resumes(self):
        return self.__resume_policy == RESUME_DISTANCE

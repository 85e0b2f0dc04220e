"""
This module contains the statistics reported over traces: minimum distance, time inside a distance band,
mean and sample standard deviation, one-way ANOVA and improvement ratios.

Author:
    hpfssm developers
"""

import math

import numpy as np
from scipy.special import betainc

from hpfssm.parameter import SafetyParams
from hpfssm.utils.errors import RejectedInputError, UndefinedStatisticError
from hpfssm.utils.hpf_global import pos_inf


def _distances(trace):
    if hasattr(trace, 'distances'):
        d = trace.distances()
    else:
        d = np.asarray(trace, dtype=float)
    if d.size == 0:
        raise RejectedInputError('metrics.py: empty trace')
    return d


def _float_or_text(value):
    if math.isinf(value):
        return 'inf'
    return value


def min_distance(trace):
    """
    Minimum TCP-hand distance over the samples.

    :param trace: a Trace, or a sequence of distances
    :return: meters
    """
    return float(np.min(_distances(trace)))


def time_inside(trace, threshold, dt=None):
    """
    Time spent at a distance <= threshold, counted as dt per sample.

    :param trace: a Trace, or a sequence of distances together with dt
    :param threshold: meters, > 0
    :param dt: seconds per sample, taken from the trace if None
    :return: seconds
    """
    if not threshold > 0:
        raise RejectedInputError('metrics.py: threshold > 0 required, got %r' % (threshold,))
    if dt is None:
        dt = trace.get_dt()
    d = _distances(trace)
    return float(np.count_nonzero(d <= threshold)) * dt


def summary(values):
    """
    Mean and sample standard deviation.

    :param values: at least 2 numbers
    :return: (mean, std with n - 1 denominator)
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        raise UndefinedStatisticError('metrics.py: the sample standard deviation needs >= 2 values, got %d'
                                      % values.size)
    return float(np.mean(values)), float(np.std(values, ddof=1))


class AnovaResult:
    """
    Outcome of a one-way analysis of variance.
    """

    def __init__(self, f_value, df_between, df_within, p_value):
        self.f_value = float(f_value)
        self.df_between = int(df_between)
        self.df_within = int(df_within)
        self.p_value = float(p_value)

    def is_significant(self, alpha=0.05):
        return self.p_value < alpha

    def to_dict(self):
        return {'f_value': _float_or_text(self.f_value), 'df_between': self.df_between,
                'df_within': self.df_within, 'p_value': self.p_value}

    @staticmethod
    def from_dict(d):
        return AnovaResult(float(d['f_value']), d['df_between'], d['df_within'], d['p_value'])

    def __eq__(self, other):
        return isinstance(other, AnovaResult) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'F(%d, %d) = %.4f, p = %.4f' % (self.df_between, self.df_within, self.f_value, self.p_value)


def f_survival(f_value, df_between, df_within):
    """
    Upper tail P(F >= f_value) of the F distribution, through the regularized incomplete beta function.

    :param f_value: >= 0, may be +inf
    :param df_between: numerator degrees of freedom, >= 1
    :param df_within: denominator degrees of freedom, >= 1
    :return: p-value in [0, 1]
    """
    if df_between < 1 or df_within < 1:
        raise RejectedInputError('metrics.py: degrees of freedom >= 1 required (%r, %r)' % (df_between, df_within))
    if not f_value >= 0:
        raise RejectedInputError('metrics.py: F >= 0 required, got %r' % (f_value,))
    if math.isinf(f_value):
        return 0.0
    p_value = float(betainc(df_within / 2.0, df_between / 2.0, df_within / (df_within + df_between * f_value)))
    return min(1.0, max(0.0, p_value))


def oneway_anova(groups):
    """
    One-way between-groups ANOVA.

    :param groups: list of at least 2 groups, each a list of at least 2 values
    :return: an AnovaResult; F is +inf with p = 0 when every group is constant but the means differ
    """
    if len(groups) < 2:
        raise RejectedInputError('metrics.py: ANOVA needs >= 2 groups, got %d' % len(groups))
    arrays = [np.asarray(g, dtype=np.float64) for g in groups]
    if any(a.size < 2 for a in arrays):
        raise RejectedInputError('metrics.py: every ANOVA group needs >= 2 values')
    values = np.concatenate(arrays)
    if not np.all(np.isfinite(values)):
        raise RejectedInputError('metrics.py: ANOVA values must be finite')
    k = len(arrays)
    n = values.size
    grand = np.mean(values)
    ss_between = float(sum(a.size * (np.mean(a) - grand) ** 2 for a in arrays))
    ss_within = float(sum(np.sum((a - np.mean(a)) ** 2) for a in arrays))
    df_between = k - 1
    df_within = n - k
    # round-off scale of the sums of squares
    scale = np.finfo(np.float64).eps * max(float(np.sum(values ** 2)), np.finfo(np.float64).tiny)
    if ss_within <= scale:
        if ss_between <= scale:
            raise UndefinedStatisticError('metrics.py: F is undefined, all values are identical')
        return AnovaResult(pos_inf, df_between, df_within, 0.0)
    f_value = (ss_between / df_between) / (ss_within / df_within)
    return AnovaResult(f_value, df_between, df_within, f_survival(f_value, df_between, df_within))


def improvement_ratio(baseline, improved):
    """
    Ratio form, for times: baseline / improved * 100.

    :return: percent
    """
    if improved == 0:
        raise RejectedInputError('metrics.py: improvement_ratio needs improved != 0')
    return baseline / improved * 100.0


def improvement_difference(baseline, improved):
    """
    Difference form, for distances: (improved - baseline) / baseline * 100.

    :return: percent
    """
    if baseline == 0:
        raise RejectedInputError('metrics.py: improvement_difference needs baseline != 0')
    return (improved - baseline) / baseline * 100.0


class TrialStats:
    """
    Per-trace safety statistics.
    """

    def __init__(self, min_distance, time_in_pdd, psd_violations, reaction_times=None, label='', duration=None):
        """
        :param min_distance: meters
        :param time_in_pdd: seconds spent at d <= d_pdd
        :param psd_violations: samples with d <= d_ps
        :param reaction_times: optional list of seconds
        :param label: label of the trace
        :param duration: seconds covered by the trace
        """
        self.min_distance = float(min_distance)
        self.time_in_pdd = float(time_in_pdd)
        self.psd_violations = int(psd_violations)
        self.reaction_times = None if reaction_times is None else list(reaction_times)
        self.label = label
        self.duration = None if duration is None else float(duration)

    @staticmethod
    def from_trace(trace, params=None, reaction_times=None):
        """
        :param trace: a non-empty Trace
        :param params: SafetyParams giving d_ps and d_pdd, those of the producing scenario if None
        :param reaction_times: optional list of seconds
        :return: a TrialStats
        """
        if params is None:
            scenario = trace.get_scenario()
            params = SafetyParams(**scenario['params']) if scenario else SafetyParams()
        d = _distances(trace)
        return TrialStats(float(np.min(d)), time_inside(trace, params.get_d_pdd()),
                          int(np.count_nonzero(d <= params.get_d_ps())), reaction_times, trace.get_label(),
                          trace.get_duration())

    def to_dict(self):
        return {'label': self.label, 'min_distance': self.min_distance, 'time_in_pdd': self.time_in_pdd,
                'psd_violations': self.psd_violations, 'reaction_times': self.reaction_times,
                'duration': self.duration}

    @staticmethod
    def from_dict(d):
        return TrialStats(d['min_distance'], d['time_in_pdd'], d['psd_violations'], d.get('reaction_times'),
                          d.get('label', ''), d.get('duration'))

    def __eq__(self, other):
        return isinstance(other, TrialStats) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'TrialStats(%r, min_distance=%.4f, time_in_pdd=%.4f, psd_violations=%d)' % (
            self.label, self.min_distance, self.time_in_pdd, self.psd_violations)

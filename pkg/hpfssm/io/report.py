"""
This module contains the class Report, the JSON result document of an experiment, and the functions that
build it from traces and reaction times.

Author:
    hpfssm developers
"""

import json

from hpfssm.metrics import (AnovaResult, TrialStats, improvement_difference, improvement_ratio, oneway_anova,
                            summary)
from hpfssm.utils.errors import HpfError, OutputError, RejectedInputError, StreamError
from hpfssm.utils.tool_function import ToolFunction

REPORT_VERSION = 1
METRICS = ('min_distance', 'time_in_pdd')


class Report:
    """
    Per-trace statistics, per-condition aggregates, ANOVA results, improvement ratios, reaction-time
    summary and replay outcome. Sections that do not apply are None.
    """

    def __init__(self, trials=None, conditions=None, anova=None, improvements=None, reaction=None, replay=None):
        """
        :param trials: list of TrialStats
        :param conditions: dict label -> aggregate dict
        :param anova: dict metric name -> AnovaResult or None
        :param improvements: dict with the baseline and improved labels and both percentages
        :param reaction: dict summarising measured reaction times
        :param replay: dict with matches_recorded, first_mismatch and the trace fingerprint
        """
        self.trials = [] if trials is None else list(trials)
        self.conditions = conditions
        self.anova = anova
        self.improvements = improvements
        self.reaction = reaction
        self.replay = replay

    @property
    def matches_recorded(self):
        return None if self.replay is None else self.replay['matches_recorded']

    @property
    def first_mismatch(self):
        return None if self.replay is None else self.replay['first_mismatch']

    def to_dict(self):
        anova = None
        if self.anova is not None:
            anova = {k: (None if v is None else v.to_dict()) for k, v in self.anova.items()}
        return {'version': REPORT_VERSION, 'trials': [t.to_dict() for t in self.trials],
                'conditions': self.conditions, 'anova': anova, 'improvements': self.improvements,
                'reaction': self.reaction, 'replay': self.replay}

    @staticmethod
    def from_dict(d):
        if d.get('version') != REPORT_VERSION:
            raise RejectedInputError('report.py: unsupported report version %r' % (d.get('version'),))
        anova = d.get('anova')
        if anova is not None:
            anova = {k: (None if v is None else AnovaResult.from_dict(v)) for k, v in anova.items()}
        return Report([TrialStats.from_dict(t) for t in d.get('trials', [])], d.get('conditions'), anova,
                      d.get('improvements'), d.get('reaction'), d.get('replay'))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    def save(self, path):
        try:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(self.to_json())
        except OSError as e:
            raise OutputError('report.py: cannot write %s: %s' % (path, e))

    @staticmethod
    def load(path):
        with open(path, 'r', encoding='utf-8') as f:
            try:
                d = json.load(f)
            except ValueError as e:
                raise StreamError('report.py: %s is not a report: %s' % (path, e))
        return Report.from_dict(d)

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_dict() == other.to_dict()

    def print_report(self):
        for label, aggregate in (self.conditions or {}).items():
            for metric in METRICS:
                ToolFunction.log('%s %s: %s +- %s' % (label, metric, aggregate[metric]['mean'],
                                                      aggregate[metric]['std']))
        for metric, result in (self.anova or {}).items():
            if result is not None:
                ToolFunction.log('%s ANOVA: %r%s' % (metric, result,
                                                     ', significant' if result.is_significant() else ''))
        if self.improvements:
            ToolFunction.log('improvement of %s over %s: min distance %s %%, time in PDD ratio %s %%'
                             % (self.improvements['improved'], self.improvements['baseline'],
                                self.improvements['min_distance_percent'],
                                self.improvements['time_in_pdd_ratio_percent']))
        if self.reaction:
            ToolFunction.log('reaction time: %s +- %s s (fastest %s s, slowest %s s, %d missing)'
                             % (self.reaction['mean'], self.reaction['std'], self.reaction['fastest'],
                                self.reaction['slowest'], self.reaction['missing']))


def _aggregate(values):
    if len(values) >= 2:
        mean, std = summary(values)
    else:
        mean, std = float(values[0]), None
    return {'mean': mean, 'std': std}


def group_trials(trials):
    """
    :param trials: list of TrialStats
    :return: dict label -> list of TrialStats, in order of first appearance
    """
    groups = {}
    for t in trials:
        groups.setdefault(t.label, []).append(t)
    return groups


def build_report(traces, params=None, anova=False, baseline=None):
    """
    Score traces and aggregate them per condition (trace label).

    :param traces: list of Trace
    :param params: SafetyParams to score with, those recorded in each trace if None
    :param anova: compare the conditions with a one-way ANOVA on every metric
    :param baseline: label of the baseline condition for improvement ratios; 'v' if present, else the first
    :return: a Report
    """
    if not traces:
        raise RejectedInputError('report.py: no traces to report on')
    trials = [TrialStats.from_trace(trace, params) for trace in traces]
    groups = group_trials(trials)
    conditions = {}
    for label, members in groups.items():
        conditions[label] = {'n': len(members),
                             'psd_violations': sum(t.psd_violations for t in members)}
        for metric in METRICS:
            conditions[label][metric] = _aggregate([getattr(t, metric) for t in members])
    report = Report(trials, conditions)
    if anova:
        report.anova = {}
        for metric in METRICS:
            try:
                report.anova[metric] = oneway_anova([[getattr(t, metric) for t in g] for g in groups.values()])
            except HpfError as e:
                ToolFunction.warn('report.py: no ANOVA for %s: %s' % (metric, e))
                report.anova[metric] = None
    if len(groups) == 2:
        labels = list(groups)
        if baseline is None:
            baseline = 'v' if 'v' in labels else labels[0]
        if baseline in labels:
            improved = labels[1 - labels.index(baseline)]
            report.improvements = _improvements(conditions, baseline, improved)
    report.print_report()
    return report


def _improvements(conditions, baseline, improved):
    result = {'baseline': baseline, 'improved': improved}
    try:
        result['min_distance_percent'] = improvement_difference(conditions[baseline]['min_distance']['mean'],
                                                                conditions[improved]['min_distance']['mean'])
    except RejectedInputError:
        result['min_distance_percent'] = None
    try:
        result['time_in_pdd_ratio_percent'] = improvement_ratio(conditions[baseline]['time_in_pdd']['mean'],
                                                                conditions[improved]['time_in_pdd']['mean'])
    except RejectedInputError:
        result['time_in_pdd_ratio_percent'] = None
    return result


def reaction_report(times):
    """
    Summarise measured reaction times.

    :param times: a ReactionTimes
    :return: a Report with the reaction section filled
    """
    measured = times.measured()
    if len(measured) >= 2:
        mean, std = summary(measured)
    elif measured:
        mean, std = measured[0], None
    else:
        mean, std = None, None
    reaction = {'values': list(times), 'latencies': times.latencies, 'subjects': times.subjects,
                'mean': mean, 'std': std, 'fastest': times.fastest(), 'slowest': times.slowest(),
                'per_subject': [[s, m] for s, m in times.per_subject_means().items()],
                'missing': times.missing_count(), 'all_missing': times.all_missing}
    report = Report(reaction=reaction)
    report.print_report()
    return report

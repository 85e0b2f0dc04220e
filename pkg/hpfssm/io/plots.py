"""
This module writes SVG figures of traces and reports: distance and hand speed over time, distance overlays
of several runs and per-condition bar charts.

Author:
    hpfssm developers
"""

import os
import re

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from hpfssm.io.report import METRICS, Report  # noqa: E402
from hpfssm.parameter import SafetyParams  # noqa: E402
from hpfssm.trace import Trace  # noqa: E402
from hpfssm.utils.errors import OutputError, RejectedInputError  # noqa: E402
from hpfssm.utils.tool_function import ToolFunction  # noqa: E402

_UNITS = {'min_distance': 'minimum distance [m]', 'time_in_pdd': 'time in PDD [s]'}


def _params(trace):
    scenario = trace.get_scenario()
    return SafetyParams(**scenario['params']) if scenario else SafetyParams()


def _file_name(label, suffix):
    stem = re.sub(r'[^A-Za-z0-9_.-]+', '_', label or 'trace').strip('_') or 'trace'
    return '%s-%s.svg' % (stem, suffix)


def _save(fig, out_dir, name):
    path = os.path.join(out_dir, name)
    try:
        fig.savefig(path, format='svg')
    except OSError as e:
        raise OutputError('plots.py: cannot write %s: %s' % (path, e))
    finally:
        plt.close(fig)
    return path


def plot_trace(trace, out_dir):
    """
    Two panels: TCP-hand distance with the d_ps, d_ha and d_pdd lines on top, hand speed below.

    :return: path of the SVG file
    """
    params = _params(trace)
    t = trace.times()
    fig, (top, bottom) = plt.subplots(2, 1, sharex=True, figsize=(8, 6))
    top.plot(t, trace.distances(), color='tab:blue', label='distance')
    top.plot(t, trace.activation_distances(), color='tab:orange', linestyle=':', label='d_ha')
    top.axhline(params.get_d_ps(), color='tab:red', label='d_ps')
    top.axhline(params.get_d_pdd(), color='tab:red', linestyle='--', label='d_pdd')
    top.set_ylabel('distance [m]')
    top.legend(loc='upper right')
    bottom.plot(t, trace.hand_speeds(), color='tab:green', label='hand speed')
    bottom.axhline(params.get_v_intent(), color='gray', linestyle=':', label='v_intent')
    bottom.set_xlabel('time [s]')
    bottom.set_ylabel('speed [m/s]')
    bottom.legend(loc='upper right')
    fig.tight_layout()
    return _save(fig, out_dir, _file_name(trace.get_label(), 'distance-speed'))


def plot_overlay(traces, out_dir):
    """
    Distance of every trace over time, with the dashed d_pdd line.

    :return: path of the SVG file
    """
    params = _params(traces[0])
    fig, ax = plt.subplots(figsize=(8, 4))
    for trace in traces:
        ax.plot(trace.times(), trace.distances(), linewidth=0.8, label=trace.get_label() or None)
    ax.axhline(params.get_d_pdd(), color='tab:red', linestyle='--', label='PDD')
    ax.axhline(params.get_d_ps(), color='tab:red', linewidth=0.8, label='d_ps')
    ax.set_xlabel('time [s]')
    ax.set_ylabel('distance [m]')
    handles, labels = ax.get_legend_handles_labels()
    unique = dict(zip(labels, handles))
    ax.legend(unique.values(), unique.keys(), loc='upper right')
    fig.tight_layout()
    return _save(fig, out_dir, 'distance-overlay.svg')


def plot_report(report, out_dir):
    """
    Bar charts of the per-condition metrics, or a histogram of the reaction times.

    :return: list of paths
    """
    paths = []
    if report.conditions:
        labels = list(report.conditions)
        fig, axes = plt.subplots(1, len(METRICS), figsize=(4 * len(METRICS), 4))
        for ax, metric in zip(axes, METRICS):
            means = [report.conditions[c][metric]['mean'] for c in labels]
            stds = [report.conditions[c][metric]['std'] or 0.0 for c in labels]
            ax.bar(labels, means, yerr=stds, capsize=4, color='tab:blue')
            ax.set_ylabel(_UNITS[metric])
        fig.tight_layout()
        paths.append(_save(fig, out_dir, 'report-conditions.svg'))
    elif report.trials:
        fig, axes = plt.subplots(1, len(METRICS), figsize=(4 * len(METRICS), 4))
        names = [t.label or str(i) for i, t in enumerate(report.trials)]
        for ax, metric in zip(axes, METRICS):
            ax.bar(names, [getattr(t, metric) for t in report.trials], color='tab:blue')
            ax.set_ylabel(_UNITS[metric])
        fig.tight_layout()
        paths.append(_save(fig, out_dir, 'report-trials.svg'))
    if report.reaction and not report.reaction['all_missing']:
        values = [v for v in report.reaction['values'] if v is not None]
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.hist(values, bins=max(5, int(np.sqrt(len(values)))), color='tab:blue')
        ax.set_xlabel('reaction time [s]')
        ax.set_ylabel('trials')
        fig.tight_layout()
        paths.append(_save(fig, out_dir, 'report-reaction-times.svg'))
    if not paths:
        raise RejectedInputError('plots.py: the report has nothing to plot')
    return paths


def emit_plots(obj, out_dir):
    """
    Write the figures of a trace, a list of traces or a report.

    :param obj: a Trace, a list of Trace or a Report
    :param out_dir: output directory, created if needed
    :return: list of written paths
    """
    if isinstance(obj, Trace):
        traces = None
        if len(obj) == 0:
            raise RejectedInputError('plots.py: empty trace')
    elif isinstance(obj, Report):
        traces = None
    else:
        traces = list(obj)
        if not traces or any(not isinstance(t, Trace) or len(t) == 0 for t in traces):
            raise RejectedInputError('plots.py: expected non-empty traces')
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as e:
        raise OutputError('plots.py: cannot create %s: %s' % (out_dir, e))
    if isinstance(obj, Trace):
        paths = [plot_trace(obj, out_dir)]
    elif isinstance(obj, Report):
        paths = plot_report(obj, out_dir)
    elif len(traces) == 1:
        paths = [plot_trace(traces[0], out_dir)]
    else:
        paths = [plot_overlay(traces, out_dir)]
    ToolFunction.log('plots.py: wrote %s' % ', '.join(paths))
    return paths

"""
This module contains the command line interface.

    hpfssm simulate <scenario> [--seed N] [--out trace]
    hpfssm react-time <scenario> --trials N --subjects M
    hpfssm assembly --condition v|vh --subjects N
    hpfssm replay <trace>
    hpfssm report <traces...> [--anova]
    hpfssm plot <trace|report> [...]

Exit codes: 0 success, 1 invalid input, 2 input/output failure.

Author:
    hpfssm developers
"""

import argparse
import logging
import os
import sys

from hpfssm.exp_sim import ExpSim
from hpfssm.io.config import load_scenario
from hpfssm.io.plots import emit_plots
from hpfssm.io.report import Report, build_report
from hpfssm.io.trace_file import read_trace, replay, write_trace
from hpfssm.metrics import TrialStats
from hpfssm.presets import CONDITIONS, exp2_scenario
from hpfssm.simulation.assembly import run_assembly_experiment
from hpfssm.simulation.engine import run_scenario
from hpfssm.utils.errors import HpfError
from hpfssm.utils.tool_function import ToolFunction

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """
    argparse parser that reports usage errors with exit code 1.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write('%s: error: %s\n' % (self.prog, message))
        raise UsageError(message)


def _seeded(scenario, seed):
    return scenario if seed is None else scenario.copy(seed=seed)


def cmd_simulate(args):
    scenario = _seeded(load_scenario(args.scenario), args.seed)
    if args.duration is not None:
        scenario = scenario.copy(duration=args.duration)
    trace = run_scenario(scenario)
    out = args.out or '%s-%d.trace' % (scenario.get_label() or 'scenario', scenario.get_seed())
    write_trace(trace, out)
    stats = TrialStats.from_trace(trace)
    ToolFunction.log('simulate: %d steps, %s, wrote %s' % (len(trace), stats, out))
    return EXIT_OK


def cmd_react_time(args):
    scenario = _seeded(load_scenario(args.scenario), args.seed)
    _, report = ExpSim.reaction_time(scenario, args.trials, args.subjects, paired=not args.unpaired,
                                     parallel=args.workers > 1, server_num=args.workers)
    if args.out:
        report.save(args.out)
    return EXIT_OK


def cmd_assembly(args):
    scenario = exp2_scenario(args.condition)
    if args.duration is not None:
        scenario = scenario.copy(duration=args.duration)
    traces = run_assembly_experiment(args.condition, args.subjects, args.seed or 0, scenario,
                                     parallel=args.workers > 1, server_num=args.workers)
    os.makedirs(args.out_dir, exist_ok=True)
    for subject, trace in enumerate(traces):
        write_trace(trace, os.path.join(args.out_dir, '%s-subject-%d.trace' % (args.condition, subject)))
    report = build_report(traces)
    report.save(os.path.join(args.out_dir, '%s-report.json' % args.condition))
    return EXIT_OK


def cmd_replay(args):
    scenario_params = None
    if args.scenario:
        scenario_params = load_scenario(args.scenario).get_params()
    report = replay(args.trace, scenario_params)
    if args.out:
        report.save(args.out)
    ToolFunction.log('replay: %s, matches recording: %s' % (report.trials[0], report.matches_recorded))
    return EXIT_OK


def cmd_report(args):
    traces = [read_trace(path) for path in args.traces]
    report = build_report(traces, anova=args.anova, baseline=args.baseline)
    if args.out:
        report.save(args.out)
    else:
        sys.stdout.write(report.to_json())
    return EXIT_OK


def cmd_plot(args):
    if len(args.inputs) == 1 and args.inputs[0].endswith('.json'):
        emit_plots(Report.load(args.inputs[0]), args.out_dir)
    else:
        traces = [read_trace(path) for path in args.inputs]
        emit_plots(traces[0] if len(traces) == 1 else traces, args.out_dir)
    return EXIT_OK


def build_parser():
    parser = ArgumentParser(prog='hpfssm', description='Haptic potential field speed and separation monitoring '
                                                       'simulator')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more log output')
    parser.add_argument('-q', '--quiet', action='store_true', help='warnings and errors only')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=ArgumentParser)
    sub.required = True

    p = sub.add_parser('simulate', help='run one scenario and write its trace')
    p.add_argument('scenario', help='scenario file or preset name (exp1, exp2, exp2-v)')
    p.add_argument('--seed', type=int)
    p.add_argument('--duration', type=float, help='seconds, overrides the scenario')
    p.add_argument('--out', help='trace file, <label>-<seed>.trace by default')
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('react-time', help='reaction-time protocol')
    p.add_argument('scenario')
    p.add_argument('--trials', type=int, default=10)
    p.add_argument('--subjects', type=int, default=1)
    p.add_argument('--seed', type=int)
    p.add_argument('--unpaired', action='store_true', help='independent instead of antithetic latency draws')
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--out', help='report file')
    p.set_defaults(func=cmd_react_time)

    p = sub.add_parser('assembly', help='assembly task for one condition')
    p.add_argument('--condition', choices=CONDITIONS, required=True)
    p.add_argument('--subjects', type=int, default=5)
    p.add_argument('--seed', type=int)
    p.add_argument('--duration', type=float)
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--out-dir', default='.')
    p.set_defaults(func=cmd_assembly)

    p = sub.add_parser('replay', help='re-score a trace file through the monitor')
    p.add_argument('trace')
    p.add_argument('--scenario', help='take the safety parameters from this scenario')
    p.add_argument('--out', help='report file')
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser('report', help='aggregate trace files per condition')
    p.add_argument('traces', nargs='+')
    p.add_argument('--anova', action='store_true')
    p.add_argument('--baseline', help='baseline condition label')
    p.add_argument('--out', help='report file, stdout by default')
    p.set_defaults(func=cmd_report)

    p = sub.add_parser('plot', help='SVG figures of traces or a report')
    p.add_argument('inputs', nargs='+', metavar='trace|report')
    p.add_argument('--out-dir', default='.')
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    """
    Run the command line interface.

    :param argv: arguments without the program name, sys.argv[1:] if None
    :return: exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_INVALID
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK
    ToolFunction.set_verbosity(-1 if args.quiet else args.verbose)
    try:
        return args.func(args)
    except OSError as e:
        ToolFunction.log('error: %s' % e, level=logging.ERROR)
        return EXIT_IO
    except (HpfError, ValueError) as e:
        ToolFunction.log('error: %s' % e, level=logging.ERROR)
        return EXIT_INVALID

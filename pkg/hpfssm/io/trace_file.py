"""
This module reads and writes trace files and replays them through the monitor.

A trace file holds one JSON object per line. Line 0 is the header (record, version, fingerprint, dt, seed,
label, scenario); every following line is one step (record, t, tcp, tcp_v, hand, hand_v, d, d_ha, zone,
events). Records are 0-based line indices and strictly time-ordered, so a reader needs no lookahead.

Author:
    hpfssm developers
"""

import json

from hpfssm.metrics import TrialStats
from hpfssm.monitor import EventKind, MonitorEvent, SafetyMonitor, Zone
from hpfssm.parameter import SafetyParams
from hpfssm.pose import PoseSample
from hpfssm.scenario import fingerprint
from hpfssm.io.report import Report
from hpfssm.trace import Trace, TraceStep
from hpfssm.utils.errors import HpfError, OutputError, StreamError
from hpfssm.utils.tool_function import ToolFunction

TRACE_VERSION = 1
HEADER_FIELDS = ('record', 'version', 'fingerprint', 'dt', 'seed', 'label', 'scenario')
STEP_FIELDS = ('record', 't', 'tcp', 'tcp_v', 'hand', 'hand_v', 'd', 'd_ha', 'zone', 'events')


def _dumps(record):
    return json.dumps(record, sort_keys=True, separators=(',', ':'))


def header_record(trace):
    return {'record': 0, 'version': TRACE_VERSION, 'fingerprint': trace.get_fingerprint(),
            'dt': trace.get_dt(), 'seed': trace.get_seed(), 'label': trace.get_label(),
            'scenario': trace.get_scenario()}


def step_record(index, step):
    record = step.get_sample().to_dict()
    record.update({'record': index, 'd': step.get_d(), 'd_ha': step.get_d_ha(), 'zone': step.get_zone().value,
                   'events': [k.value for k in step.get_event_kinds()]})
    return record


def write_trace(trace, path):
    """
    Write a trace file. Identical traces give byte-identical files.

    :param trace: a Trace
    :param path: output file
    :return: no return value
    """
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(_dumps(header_record(trace)) + '\n')
            for k, step in enumerate(trace, start=1):
                f.write(_dumps(step_record(k, step)) + '\n')
    except OSError as e:
        raise OutputError('trace_file.py: cannot write %s: %s' % (path, e))


def iter_trace_records(path):
    """
    Stream the records of a trace file, checking each one as it is read.

    :param path: trace file
    :return: generator of (index, dict); the first one is the header
    """
    with open(path, 'r', encoding='utf-8', newline='') as f:
        last_t = None
        index = -1
        for index, line in enumerate(f):
            if not line.endswith('\n'):
                raise StreamError('truncated record', index)
            try:
                record = json.loads(line)
            except ValueError as e:
                raise StreamError('corrupt record: %s' % e, index)
            if not isinstance(record, dict):
                raise StreamError('a record must be a JSON object', index)
            fields = HEADER_FIELDS if index == 0 else STEP_FIELDS
            missing = [name for name in fields if name not in record]
            if missing:
                raise StreamError('missing fields %s' % ', '.join(missing), index)
            if record['record'] != index:
                raise StreamError('record number %r out of sequence' % (record['record'],), index)
            if index == 0:
                if record['version'] != TRACE_VERSION:
                    raise StreamError('unsupported trace version %r' % (record['version'],), index)
                scenario = record['scenario']
                if scenario is not None and fingerprint(scenario) != record['fingerprint']:
                    raise StreamError('header fingerprint does not match the recorded scenario', index)
            else:
                t = record['t']
                if not isinstance(t, (int, float)) or (last_t is not None and not t > last_t):
                    raise StreamError('timestamp %r does not follow %r' % (t, last_t), index)
                last_t = t
            yield index, record
        if index < 0:
            raise StreamError('empty trace file, header missing', 0)


def _step_from_record(index, record):
    try:
        t = record['t']
        sample = PoseSample(t, record['tcp'], record['tcp_v'], record['hand'], record['hand_v'])
        events = [MonitorEvent(t, EventKind(kind)) for kind in record['events']]
        return TraceStep(sample, Zone(record['zone']), record['d'], record['d_ha'], events)
    except (HpfError, ValueError, TypeError) as e:
        raise StreamError('bad step: %s' % e, index)


def read_trace(path):
    """
    Read a whole trace file.

    :param path: trace file
    :return: a Trace
    """
    header = None
    steps = []
    for index, record in iter_trace_records(path):
        if index == 0:
            header = record
        else:
            steps.append(_step_from_record(index, record))
    return Trace(steps, header['dt'], header['fingerprint'], header['label'], header['seed'], header['scenario'])


def replay(trace_path, params=None):
    """
    Feed the recorded samples back through a fresh monitor and re-score them.

    :param trace_path: trace file
    :param params: SafetyParams to re-score with, the recorded scenario's if None
    :return: a Report with the re-scored TrialStats and whether zones and events match the recorded ones
    """
    header = None
    monitor = None
    steps = []
    first_mismatch = None
    for index, record in iter_trace_records(trace_path):
        if index == 0:
            header = record
            if params is None:
                scenario = header['scenario']
                params = SafetyParams(**scenario['params']) if scenario else SafetyParams()
            monitor = SafetyMonitor(params)
            continue
        recorded = _step_from_record(index, record)
        try:
            zone, events = monitor.step(recorded.get_sample())
        except StreamError as e:
            raise StreamError(str(e), index)
        evaluation = monitor.get_state().last_evaluation
        step = TraceStep(recorded.get_sample(), zone, evaluation.d, evaluation.d_ha, events, evaluation)
        steps.append(step)
        if first_mismatch is None and (zone is not recorded.get_zone()
                                       or step.get_event_kinds() != recorded.get_event_kinds()):
            first_mismatch = index
    if not steps:
        raise StreamError('trace has no steps', 1)
    trace = Trace(steps, header['dt'], header['fingerprint'], header['label'], header['seed'], header['scenario'])
    stats = TrialStats.from_trace(trace, params)
    if first_mismatch is not None:
        ToolFunction.log('trace_file.py: replay of %s differs from the recording at record %d'
                         % (trace_path, first_mismatch))
    return Report([stats], replay={'matches_recorded': first_mismatch is None, 'first_mismatch': first_mismatch,
                                   'fingerprint': header['fingerprint']})

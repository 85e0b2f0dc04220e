"""
This module reads and writes scenario files: sectioned key-value text with the unit in every key name,
e.g.

    [safety]
    d_ps_m = 0.25
    t_r_s = 0.3243

    [robot]
    waypoints_m = 0.6 0.9 0.3; 0.6 0.15 0.05
    speed_mps = 0.25

Built-in presets are resolved by name wherever a scenario path is accepted.

Author:
    hpfssm developers
"""

import configparser
import io
import os
import re

from hpfssm.parameter import SafetyParams
from hpfssm.presets import CONDITION_V, CONDITION_VH, exp1_scenario, exp2_scenario
from hpfssm.scenario import HandModel, RobotScript, Scenario, VisualTrigger
from hpfssm.utils.errors import ConfigParseError, OutputError
from hpfssm.utils.tool_function import ToolFunction

PRESETS = {
    'exp1': exp1_scenario,
    'exp2': lambda seed=0: exp2_scenario(CONDITION_VH, seed),
    'exp2-vh': lambda seed=0: exp2_scenario(CONDITION_VH, seed),
    'exp2-v': lambda seed=0: exp2_scenario(CONDITION_V, seed),
}

_FLOAT = 'float'
_OPTIONAL_FLOAT = 'optional float'
_INT = 'int'
_BOOL = 'bool'
_TEXT = 'text'
_POINT = 'point'
_POINTS = 'points'

# section -> key -> (constructor argument, value type)
SCHEMA = {
    'scenario': {
        'label': ('label', _TEXT),
    },
    'simulation': {
        'dt_s': ('dt', _FLOAT),
        'duration_s': ('duration', _FLOAT),
        'seed': ('seed', _INT),
        'tcp_delay_s': ('tcp_delay_s', _FLOAT),
        'hand_delay_s': ('hand_delay_s', _FLOAT),
    },
    'safety': {
        'd_ps_m': ('d_ps', _FLOAT),
        'd_hmax_m': ('d_hmax', _FLOAT),
        'k_r': ('k_r', _FLOAT),
        'k_h': ('k_h', _FLOAT),
        't_r_s': ('t_r', _FLOAT),
        'd_pdd_m': ('d_pdd', _FLOAT),
        'v_intent_mps': ('v_intent', _FLOAT),
        'hysteresis_m': ('hysteresis', _FLOAT),
        'resume_policy': ('resume_policy', _TEXT),
        'resume_margin_m': ('resume_margin', _FLOAT),
        'd_ha_fixed_m': ('d_ha_fixed', _OPTIONAL_FLOAT),
    },
    'robot': {
        'waypoints_m': ('waypoints', _POINTS),
        'speed_mps': ('speed', _FLOAT),
        'obeys_stop': ('obeys_stop', _BOOL),
        'cyclic': ('cyclic', _BOOL),
        'dwell_s': ('dwell', _FLOAT),
    },
    'hand': {
        'kind': ('kind', _TEXT),
        'position_m': ('position', _POINT),
        'waypoints_m': ('waypoints', _POINTS),
        'speed_mps': ('speed', _OPTIONAL_FLOAT),
        'latency_s': ('latency', _FLOAT),
        'latency_std_s': ('latency_std', _FLOAT),
        'retreat_speed_mps': ('retreat_speed', _FLOAT),
        'retreat_accel_mps2': ('retreat_accel', _FLOAT),
        'retreat_distance_m': ('retreat_distance', _FLOAT),
        'return_speed_mps': ('return_speed', _FLOAT),
        'return_clearance_m': ('return_clearance', _OPTIONAL_FLOAT),
        'trigger': ('trigger', _TEXT),
        'jitter_mps': ('jitter_amplitude', _FLOAT),
    },
    'visual': {
        'threshold_m': ('threshold', _FLOAT),
        'latency_mean_s': ('latency_mean', _FLOAT),
        'latency_std_s': ('latency_std', _FLOAT),
        'miss_probability': ('miss_probability', _FLOAT),
        'glance_period_s': ('glance_period', _FLOAT),
    },
}

REQUIRED = (('robot', 'waypoints_m'), ('robot', 'speed_mps'))

_SECTION_LINE = re.compile(r'^\s*\[([^\]]*)\]')
_KEY_LINE = re.compile(r'^([^\s=:#;][^=:]*?)\s*[=:]\s*')


def _locate(text):
    """
    Map every section and key to its 1-based line and the 1-based column of its value.

    :return: dict (section, key or None) -> (line, column)
    """
    where = {}
    section = None
    for number, raw in enumerate(text.splitlines(), start=1):
        match = _SECTION_LINE.match(raw)
        if match:
            section = match.group(1).strip().lower()
            where.setdefault((section, None), (number, raw.index('[') + 1))
            continue
        match = _KEY_LINE.match(raw)
        if match and section is not None:
            where.setdefault((section, match.group(1).strip().lower()), (number, match.end() + 1))
    return where


def _parse_value(text, kind):
    text = text.strip()
    if kind == _TEXT:
        return text
    if kind == _INT:
        return int(text)
    if kind == _FLOAT:
        return float(text)
    if kind == _OPTIONAL_FLOAT:
        return None if text.lower() in ('', 'none') else float(text)
    if kind == _BOOL:
        states = configparser.ConfigParser.BOOLEAN_STATES
        if text.lower() not in states:
            raise ValueError('not a boolean: %r' % text)
        return states[text.lower()]
    if kind == _POINT:
        return _parse_point(text)
    return [_parse_point(part) for part in text.split(';') if part.strip()]


def _parse_point(text):
    coordinates = [float(c) for c in text.replace(',', ' ').split()]
    if len(coordinates) != 3:
        raise ValueError('a point needs 3 coordinates, got %d' % len(coordinates))
    return coordinates


def _format_value(value, kind):
    if kind in (_TEXT, _INT):
        return str(value)
    if kind == _BOOL:
        return 'true' if value else 'false'
    if kind == _OPTIONAL_FLOAT and value is None:
        return 'none'
    if kind in (_FLOAT, _OPTIONAL_FLOAT):
        return repr(float(value))
    if kind == _POINT:
        return ' '.join(repr(float(c)) for c in value)
    return '; '.join(' '.join(repr(float(c)) for c in p) for p in value)


def parse_scenario(text, path=None):
    """
    Parse scenario file contents.

    :param text: file contents
    :param path: file name used in error messages
    :return: a validated Scenario
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=path or '<string>')
    except configparser.MissingSectionHeaderError as e:
        raise ConfigParseError('missing section header', e.lineno, 1, path)
    except configparser.ParsingError as e:
        line, content = e.errors[0]
        raise ConfigParseError('cannot parse %s' % content, line, 1, path)
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as e:
        raise ConfigParseError(str(e), e.lineno, 1, path)
    where = _locate(text)
    if parser.defaults():
        line, column = where.get(('default', None), (None, None))
        raise ConfigParseError('the [DEFAULT] section is not supported', line, column, path)
    values = {}
    for section in parser.sections():
        name = section.lower()
        line, column = where.get((name, None), (None, None))
        if name not in SCHEMA:
            raise ConfigParseError('unknown section [%s]' % section, line, column, path)
        fields = {}
        for key, raw in parser.items(section):
            line, column = where.get((name, key), (None, None))
            if key not in SCHEMA[name]:
                raise ConfigParseError('unknown key %r in [%s]' % (key, section), line, 1, path)
            argument, kind = SCHEMA[name][key]
            try:
                fields[argument] = _parse_value(raw, kind)
            except ValueError as e:
                raise ConfigParseError('bad value for %s: %s' % (key, e), line, column, path)
        values[name] = fields
    for section, key in REQUIRED:
        if SCHEMA[section][key][0] not in values.get(section, {}):
            raise ConfigParseError('missing required key %s in [%s]' % (key, section), path=path)
    return _build(values)


def _build(values):
    hand_fields = dict(values.get('hand', {}))
    if 'visual' in values:
        hand_fields['visual'] = VisualTrigger(**values['visual'])
    scenario_fields = dict(values.get('simulation', {}))
    scenario_fields.update(values.get('scenario', {}))
    return Scenario(RobotScript(**values['robot']), HandModel(**hand_fields),
                    SafetyParams(**values.get('safety', {})), **scenario_fields)


def load_scenario(path):
    """
    Load a scenario file or a built-in preset.

    :param path: file path, or one of the PRESETS names
    :return: a validated Scenario
    """
    path = str(path)
    if path in PRESETS and not os.path.exists(path):
        return PRESETS[path]()
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    scenario = parse_scenario(text, path)
    ToolFunction.log('config.py: loaded %s (fingerprint %s)' % (path, scenario.fingerprint()[:12]))
    return scenario


def format_scenario(scenario):
    """
    Scenario file contents for a scenario.

    :param scenario: a Scenario
    :return: text
    """
    d = scenario.to_dict()
    sources = {
        'scenario': {'label': d['label']},
        'simulation': d,
        'safety': d['params'],
        'robot': d['robot'],
        'hand': d['hand'],
        'visual': d['hand']['visual'],
    }
    parser = configparser.ConfigParser(interpolation=None)
    for section, keys in SCHEMA.items():
        source = sources[section]
        if source is None:
            continue
        parser.add_section(section)
        for key, (argument, kind) in keys.items():
            value = source[argument]
            if kind == _FLOAT and isinstance(value, str):
                value = float(value)
            if kind == _POINTS and not value and section == 'hand':
                continue
            parser.set(section, key, _format_value(value, kind))
    out = io.StringIO()
    out.write('# hpfssm scenario\n')
    parser.write(out)
    return out.getvalue()


def save_scenario(scenario, path):
    """
    Write a scenario file that load_scenario reads back to an equal Scenario.

    :param scenario: a Scenario
    :param path: output file
    :return: no return value
    """
    text = format_scenario(scenario)
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    except OSError as e:
        raise OutputError('config.py: cannot write %s: %s' % (path, e))

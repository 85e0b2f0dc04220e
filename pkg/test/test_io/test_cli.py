import json

from hpfssm.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, main
from hpfssm.io.config import save_scenario
from hpfssm.io.report import Report
from hpfssm.presets import exp1_scenario


class TestCli(object):
    def test_simulate_replay_report_plot(self, tmp_path):
        trace = str(tmp_path / 'run.trace')
        assert main(['-q', 'simulate', 'exp1', '--seed', '3', '--duration', '0.5', '--out', trace]) == EXIT_OK
        out = str(tmp_path / 'replay.json')
        assert main(['-q', 'replay', trace, '--out', out]) == EXIT_OK
        assert Report.load(out).matches_recorded
        report = str(tmp_path / 'report.json')
        assert main(['-q', 'report', trace, trace, '--out', report]) == EXIT_OK
        assert json.loads(open(report).read())['conditions']['exp1']['n'] == 2
        assert main(['-q', 'plot', trace, '--out-dir', str(tmp_path / 'fig')]) == EXIT_OK
        assert (tmp_path / 'fig' / 'exp1-distance-speed.svg').exists()
        assert main(['-q', 'plot', report, '--out-dir', str(tmp_path / 'fig')]) == EXIT_OK

    def test_scenario_file(self, tmp_path):
        path = tmp_path / 'short.ini'
        save_scenario(exp1_scenario().copy(duration=0.2), str(path))
        trace = tmp_path / 'short.trace'
        assert main(['-q', 'simulate', str(path), '--out', str(trace)]) == EXIT_OK
        assert len(trace.read_text().splitlines()) == 201

    def test_react_time(self, tmp_path):
        out = tmp_path / 'react.json'
        assert main(['-q', 'react-time', 'exp1', '--trials', '2', '--out', str(out)]) == EXIT_OK
        assert len(Report.load(str(out)).reaction['values']) == 2

    def test_assembly(self, tmp_path):
        args = ['-q', 'assembly', '--condition', 'vh', '--subjects', '2', '--duration', '0.5',
                '--out-dir', str(tmp_path)]
        assert main(args) == EXIT_OK
        assert (tmp_path / 'vh-subject-0.trace').exists() and (tmp_path / 'vh-subject-1.trace').exists()
        assert Report.load(str(tmp_path / 'vh-report.json')).conditions['vh']['n'] == 2

    def test_report_two_conditions_with_anova(self, tmp_path):
        for condition in ('vh', 'v'):
            args = ['-q', 'assembly', '--condition', condition, '--subjects', '2', '--duration', '10.0',
                    '--out-dir', str(tmp_path)]
            assert main(args) == EXIT_OK
        traces = [str(tmp_path / ('%s-subject-%d.trace' % (c, s))) for c in ('vh', 'v') for s in (0, 1)]
        out = str(tmp_path / 'report.json')
        assert main(['-q', 'report'] + traces + ['--anova', '--baseline', 'v', '--out', out]) == EXIT_OK
        report = Report.load(out)
        assert sorted(report.conditions) == ['v', 'vh']
        assert report.conditions['v']['n'] == 2 and report.conditions['vh']['n'] == 2
        assert sorted(report.anova) == ['min_distance', 'time_in_pdd']
        for result in report.anova.values():
            assert result is None or (result.df_between, result.df_within) == (1, 2)
        assert report.improvements['baseline'] == 'v' and report.improvements['improved'] == 'vh'

    def test_invalid_input(self, tmp_path):
        bad = tmp_path / 'bad.ini'
        bad.write_text('[robot]\nwaypoints_m = 0 0 0\nspeed_mps = 0.1\n[safety]\nd_ps_m = 2\n')
        assert main(['-q', 'simulate', str(bad)]) == EXIT_INVALID
        assert main(['-q', 'assembly', '--condition', 'x']) == EXIT_INVALID
        assert main(['-q', 'frobnicate']) == EXIT_INVALID
        assert main([]) == EXIT_INVALID

    def test_io_failure(self, tmp_path):
        assert main(['-q', 'replay', str(tmp_path / 'missing.trace')]) == EXIT_IO
        assert main(['-q', 'simulate', 'exp1', '--duration', '0.01',
                     '--out', str(tmp_path / 'no' / 'dir' / 'x.trace')]) == EXIT_IO

    def test_corrupt_trace_is_invalid(self, tmp_path):
        bad = tmp_path / 'bad.trace'
        bad.write_text('{"record": 0\n')
        assert main(['-q', 'replay', str(bad)]) == EXIT_INVALID

    def test_help(self, capsys):
        assert main(['--help']) == EXIT_OK
        assert 'simulate' in capsys.readouterr().out

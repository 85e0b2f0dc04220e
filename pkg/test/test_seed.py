import numpy as np

from hpfssm import run_scenario
from hpfssm.io.trace_file import write_trace
from hpfssm.presets import exp1_scenario, exp2_scenario
from hpfssm.utils.hpf_global import gl


class TestSeed(object):
    def test_same_seed_same_trace(self):
        scenario = exp2_scenario('v', seed=7, duration=3.0)
        first, second = run_scenario(scenario), run_scenario(scenario)
        assert np.array_equal(first.distances(), second.distances())
        assert np.array_equal(first.tcp_positions(), second.tcp_positions())
        assert first.events() == second.events()
        assert first.get_fingerprint() == second.get_fingerprint()

    def test_same_seed_same_bytes(self, tmp_path):
        scenario = exp1_scenario(seed=11).copy(duration=1.5)
        write_trace(run_scenario(scenario), str(tmp_path / 'a.trace'))
        write_trace(run_scenario(scenario), str(tmp_path / 'b.trace'))
        assert (tmp_path / 'a.trace').read_bytes() == (tmp_path / 'b.trace').read_bytes()

    def test_different_seed(self):
        scenario = exp1_scenario(seed=1).copy(duration=0.5)
        first, second = run_scenario(scenario), run_scenario(scenario.copy(seed=2))
        assert not np.array_equal(first.hand_speeds(), second.hand_speeds())
        assert first.get_fingerprint() != second.get_fingerprint()

    def test_streams_are_independent(self):
        a = gl.make_rng(5, 1).random(4)
        b = gl.make_rng(5, 2).random(4)
        assert not np.array_equal(a, b)
        assert np.array_equal(a, gl.make_rng(5, 1).random(4))

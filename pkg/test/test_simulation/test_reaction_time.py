import numpy as np
import pytest

from hpfssm import HandModel, RobotScript, SafetyParams, Scenario, measure_reaction_time, run_scenario
from hpfssm.presets import MEAN_REACTION_TIME, exp1_scenario
from hpfssm.simulation.reaction_time import draw_trial_latencies, stopwatch_time
from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.hpf_global import gl


def stopwatch_scenario(latency, retreat_accel=float('inf')):
    robot = RobotScript([(0.6, 0.5, 0.0), (0.6, 0.0, 0.0)], speed=0.1)
    hand = HandModel(kind='reactive', position=(0.6, 0.0, 0.0), latency=latency, retreat_speed=0.5,
                     retreat_accel=retreat_accel)
    return Scenario(robot, hand, SafetyParams(d_ps=0.2, d_ha_fixed=0.4), dt=0.001, duration=2.0, seed=5)


class TestMeasureReactionTime(object):
    def test_step_retreat(self):
        times = measure_reaction_time(stopwatch_scenario(0.25), trials=3)
        assert len(times) == 3 and times.missing_count() == 0
        for value in times:
            assert 0.25 - 1e-9 <= value <= 0.25 + 2 * 0.001 + 1e-9
        assert times.latencies == [0.25] * 3

    def test_immediate_reaction(self):
        times = measure_reaction_time(stopwatch_scenario(0.0), trials=2)
        assert all(0 < value <= 2 * 0.001 + 1e-9 for value in times)

    def test_recorded_trace_agrees(self):
        scenario = stopwatch_scenario(0.25)
        trace = run_scenario(scenario)
        measured = stopwatch_time(trace, scenario.get_params().get_v_intent())
        assert measured == measure_reaction_time(scenario, trials=1)[0]

    def test_calibration(self):
        times = measure_reaction_time(exp1_scenario(seed=2019), trials=10, subjects=10)
        assert len(times) == 100 and times.missing_count() == 0
        assert abs(np.mean(times.measured()) - MEAN_REACTION_TIME) < 0.02
        # the stopwatch starts with the trigger, so no trial is faster than its latency
        assert all(v >= latency - 1e-9 for v, latency in zip(times, times.latencies))
        assert sorted(times.per_subject_means()) == list(range(10))
        assert times.fastest() <= times.slowest()

    def test_parallel_matches_sequential(self):
        scenario = exp1_scenario(seed=4).copy(duration=2.0)
        sequential = measure_reaction_time(scenario, trials=4)
        parallel = measure_reaction_time(scenario, trials=4, parallel=True, server_num=2)
        assert list(sequential) == list(parallel)

    def test_never_entered(self):
        scenario = Scenario(RobotScript([(0, 0, 0)], speed=0.1),
                            HandModel(kind='reactive', position=(1, 0, 0)), duration=0.2)
        times = measure_reaction_time(scenario, trials=2)
        assert times.all_missing
        assert list(times) == [None, None]
        assert times.fastest() is None

    def test_requires_haptic_reactive_hand(self):
        scenario = Scenario(RobotScript([(0, 0, 0)], speed=0.1), HandModel(position=(1, 0, 0)))
        with pytest.raises(RejectedInputError):
            measure_reaction_time(scenario, trials=1)
        with pytest.raises(RejectedInputError):
            measure_reaction_time(stopwatch_scenario(0.25), trials=0)


class TestTrialLatencies(object):
    def test_antithetic_pairs(self):
        latencies = draw_trial_latencies(gl.make_rng(1), 0.3243, 0.0715, 10)
        assert len(latencies) == 10
        assert np.mean(latencies) == pytest.approx(0.3243, abs=1e-12)

    def test_odd_count(self):
        assert len(draw_trial_latencies(gl.make_rng(1), 0.3243, 0.0715, 7)) == 7

    def test_unpaired(self):
        latencies = draw_trial_latencies(gl.make_rng(1), 0.3243, 0.0715, 50, paired=False)
        assert all(0.3243 - 3 * 0.0715 <= v <= 0.3243 + 3 * 0.0715 for v in latencies)

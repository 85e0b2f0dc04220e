import numpy as np
import pytest

from hpfssm import (EventKind, HandModel, RobotScript, SafetyParams, Scenario, SimulationEngine, Zone,
                    run_scenario)
from hpfssm.utils.errors import RejectedInputError


def approach_scenario(**changes):
    """
    Robot moving head-on toward a resting hand 1 m away at 0.1 m/s.
    """
    fields = dict(robot=RobotScript([(0, 0, 0), (1, 0, 0)], speed=0.1),
                  hand=HandModel(position=(1, 0, 0)),
                  params=SafetyParams(d_ps=0.2, d_ha_fixed=0.4),
                  dt=0.001, duration=8.5, seed=3, label='approach')
    fields.update(changes)
    return Scenario(**fields)


class StopAfter(object):
    def __init__(self, steps):
        self.steps = steps

    def check(self, context):
        return context.get_step_index() + 1 >= self.steps


class TestRunScenario(object):
    def test_static_scene_is_safe(self):
        scenario = Scenario(RobotScript([(0, 0, 0)], speed=0.1), HandModel(position=(2, 0, 0)), duration=0.5)
        trace = run_scenario(scenario)
        assert len(trace) == 500
        assert set(trace.zones()) == {Zone.SAFE}
        assert trace.events() == []
        assert np.allclose(trace.distances(), 2.0)

    def test_timestamps(self):
        trace = run_scenario(approach_scenario(duration=0.1))
        assert len(trace) == 100
        assert np.array_equal(trace.times(), np.arange(100) * 0.001)
        assert trace.get_fingerprint() == approach_scenario(duration=0.1).fingerprint()

    def test_head_on_crossing_times(self):
        trace = run_scenario(approach_scenario())
        dt = trace.get_dt()
        on = trace.first_event(EventKind.HAPTIC_ON)
        stop = trace.first_event(EventKind.ROBOT_STOP)
        # 0.6 m and 0.8 m of travel at 0.1 m/s
        assert abs(on * dt - 6.0) <= dt + 1e-9
        assert abs(stop * dt - 8.0) <= dt + 1e-9
        assert trace[on].get_d() <= 0.4 < trace[on - 1].get_d()
        assert trace[stop].get_d() <= 0.2 < trace[stop - 1].get_d()
        assert trace.count_events(EventKind.ROBOT_STOP) == 1

    def test_robot_halts_after_stop(self):
        trace = run_scenario(approach_scenario())
        stop = trace.first_event(EventKind.ROBOT_STOP)
        positions = trace.tcp_positions()
        assert np.all(positions[stop + 1:] == positions[stop])
        assert min(trace.distances()) >= 0.2 - 0.1 * trace.get_dt() - 1e-9
        assert all(np.linalg.norm(s.get_sample().get_tcp_v()) == 0 for s in trace[stop + 1:])

    def test_kinematic_bound(self):
        trace = run_scenario(approach_scenario(duration=2.0))
        steps = np.linalg.norm(np.diff(trace.tcp_positions(), axis=0), axis=1)
        assert np.all(steps <= 0.1 * trace.get_dt() + 1e-12)

    def test_ignored_stop(self):
        scenario = approach_scenario(robot=RobotScript([(0, 0, 0), (1, 0, 0)], speed=0.1, obeys_stop=False))
        trace = run_scenario(scenario)
        assert min(trace.distances()) < 0.2 - 0.01

    def test_tcp_delay(self):
        trace = run_scenario(approach_scenario(duration=7.0, tcp_delay_s=0.05))
        on = trace.first_event(EventKind.HAPTIC_ON)
        assert abs(on * trace.get_dt() - 6.05) <= trace.get_dt() + 1e-9
        # the monitor sees the TCP of 50 steps before
        assert trace[0].get_sample().get_tcp()[0] == 0
        assert trace[100].get_sample().get_tcp()[0] == pytest.approx(0.1 * 0.05, abs=1e-9)

    def test_stopping_criterion(self):
        trace = run_scenario(approach_scenario(), StopAfter(10))
        assert len(trace) == 10

    def test_engine_accessors(self):
        engine = SimulationEngine(approach_scenario(duration=0.01))
        trace = engine.run()
        assert engine.get_step_index() == len(trace) - 1 == 9
        assert engine.get_steps() == trace.get_steps()
        assert engine.get_monitor().get_event_count() == 0

    def test_deterministic(self):
        scenario = approach_scenario(hand=HandModel(kind='reactive', position=(1, 0, 0), latency_std=0.07,
                                                    jitter_amplitude=0.05))
        first, second = run_scenario(scenario), run_scenario(scenario)
        assert np.array_equal(first.distances(), second.distances())
        assert np.array_equal(first.hand_speeds(), second.hand_speeds())
        assert first.events() == second.events()

    def test_invalid_scenario(self):
        with pytest.raises(RejectedInputError):
            approach_scenario(dt=0)
        with pytest.raises(RejectedInputError):
            approach_scenario(seed=-1)
        with pytest.raises(RejectedInputError):
            approach_scenario(hand=HandModel(kind='reactive', retreat_speed=0.05))


def random_crossing_scenario(rng, seed):
    """
    Random robot path and scripted hand path in a 1.2 m cube, starting farther apart than d_ps.
    """
    d_ps = rng.uniform(0.1, 0.3)
    while True:
        robot_path = rng.uniform(-0.6, 0.6, size=(rng.integers(2, 5), 3))
        hand_path = rng.uniform(-0.6, 0.6, size=(rng.integers(1, 4), 3))
        if np.linalg.norm(robot_path[0] - hand_path[0]) > d_ps + 0.05:
            break
    robot = RobotScript(robot_path, speed=rng.uniform(0.05, 1.0), cyclic=bool(rng.integers(2)))
    hand = HandModel(kind='scripted', waypoints=hand_path, speed=rng.uniform(0.05, 1.0))
    params = SafetyParams(d_ps=d_ps, k_r=rng.uniform(0.5, 3.0), t_r=rng.uniform(0.1, 0.6))
    return Scenario(robot, hand, params, dt=0.002, duration=1.0, seed=seed)


def head_on_reaction_scenario(speed, t_r, latency):
    """
    Robot heading straight for a haptic-reactive hand, starting 0.1 m outside the field.
    """
    d_ps = 0.2
    start = d_ps + speed * t_r + 0.1
    robot = RobotScript([(0, 0, 0), (start, 0, 0)], speed=speed)
    hand = HandModel(kind='reactive', position=(start, 0, 0), latency=latency, retreat_speed=2 * speed + 0.2,
                     retreat_distance=0.6)
    params = SafetyParams(d_ps=d_ps, t_r=t_r)
    return Scenario(robot, hand, params, dt=0.001, duration=0.1 / speed + t_r + 1.0, seed=1)


class TestSafetyFuzz(object):
    def test_stop_overshoot_bound(self):
        rng = np.random.default_rng(99)
        stops = 0
        for seed in range(500):
            scenario = random_crossing_scenario(rng, seed)
            trace = run_scenario(scenario)
            d_ps = scenario.get_params().get_d_ps()
            bound = d_ps - (scenario.get_robot().get_speed() + scenario.get_hand().get_speed()) * trace.get_dt()
            stop = trace.first_event(EventKind.ROBOT_STOP)
            for step in trace:
                assert step.get_zone() is not Zone.SAFE or step.get_d() > step.get_d_ha()
                if step.get_d() <= d_ps:
                    assert step.get_zone() is Zone.STOP
            if stop is None:
                continue
            stops += 1
            assert trace[stop].get_d() >= bound - 1e-9
            positions = trace.tcp_positions()
            assert np.all(positions[stop + 1:] == positions[stop])
        assert stops > 0

    def test_robot_never_moves_while_stopped(self):
        rng = np.random.default_rng(7)
        for seed in range(12):
            hand = rng.uniform(-0.6, 0.6, size=3)
            start, end = rng.uniform(-0.6, 0.6, size=(2, 3))
            scenario = Scenario(RobotScript([start, end], speed=rng.uniform(0.1, 1.0)),
                                HandModel(position=hand),
                                SafetyParams(d_ps=0.15, k_r=rng.uniform(0.5, 3.0)),
                                dt=0.002, duration=1.0, seed=seed)
            trace = run_scenario(scenario)
            stop = trace.first_event(EventKind.ROBOT_STOP)
            if stop is not None:
                positions = trace.tcp_positions()
                assert np.all(positions[stop + 1:] == positions[stop])
                assert all(np.linalg.norm(s.get_sample().get_tcp_v()) == 0 for s in trace[stop + 1:])

    def test_timely_reaction_never_stops_robot(self):
        for speed in (0.1, 0.25, 0.5, 1.0):
            for t_r in (0.2, 0.3243, 0.5):
                # closing at speed, the field leaves (d_ha - d_ps) / speed = t_r seconds to react
                for fraction in (0.3, 0.6, 0.9):
                    trace = run_scenario(head_on_reaction_scenario(speed, t_r, fraction * t_r))
                    assert trace.first_event(EventKind.HAPTIC_ON) is not None
                    assert trace.count_events(EventKind.ROBOT_STOP) == 0
                    assert Zone.STOP not in trace.zones()
                    assert max(trace.hand_speeds()) > 0.1

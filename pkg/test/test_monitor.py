import numpy as np
import pytest

from hpfssm import EventKind, MonitorState, PoseSample, SafetyMonitor, SafetyParams, Zone, reset, step
from hpfssm.monitor import classify_zone
from hpfssm.utils.errors import StreamError


def sample_at(t, d, hand_v=(0, 0, 0), tcp_v=(0, 0, 0)):
    return PoseSample(t, (0, 0, 0), tcp_v, (d, 0, 0), hand_v)


def run_stream(monitor, distances, dt=0.01):
    result = []
    for k, d in enumerate(distances):
        zone, events = monitor.step(sample_at(k * dt, d))
        result.append((zone, [e.get_kind() for e in events]))
    return result


class TestClassifyZone(object):
    def test_closed_boundaries(self):
        assert classify_zone(0.5, 0.4, 0.25) is Zone.SAFE
        assert classify_zone(0.4, 0.4, 0.25) is Zone.HAPTIC
        assert classify_zone(0.25, 0.4, 0.25) is Zone.STOP
        assert classify_zone(0.25, 0.25, 0.25) is Zone.STOP

    def test_severity(self):
        assert Zone.STOP.severity > Zone.HAPTIC.severity > Zone.SAFE.severity


class TestMonitorStep(object):
    params = SafetyParams(d_ps=0.25, d_ha_fixed=0.4)

    def test_outside_field(self):
        state, zone, events = step(MonitorState.initial(), sample_at(0.0, 0.5), self.params)
        assert zone is Zone.SAFE and events == []
        assert state.last_t == 0.0 and not state.haptic_active and not state.stop_latched

    def test_crossing_stream(self):
        monitor = SafetyMonitor(self.params)
        _, first = monitor.step(sample_at(0.0, 0.45))
        zone2, second = monitor.step(sample_at(0.01, 0.38))
        zone3, third = monitor.step(sample_at(0.02, 0.24))
        assert first == []
        assert zone2 is Zone.HAPTIC and [e.get_kind() for e in second] == [EventKind.HAPTIC_ON]
        assert second[0].get_t() == 0.01
        assert zone3 is Zone.STOP and [e.get_kind() for e in third] == [EventKind.ROBOT_STOP]
        assert third[0].get_t() == 0.02
        assert monitor.robot_halted() and monitor.get_event_count() == 2

    def test_psd_boundary_is_stop(self):
        _, zone, events = step(MonitorState.initial(), sample_at(0.0, 0.25), self.params)
        assert zone is Zone.STOP
        assert [e.get_kind() for e in events] == [EventKind.HAPTIC_ON, EventKind.ROBOT_STOP]

    def test_non_monotonic_time(self):
        state, _, _ = step(MonitorState.initial(), sample_at(1.0, 0.5), self.params)
        with pytest.raises(StreamError):
            step(state, sample_at(1.0, 0.5), self.params)
        with pytest.raises(StreamError):
            step(state, sample_at(0.5, 0.5), self.params)

    def test_coincident_positions_stop(self):
        sample = PoseSample(0.0, (0.2, 0.2, 0.2), (0.1, 0, 0), (0.2, 0.2, 0.2), (0, 0, 0))
        state, zone, events = step(MonitorState.initial(), sample, self.params)
        assert zone is Zone.STOP and state.stop_latched
        assert [e.get_kind() for e in events] == [EventKind.HAPTIC_ON, EventKind.ROBOT_STOP]

    def test_hysteresis(self):
        monitor = SafetyMonitor(self.params)
        result = run_stream(monitor, [0.45, 0.39, 0.41, 0.419, 0.43])
        assert [z for z, _ in result] == [Zone.SAFE, Zone.HAPTIC, Zone.HAPTIC, Zone.HAPTIC, Zone.SAFE]
        assert [e for _, e in result] == [[], [EventKind.HAPTIC_ON], [], [], [EventKind.HAPTIC_OFF]]

    def test_no_hysteresis_on_entry(self):
        monitor = SafetyMonitor(self.params)
        assert run_stream(monitor, [0.41]) == [(Zone.SAFE, [])]

    def test_latched_stop(self):
        monitor = SafetyMonitor(self.params)
        result = run_stream(monitor, [0.24, 1.0, 2.0])
        assert result[1] == (Zone.SAFE, [EventKind.HAPTIC_OFF])
        assert result[2] == (Zone.SAFE, [])
        assert monitor.robot_halted()

    def test_distance_resume(self):
        monitor = SafetyMonitor(self.params.copy(resume_policy='distance', resume_margin=0.05))
        result = run_stream(monitor, [0.24, 0.28, 0.31, 0.24])
        assert result[0][1] == [EventKind.HAPTIC_ON, EventKind.ROBOT_STOP]
        assert result[1] == (Zone.HAPTIC, [])
        assert result[2] == (Zone.HAPTIC, [EventKind.ROBOT_RESUME])
        assert result[3] == (Zone.STOP, [EventKind.ROBOT_STOP])

    def test_event_order_on_single_sample(self):
        monitor = SafetyMonitor(self.params.copy(resume_policy='distance'))
        result = run_stream(monitor, [0.2, 1.0])
        assert result[1] == (Zone.SAFE, [EventKind.ROBOT_RESUME, EventKind.HAPTIC_OFF])

    def test_stopped_robot_velocity_ignored(self):
        params = SafetyParams(d_ps=0.25)
        monitor = SafetyMonitor(params)
        monitor.step(sample_at(0.0, 0.2))
        # 1 m/s toward the hand would give d_ha = 0.25 + 0.3243 if it counted
        zone, _ = monitor.step(PoseSample(0.01, (0, 0, 0), (1.0, 0, 0), (0.5, 0, 0), (0, 0, 0)))
        assert monitor.get_state().last_evaluation.d_ha == 0.25
        assert zone is Zone.SAFE

    def test_deterministic(self):
        rng = np.random.default_rng(7)
        distances = rng.uniform(0.1, 0.6, size=300)
        speeds = rng.uniform(-0.5, 0.5, size=300)
        params = SafetyParams(resume_policy='distance')
        outputs = []
        for _ in range(2):
            monitor = SafetyMonitor(params)
            out = []
            for k, (d, v) in enumerate(zip(distances, speeds)):
                zone, events = monitor.step(sample_at(k * 0.001, d, hand_v=(v, 0, 0)))
                out.append((zone, tuple(events)))
            outputs.append(out)
        assert outputs[0] == outputs[1]

    def test_zone_matches_field(self):
        rng = np.random.default_rng(9)
        params = SafetyParams(hysteresis=0.0)
        state = MonitorState.initial()
        for k in range(300):
            sample = sample_at(k * 0.001, rng.uniform(0.05, 1.5), hand_v=rng.uniform(-1, 1, size=3))
            state, zone, _ = step(state, sample, params)
            evaluation = state.last_evaluation
            assert zone is classify_zone(evaluation.d, evaluation.d_ha, params.get_d_ps())
            assert params.get_d_ps() <= evaluation.d_ha <= params.get_d_hmax()


class TestReset(object):
    params = SafetyParams(d_ps=0.25, d_ha_fixed=0.4)

    def test_pristine(self):
        state, _, _ = step(MonitorState.initial(), sample_at(0.0, 0.2), self.params)
        assert state.stop_latched and state.haptic_active
        fresh = reset(state)
        assert fresh.is_pristine()
        assert not fresh.stop_latched and fresh.zone is Zone.SAFE

    def test_reset_then_safe_sample(self):
        monitor = SafetyMonitor(self.params)
        run_stream(monitor, [0.3, 0.2])
        monitor.reset()
        assert not monitor.robot_halted() and monitor.get_event_count() == 0
        # time may restart after a reset
        zone, events = monitor.step(sample_at(0.0, 0.6))
        assert zone is Zone.SAFE and events == []

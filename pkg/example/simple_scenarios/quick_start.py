"""
This file contains an example of how to run a scenario, score its trace and draw it.

Author:
    hpfssm developers
"""

from hpfssm import HandModel, RobotScript, SafetyParams, Scenario, TrialStats, run_scenario
from hpfssm.io import emit_plots, write_trace

if __name__ == '__main__':
    # the TCP moves head-on toward a resting hand 1 m away
    robot = RobotScript([(0.0, 0.0, 0.0), (1.0, 0.0, 0.0)], speed=0.1)
    hand = HandModel(position=(1.0, 0.0, 0.0))
    params = SafetyParams(d_ps=0.2, d_ha_fixed=0.4)
    scenario = Scenario(robot, hand, params, dt=0.001, duration=9.0, seed=0, label='head-on')
    trace = run_scenario(scenario)
    for event in trace.events():
        print(event)
    print(TrialStats.from_trace(trace))
    write_trace(trace, 'head-on.trace')
    emit_plots(trace, 'img')

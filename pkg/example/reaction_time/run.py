"""
This file contains an example of the reaction-time protocol: the robot approaches a resting hand until the
haptic stimulus is switched on, and a stopwatch runs until the hand moves faster than the intentionality
threshold.

Author:
    hpfssm developers
"""

from hpfssm import ExpSim
from hpfssm.io import emit_plots
from hpfssm.presets import exp1_scenario

if __name__ == '__main__':
    scenario = exp1_scenario(seed=2019)
    # 10 subjects, 10 trials each, spread over 4 processes
    times, report = ExpSim.reaction_time(scenario, trials=10, subjects=10, parallel=True, server_num=4)
    for subject, mean in sorted(times.per_subject_means().items()):
        print("subject %d: %.4f s" % (subject, mean))
    print("fastest %.4f s, slowest %.4f s" % (times.fastest(), times.slowest()))
    report.save('reaction-times.json')
    emit_plots(report, 'img')

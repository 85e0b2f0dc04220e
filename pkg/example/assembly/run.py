"""
This file contains an example of the assembly task: the robot supplies parts next to the working hand, once
with a hand that only sees the robot (v) and once with a hand that also feels the haptic stimulus (vh).

Author:
    hpfssm developers
"""

from hpfssm import ExpSim
from hpfssm.io import emit_plots, write_trace

if __name__ == '__main__':
    traces, report = ExpSim.assembly_comparison(subjects=5, seed=0, parallel=True, server_num=4)
    for condition, condition_traces in traces.items():
        for subject, trace in enumerate(condition_traces):
            write_trace(trace, '%s-subject-%d.trace' % (condition, subject))
    report.save('assembly-report.json')
    print(report.to_json())
    emit_plots(traces['v'] + traces['vh'], 'img')
    emit_plots(report, 'img')

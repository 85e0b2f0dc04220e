from hpfssm.io.config import PRESETS, load_scenario, parse_scenario, save_scenario
from hpfssm.io.report import Report, build_report, reaction_report
from hpfssm.io.trace_file import iter_trace_records, read_trace, replay, write_trace
from hpfssm.io.plots import emit_plots

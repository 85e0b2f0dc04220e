from hpfssm.geometry import HapticField, PointSet, convex_hull_distance, hpf_contains, tcp_hand_distance
from hpfssm.parameter import DefaultStoppingCriterion, SafetyParams
from hpfssm.pose import PoseSample
from hpfssm.safety_field import (FieldEvaluation, approaching_speed, evaluate_field, haptic_activation_distance,
                                 haptic_radius, weighted_relative_velocity)
from hpfssm.monitor import EventKind, MonitorEvent, MonitorState, SafetyMonitor, Zone, reset, step
from hpfssm.scenario import HandModel, RobotScript, Scenario, VisualTrigger
from hpfssm.trace import Trace, TraceStep
from hpfssm.simulation import (ReactionTimes, SimulationEngine, measure_reaction_time, run_assembly_experiment,
                               run_scenario)
from hpfssm.metrics import (AnovaResult, TrialStats, improvement_difference, improvement_ratio, min_distance,
                            oneway_anova, summary, time_inside)
from hpfssm.exp_sim import ExpSim

from hpfssm.simulation.engine import SimulationEngine, run_scenario
from hpfssm.simulation.reaction_time import ReactionTimes, measure_reaction_time, stopwatch_time
from hpfssm.simulation.assembly import run_assembly_experiment

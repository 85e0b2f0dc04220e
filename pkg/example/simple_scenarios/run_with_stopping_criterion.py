from hpfssm import EventKind, run_scenario
from hpfssm.presets import exp2_scenario


class StoppingCriterion:
    """
        This class defines a stopping criterion, which is passed to run_scenario and should implement
        check(self, context) member function.
    """
    def __init__(self, stops=3):
        self.__stops = stops
        self.__count = 0

    def check(self, context):
        """
        This function is invoked after every simulation step.
        The run stops early when this function returns True. In this example, the run stops after the robot
        has been stopped a given number of times.

        :param context: the running SimulationEngine. Several functions can be invoked to get the contexts of
        the run, which are listed as follows,
        context.get_steps(): the recorded TraceSteps
        context.get_step_index(): index of the step just recorded
        context.get_monitor(): the SafetyMonitor

        :return: bool object.
        """
        step = context.get_steps()[context.get_step_index()]
        if EventKind.ROBOT_STOP in step.get_event_kinds():
            self.__count += 1
            print("robot stop %d at t = %.3f s" % (self.__count, step.get_t()))
        return self.__count >= self.__stops


if __name__ == '__main__':
    # the visual-only hand lets the robot reach the protective separation distance now and then
    scenario = exp2_scenario('v', seed=1, duration=120.0)
    trace = run_scenario(scenario, StoppingCriterion(stops=3))
    print("stopped after %.3f s" % trace.get_duration())

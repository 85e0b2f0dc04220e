"""
This module contains the class ToolFunction.

Author:
    Yu-Ren Liu, Yang Yu

Updated by:
    hpfssm developers
"""
import logging

import numpy as np

_LOGGER_NAME = 'hpfssm'


class ToolFunction:
    """
    This class defines some tool functions used in the project.
    """
    def __init__(self):
        pass

    @staticmethod
    def logger():
        """
        Get the package logger, installing a stderr handler on first use.

        :return: a logging.Logger
        """
        logger = logging.getLogger(_LOGGER_NAME)
        if not logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter('[hpfssm] %(message)s'))
            logger.addHandler(handler)
            logger.setLevel(logging.INFO)
            logger.propagate = False
        return logger

    @staticmethod
    def log(text, level=logging.INFO):
        """
        Output logs in hpfssm.

        :param text: the text content
        :param level: a logging level, INFO by default
        :return: no return value
        """
        ToolFunction.logger().log(level, text)

    @staticmethod
    def warn(text):
        ToolFunction.log(text, logging.WARNING)

    @staticmethod
    def set_verbosity(verbose=0):
        """
        Set the log level from a verbosity count.

        :param verbose: < 0 quiet (warnings only), 0 info, > 0 debug
        :return: no return value
        """
        if verbose < 0:
            level = logging.WARNING
        elif verbose == 0:
            level = logging.INFO
        else:
            level = logging.DEBUG
        ToolFunction.logger().setLevel(level)

    @staticmethod
    def norm(v):
        """
        Euclidean norm of a small vector.

        :param v: a numpy array
        :return: float
        """
        return float(np.sqrt(np.dot(v, v)))

    @staticmethod
    def steps_for(duration, dt):
        """
        Smallest whole number of steps n with n * dt >= duration.

        :param duration: seconds, >= 0
        :param dt: seconds, > 0
        :return: int
        """
        if duration <= 0:
            return 0
        n = int(np.ceil(duration / dt))
        while n * dt < duration:
            n += 1
        while n > 0 and (n - 1) * dt >= duration:
            n -= 1
        return n

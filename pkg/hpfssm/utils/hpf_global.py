"""
This module contains the class Global.

Author:
    Yu-Ren Liu

Updated by:
    Ze-Wen Li, hpfssm developers
"""

import numpy as np


class Global:
    """
    This class defines global numerical settings used in all modules.
    """

    def __init__(self):
        """
        Initialize tolerances.
        """
        # convex-hull projection tolerance, meters
        self.geometry_tolerance = 1e-9
        self.max_iterations = 10000
        # tcp/hand closer than this are treated as coincident
        self.coincidence_tolerance = 1e-6

    @staticmethod
    def make_rng(seed, *keys):
        """
        Build an independent random generator for one stream.

        The bit generator is PCG64 seeded through a SeedSequence made of the seed followed by the
        integer stream keys, so the same (seed, keys) gives the same numbers on every platform.

        :param seed: non-negative integer seed
        :param keys: non-negative integers naming the stream (subject, trial, ...)
        :return: a numpy.random.Generator
        """
        entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(k) for k in keys]
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


gl = Global()
pos_inf = float('Inf')

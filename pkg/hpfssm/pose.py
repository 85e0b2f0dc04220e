"""
This module contains the class PoseSample, one timestamped snapshot of the TCP and the hand.

Author:
    hpfssm developers
"""

import math

from hpfssm.geometry import as_vector3
from hpfssm.utils.errors import RejectedInputError


class PoseSample:
    """
    Positions (meters) and velocities (meters/second) of the TCP and the hand at time t (seconds).
    """

    def __init__(self, t, tcp, tcp_v, hand, hand_v):
        t = float(t)
        if not math.isfinite(t):
            raise RejectedInputError('pose.py: sample time must be finite, got %r' % t)
        self.__t = t
        self.__tcp = as_vector3(tcp, 'tcp')
        self.__tcp_v = as_vector3(tcp_v, 'tcp_v')
        self.__hand = as_vector3(hand, 'hand')
        self.__hand_v = as_vector3(hand_v, 'hand_v')

    def get_t(self):
        return self.__t

    def get_tcp(self):
        return self.__tcp

    def get_tcp_v(self):
        return self.__tcp_v

    def get_hand(self):
        return self.__hand

    def get_hand_v(self):
        return self.__hand_v

    def to_dict(self):
        return {'t': self.__t,
                'tcp': [float(c) for c in self.__tcp],
                'tcp_v': [float(c) for c in self.__tcp_v],
                'hand': [float(c) for c in self.__hand],
                'hand_v': [float(c) for c in self.__hand_v]}

    def __repr__(self):
        return 'PoseSample(t=%r, tcp=%r, hand=%r)' % (self.__t, list(self.__tcp), list(self.__hand))

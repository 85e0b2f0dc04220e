"""
This module contains the convex proximity kernel: distances to convex hulls, membership in the
Minkowski sum of a hull and a ball, and the TCP-centred sphere case.

Points and velocities are float numpy arrays of shape (3,).

Author:
    hpfssm developers
"""

import numpy as np

from hpfssm.utils.errors import RejectedInputError
from hpfssm.utils.hpf_global import gl
from hpfssm.utils.tool_function import ToolFunction

# barycentric weights at or below this are dropped from the corral
_WEIGHT_EPS = 1e-12


def as_vector3(value, name='vector'):
    """
    Convert a 3-sequence to a finite float array.

    :param value: any 3-element sequence or array
    :param name: name used in error messages
    :return: numpy array, shape (3,)
    """
    try:
        v = np.array(value, dtype=float).reshape(3)
    except (TypeError, ValueError):
        raise RejectedInputError('geometry.py: %s must have exactly 3 components, got %r' % (name, value))
    if not np.all(np.isfinite(v)):
        raise RejectedInputError('geometry.py: %s must be finite, got %r' % (name, value))
    return v


class PointSet:
    """
    A non-empty ordered set of 3-D points, the generators of a convex hull. Duplicates are allowed.
    """

    def __init__(self, points):
        """
        :param points: a single point or a sequence of points
        """
        arr = np.array(points, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] != 3:
            raise RejectedInputError('geometry.py: a PointSet needs at least one 3-D point, got shape %s'
                                     % (arr.shape,))
        if not np.all(np.isfinite(arr)):
            raise RejectedInputError('geometry.py: PointSet coordinates must be finite')
        self.__points = arr

    def get_points(self):
        return self.__points

    def get_size(self):
        return self.__points.shape[0]

    def is_degenerate(self):
        """
        Whether all generators coincide, i.e. the hull is a single point.

        :return: True or False
        """
        return bool(np.all(self.__points == self.__points[0]))


class HapticField:
    """
    The haptic potential field conv(P) + B(radius). Membership is closed.
    """

    def __init__(self, generators, radius):
        """
        :param generators: a PointSet or anything PointSet accepts
        :param radius: meters, >= 0
        """
        if not isinstance(generators, PointSet):
            generators = PointSet(generators)
        radius = float(radius)
        if not np.isfinite(radius) or radius < 0:
            raise RejectedInputError('geometry.py: field radius must be finite and >= 0, got %r' % radius)
        self.__generators = generators
        self.__radius = radius

    @staticmethod
    def sphere(center, radius):
        """
        The TCP-centred sphere used by both experiments.
        """
        return HapticField(PointSet([as_vector3(center, 'center')]), radius)

    def get_generators(self):
        return self.__generators

    def get_radius(self):
        return self.__radius

    def contains(self, q):
        return hpf_contains(q, self)


def _affine_minimizer(corral_points):
    """
    Minimum-norm point of the affine hull of the given rows.

    :param corral_points: array (m, 3)
    :return: affine weights, shape (m,), summing to one
    """
    m = corral_points.shape[0]
    system = np.zeros((m + 1, m + 1))
    system[:m, :m] = corral_points @ corral_points.T
    system[:m, m] = 1.0
    system[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
    weights = solution[:m]
    return weights / weights.sum()


def _min_norm_point(points, tolerance, max_iterations):
    """
    Nearest point to the origin of conv(points), Wolfe's corral method.

    Each major cycle adds the support point in direction -x, each minor cycle moves toward the affine
    minimizer of the corral and drops generators whose weight reaches zero.

    :param points: array (n, 3)
    :param tolerance: stop when the support gap bounds the distance error below this
    :param max_iterations: bound on major plus minor cycles
    :return: nearest point, shape (3,)
    """
    squared = np.einsum('ij,ij->i', points, points)
    corral = [int(np.argmin(squared))]
    weights = np.array([1.0])
    x = points[corral[0]].copy()
    iteration = 0
    while iteration < max_iterations:
        iteration += 1
        xx = float(np.dot(x, x))
        if xx <= tolerance * tolerance:
            break
        support = points @ x
        j = int(np.argmin(support))
        if xx - support[j] <= tolerance * np.sqrt(xx):
            break
        if j in corral:
            break
        corral.append(j)
        weights = np.append(weights, 0.0)
        while iteration < max_iterations:
            iteration += 1
            alpha = _affine_minimizer(points[corral])
            if np.all(alpha > _WEIGHT_EPS):
                weights = alpha
                break
            theta = 1.0
            for i in range(len(corral)):
                if alpha[i] <= _WEIGHT_EPS and weights[i] - alpha[i] > 0:
                    theta = min(theta, weights[i] / (weights[i] - alpha[i]))
            weights = theta * alpha + (1.0 - theta) * weights
            keep = weights > _WEIGHT_EPS
            corral = [c for c, k in zip(corral, keep) if k]
            weights = weights[keep]
            weights = weights / weights.sum()
        new_x = weights @ points[corral]
        if j not in corral and np.array_equal(new_x, x):
            # no progress possible at this precision
            break
        x = new_x
    if iteration >= max_iterations:
        ToolFunction.warn('geometry.py: hull projection stopped at max_iterations=%d' % max_iterations)
    return x


def convex_hull_distance(q, point_set):
    """
    Distance from q to the convex hull of a point set.

    Exact for a single generator; 0 when q lies in the hull.

    :param q: a point
    :param point_set: a PointSet (or anything PointSet accepts)
    :return: meters
    """
    q = as_vector3(q, 'q')
    if not isinstance(point_set, PointSet):
        point_set = PointSet(point_set)
    points = point_set.get_points() - q
    if point_set.get_size() == 1:
        return ToolFunction.norm(points[0])
    nearest = _min_norm_point(points, gl.geometry_tolerance, gl.max_iterations)
    distance = ToolFunction.norm(nearest)
    if distance <= gl.geometry_tolerance:
        return 0.0
    return distance


def hpf_contains(q, field):
    """
    Closed membership of q in a HapticField.

    :param q: a point
    :param field: a HapticField
    :return: True or False
    """
    return convex_hull_distance(q, field.get_generators()) <= field.get_radius()


def tcp_hand_distance(tcp, hand):
    """
    Euclidean distance between the TCP and the hand.

    :param tcp: a point
    :param hand: a point
    :return: meters
    """
    return ToolFunction.norm(as_vector3(hand, 'hand') - as_vector3(tcp, 'tcp'))

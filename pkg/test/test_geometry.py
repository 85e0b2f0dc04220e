import itertools

import numpy as np
import pytest
from scipy.optimize import nnls

from hpfssm import HapticField, PointSet, convex_hull_distance, hpf_contains, tcp_hand_distance
from hpfssm.utils.errors import RejectedInputError


def nnls_distance(q, points):
    """
    Distance from q to conv(points): non-negative least squares with a heavily weighted sum-to-one row.
    """
    points = np.asarray(points, dtype=float)
    weight = 1e4
    a = np.vstack([points.T, weight * np.ones(len(points))])
    b = np.concatenate([np.asarray(q, dtype=float), [weight]])
    lam, _ = nnls(a, b)
    lam = lam / lam.sum()
    return float(np.linalg.norm(points.T @ lam - q))


def grid_distance(q, points, steps):
    """
    Distance from q to the convex combinations of up to 3 points on a barycentric grid.
    """
    points = np.asarray(points, dtype=float)
    best = np.inf
    n = len(points)
    for idx in itertools.product(range(steps + 1), repeat=n - 1):
        if sum(idx) > steps:
            continue
        lam = np.array(list(idx) + [steps - sum(idx)], dtype=float) / steps
        best = min(best, float(np.linalg.norm(lam @ points - q)))
    return best


class TestConvexHullDistance(object):
    def test_single_point(self):
        assert convex_hull_distance((0.3, 0, 0), PointSet([(0, 0, 0)])) == pytest.approx(0.3, abs=1e-15)

    def test_interior_of_cube(self):
        corners = list(itertools.product((0.0, 1.0), repeat=3))
        assert convex_hull_distance((0.5, 0.5, 0.5), corners) == pytest.approx(0.0, abs=1e-8)

    def test_outside_tetrahedron(self):
        tetra = [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0)]
        assert convex_hull_distance((2, 0, 0), tetra) == pytest.approx(1.0, abs=1e-7)
        assert convex_hull_distance((2, 0, 0), tetra) == pytest.approx(nnls_distance((2, 0, 0), tetra), abs=2e-3)

    def test_segment_and_triangle(self):
        segment = [(0, 0, 0), (1, 0, 0)]
        assert convex_hull_distance((0.5, 1, 0), segment) == pytest.approx(1.0, abs=1e-7)
        assert convex_hull_distance((-1, 0, 0), segment) == pytest.approx(1.0, abs=1e-7)
        triangle = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
        assert convex_hull_distance((0.2, 0.2, 0.7), triangle) == pytest.approx(0.7, abs=1e-7)

    def test_duplicates_allowed(self):
        ps = PointSet([(1, 1, 1), (1, 1, 1), (1, 1, 1)])
        assert ps.is_degenerate()
        assert convex_hull_distance((1, 1, 3), ps) == pytest.approx(2.0, abs=1e-7)

    def test_convex_combinations_are_inside(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            points = rng.uniform(-1, 1, size=(rng.integers(2, 7), 3))
            lam = rng.dirichlet(np.ones(len(points)))
            assert convex_hull_distance(lam @ points, points) <= 1e-6

    def test_grid_oracle_small_sets(self):
        rng = np.random.default_rng(11)
        steps = 60
        for _ in range(30):
            points = rng.uniform(-1, 1, size=(rng.integers(1, 4), 3))
            q = rng.uniform(-2, 2, size=3)
            ours = convex_hull_distance(q, points)
            oracle = grid_distance(q, points, steps)
            diameter = max(np.linalg.norm(a - b) for a in points for b in points)
            assert ours <= oracle + 1e-7
            assert oracle - ours <= 2 * diameter / steps + 1e-9

    def test_nnls_oracle_random_sets(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            points = rng.uniform(-1, 1, size=(rng.integers(1, 7), 3))
            q = rng.uniform(-1.5, 1.5, size=3)
            assert convex_hull_distance(q, points) == pytest.approx(nnls_distance(q, points), abs=2e-3)

    def test_lipschitz(self):
        rng = np.random.default_rng(5)
        points = rng.uniform(-1, 1, size=(5, 3))
        for _ in range(50):
            q1, q2 = rng.uniform(-2, 2, size=(2, 3))
            d1 = convex_hull_distance(q1, points)
            d2 = convex_hull_distance(q2, points)
            assert abs(d1 - d2) <= np.linalg.norm(q1 - q2) + 1e-8

    def test_rejected_inputs(self):
        with pytest.raises(RejectedInputError):
            PointSet([])
        with pytest.raises(RejectedInputError):
            PointSet([(0, 0, float('nan'))])
        with pytest.raises(RejectedInputError):
            convex_hull_distance((0, 0), [(0, 0, 0)])
        with pytest.raises(RejectedInputError):
            HapticField([(0, 0, 0)], -0.1)


class TestHpfContains(object):
    def test_sphere(self):
        assert hpf_contains((0.3, 0, 0), HapticField.sphere((0, 0, 0), 0.4))
        assert not hpf_contains((0.3, 0, 0), HapticField.sphere((0, 0, 0), 0.2))

    def test_closed_boundary(self):
        assert HapticField.sphere((0, 0, 0), 0.5).contains((0.5, 0, 0))

    def test_monotone_in_radius(self):
        rng = np.random.default_rng(8)
        points = rng.uniform(-1, 1, size=(4, 3))
        for _ in range(30):
            q = rng.uniform(-2, 2, size=3)
            radii = np.sort(rng.uniform(0, 1.5, size=5))
            inside = [hpf_contains(q, HapticField(points, r)) for r in radii]
            # once inside, inside for every larger radius
            assert inside == sorted(inside)

    def test_agrees_with_oracle(self):
        rng = np.random.default_rng(17)
        checked = 0
        for _ in range(200):
            points = rng.uniform(-1, 1, size=(5, 3))
            q = rng.uniform(-1.5, 1.5, size=3)
            oracle = nnls_distance(q, points)
            if abs(oracle - 0.1) < 2e-3:
                continue
            assert hpf_contains(q, HapticField(points, 0.1)) == (oracle <= 0.1)
            checked += 1
        assert checked > 150


class TestTcpHandDistance(object):
    def test_examples(self):
        assert tcp_hand_distance((0, 0, 0), (0, 0.4, 0)) == pytest.approx(0.4)
        assert tcp_hand_distance((1, 1, 1), (1, 1, 1)) == 0.0
        assert tcp_hand_distance((1, 2, 2), (0, 0, 0)) == pytest.approx(3.0)

    def test_symmetric(self):
        assert tcp_hand_distance((0.1, 0.2, 0.3), (1, -1, 2)) == tcp_hand_distance((1, -1, 2), (0.1, 0.2, 0.3))

"""Construction, point topology, and sampling of time scales."""

import math

import pytest
from hypothesis import given, strategies as st

from tscalc import (
    DomainError,
    InputError,
    build_time_scale,
    grid,
    kappa_restrictions,
    point_info,
    rho,
    sigma,
)


def pts_scale(*pts):
    return build_time_scale([(p, p) for p in pts])


MIXED = build_time_scale([(0, 0), (1, 1), (2, 2), (3, 4)])


# exact endpoints on a 1/16 lattice keep membership tests and expected
# values free of rounding concerns
lattice = st.integers(-96, 96).map(lambda k: k / 16.0)
interval_lists = st.lists(
    st.tuples(lattice, lattice).map(lambda ab: (min(ab), max(ab))),
    min_size=1,
    max_size=5,
)


class TestBuild:
    def test_isolated_points(self):
        ts = build_time_scale([(0, 0), (1, 1), (2, 2)])
        assert ts.components == ((0.0, 0.0), (1.0, 1.0), (2.0, 2.0))
        assert ts.min == 0.0
        assert ts.max == 2.0
        assert ts.is_discrete

    def test_touching_intervals_merge(self):
        ts = build_time_scale([(0, 1), (1, 2)])
        assert ts.components == ((0.0, 2.0),)

    def test_overlapping_intervals_merge(self):
        ts = build_time_scale([(0, 2), (1, 3)])
        assert ts.components == ((0.0, 3.0),)

    def test_unsorted_input_is_sorted(self):
        ts = build_time_scale([(3, 4), (0, 0)])
        assert ts.components == ((0.0, 0.0), (3.0, 4.0))

    def test_empty_list_rejected(self):
        with pytest.raises(InputError):
            build_time_scale([])

    def test_nonfinite_endpoint_rejected(self):
        with pytest.raises(InputError):
            build_time_scale([(0, math.nan)])
        with pytest.raises(InputError):
            build_time_scale([(0, math.inf)])

    def test_reversed_pair_rejected(self):
        with pytest.raises(InputError):
            build_time_scale([(2, 1)])

    @given(interval_lists)
    def test_normalized_and_idempotent(self, intervals):
        ts = build_time_scale(intervals)
        comps = ts.components
        assert comps
        for (l1, r1), (l2, r2) in zip(comps, comps[1:]):
            assert l1 <= r1 and l2 <= r2
            assert r1 < l2  # strictly ordered, disjoint after merging
        assert ts.min == comps[0][0]
        assert ts.max == comps[-1][1]
        assert build_time_scale(comps) == ts

    def test_membership(self):
        assert 1.0 in MIXED
        assert 3.5 in MIXED
        assert 2.5 not in MIXED
        assert 4.5 not in MIXED


class TestPointInfo:
    def test_isolated_point(self):
        info = point_info(MIXED, 1.0)
        assert info.sigma == 2.0
        assert info.rho == 0.0
        assert info.mu == 1.0
        assert info.nu == 1.0
        assert info.is_isolated
        assert info.classification == ("right-scattered", "left-scattered")

    def test_interval_left_edge(self):
        info = point_info(MIXED, 3.0)
        assert info.sigma == 3.0
        assert info.rho == 2.0
        assert info.mu == 0.0
        assert info.nu == 1.0
        assert info.classification == ("right-dense", "left-scattered")

    def test_interval_interior(self):
        info = point_info(MIXED, 3.5)
        assert info.sigma == 3.5
        assert info.rho == 3.5
        assert info.mu == 0.0 and info.nu == 0.0
        assert info.is_dense

    def test_outside_point_rejected(self):
        with pytest.raises(DomainError):
            point_info(MIXED, 2.5)

    def test_extremes_clamp(self):
        assert sigma(MIXED, 4.0) == 4.0
        assert rho(MIXED, 0.0) == 0.0
        assert sigma(MIXED, 2.0) == 3.0
        assert rho(MIXED, 3.0) == 2.0

    @given(interval_lists)
    def test_jump_operators_stay_inside(self, intervals):
        ts = build_time_scale(intervals)
        candidates = set()
        for l, r in ts.components:
            candidates.update((l, r, (l + r) / 2))
        for t in candidates:
            info = point_info(ts, t)
            assert info.sigma in ts and info.rho in ts
            assert info.rho <= t <= info.sigma
            assert info.mu == info.sigma - t
            assert info.nu == t - info.rho
            # composing the jumps can never skip past t
            assert rho(ts, info.sigma) <= t <= sigma(ts, info.rho)
            assert info.right_scattered == (info.mu > 0)
            assert info.left_scattered == (info.nu > 0)


class TestKappaRestrictions:
    def test_discrete_scale(self):
        ks = kappa_restrictions(pts_scale(0, 1, 2))
        assert ks.upper == pts_scale(0, 1)
        assert ks.lower == pts_scale(1, 2)
        assert ks.both == pts_scale(1)

    def test_dense_scale_unchanged(self):
        ts = build_time_scale([(0, 1)])
        ks = kappa_restrictions(ts)
        assert ks.upper == ts and ks.lower == ts and ks.both == ts

    def test_left_dense_max_kept(self):
        ts = build_time_scale([(0, 0), (1, 2)])
        ks = kappa_restrictions(ts)
        assert ks.upper == ts
        assert ks.lower == build_time_scale([(1, 2)])
        assert ks.both == build_time_scale([(1, 2)])

    def test_two_isolated_points_empty_intersection(self):
        ks = kappa_restrictions(pts_scale(0, 1))
        assert ks.upper == pts_scale(0)
        assert ks.lower == pts_scale(1)
        assert ks.both is None


class TestGrid:
    def test_discrete_any_step(self):
        assert grid(pts_scale(0, 1, 2), 10.0) == [0.0, 1.0, 2.0]

    def test_uniform_subdivision(self):
        assert grid(build_time_scale([(0, 1)]), 0.5) == [0.0, 0.5, 1.0]

    def test_mixed(self):
        assert grid(build_time_scale([(0, 0), (2, 3)]), 1.0) == [0.0, 2.0, 3.0]

    def test_nonpositive_step_rejected(self):
        with pytest.raises(InputError):
            grid(pts_scale(0, 1), 0.0)

    @given(interval_lists, st.floats(min_value=0.05, max_value=2.0))
    def test_grid_contract(self, intervals, step):
        ts = build_time_scale(intervals)
        pts = grid(ts, step)
        assert pts[0] == ts.min and pts[-1] == ts.max
        assert all(u < v for u, v in zip(pts, pts[1:]))
        for t in pts:
            assert t in ts
        # spacing cap applies inside each component
        for l, r in ts.components:
            inside = [t for t in pts if l <= t <= r]
            for u, v in zip(inside, inside[1:]):
                assert v - u <= step + 1e-12

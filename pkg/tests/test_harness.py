"""Instance generation, the independent oracle, and the suite runner."""

import json

import pytest
from hypothesis import given, strategies as st

from tscalc import (
    FuzzConfig,
    InputError,
    QuadratureConfig,
    build_time_scale,
    diamond,
    discrete_oracle,
    gen_instance,
    grid,
    integrate,
    make_report,
    run_suite,
    summary_to_json,
)
from tscalc.harness import _shrink, holder_bound_constant


def pts_scale(*pts):
    return build_time_scale([(p, p) for p in pts])


lattice_points = st.sets(
    st.integers(-96, 96).map(lambda k: k / 16.0), min_size=2, max_size=10
).map(sorted)


class TestDiscreteOracle:
    def test_defining_sums(self):
        ts = pts_scale(0, 1, 2, 3)
        assert discrete_oracle(ts, lambda t: t, 0, 3, 0.5) == 4.5
        assert discrete_oracle(ts, lambda t: 0.0, 0, 3, 0.5) == 0.0
        assert discrete_oracle(ts, lambda t: t, 1, 1, 0.5) == 0.0

    def test_dense_scale_rejected(self):
        ts = build_time_scale([(0, 1), (2, 2)])
        with pytest.raises(InputError):
            discrete_oracle(ts, lambda t: t, 0, 2, 0.5)

    def test_limits_must_be_points(self):
        ts = pts_scale(0, 1, 2)
        with pytest.raises(InputError):
            discrete_oracle(ts, lambda t: t, 0.5, 2, 0.5)
        with pytest.raises(InputError):
            discrete_oracle(ts, lambda t: t, 2, 0, 0.5)

    @given(lattice_points, st.data())
    def test_agrees_with_the_engine(self, pts, data):
        ts = pts_scale(*pts)
        n = len(pts)
        vals = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        alpha = data.draw(st.sampled_from([0.0, 0.3, 0.5, 1.0]))
        table = dict(zip(pts, vals))
        f = table.__getitem__
        want = discrete_oracle(ts, f, pts[0], pts[-1], alpha)
        got = integrate(ts, f, pts[0], pts[-1], diamond(alpha))
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


class TestFuzzConfig:
    def test_defaults(self):
        cfg = FuzzConfig()
        assert cfg.seed == 42
        assert cfg.instances == 10_000
        assert cfg.max_points == 6
        assert not cfg.allow_dense

    def test_validation(self):
        with pytest.raises(InputError):
            FuzzConfig(instances=-1)
        with pytest.raises(InputError):
            FuzzConfig(max_points=17)
        with pytest.raises(InputError):
            FuzzConfig(max_points=1)
        with pytest.raises(InputError):
            FuzzConfig(value_range=(0.0, 1.0))
        with pytest.raises(InputError):
            FuzzConfig(p_range=(1.0, 2.0))
        with pytest.raises(InputError):
            FuzzConfig(alpha_set=())
        with pytest.raises(InputError):
            FuzzConfig(alpha_set=(0.5, 1.5))


class TestGenInstance:
    def test_deterministic_in_seed_and_index(self):
        cfg = FuzzConfig(seed=7, instances=10)
        for index in range(6):
            a = gen_instance(cfg, index)
            b = gen_instance(cfg, index)
            assert a.scale == b.scale
            assert a.alpha == b.alpha
            assert a.pair.p == b.pair.p
            assert a.labels == b.labels
            assert a.young_pairs == b.young_pairs
            assert a.witness_consts == b.witness_consts
            pts = [l for l, _ in a.scale.components]
            for t in pts:
                assert a.f(t) == b.f(t)
                assert a.phi(t) == b.phi(t)
                for s in pts:
                    assert a.kernel(t, s) == b.kernel(t, s)

    def test_distinct_indexes_differ(self):
        cfg = FuzzConfig(seed=7)
        scales = {gen_instance(cfg, i).scale for i in range(8)}
        assert len(scales) > 1

    def test_point_budget_respected(self):
        cfg = FuzzConfig(seed=3, max_points=3)
        for i in range(30):
            inst = gen_instance(cfg, i)
            assert inst.scale.is_discrete
            assert len(inst.scale.components) <= 3

    def test_values_land_in_range(self):
        cfg = FuzzConfig(seed=11, value_range=(0.5, 2.0))
        for i in range(20):
            inst = gen_instance(cfg, i)
            pts = grid(inst.scale, 1.0)
            for field in (inst.f, inst.g, inst.phi, inst.psi, inst.h1):
                vals = [field(t) for t in pts]
                assert min(vals) >= 0.5 - 1e-9
                assert max(vals) <= 2.0 + 1e-9

    def test_alpha_and_p_come_from_config(self):
        cfg = FuzzConfig(seed=5, alpha_set=(0.25,), p_range=(2.0, 2.5))
        for i in range(10):
            inst = gen_instance(cfg, i)
            assert inst.alpha == 0.25
            assert 2.0 <= inst.pair.p <= 2.5

    def test_dense_components_only_when_allowed(self):
        cfg = FuzzConfig(seed=9, instances=40, allow_dense=True)
        kinds = {gen_instance(cfg, i).scale.is_discrete for i in range(40)}
        assert kinds == {True, False}


class TestRunSuite:
    def test_empty_run(self):
        summary = run_suite(FuzzConfig(instances=0))
        assert summary.total == 0
        assert summary.violations == ()
        assert summary.min_rel_slack is None
        assert all(v == 0 for v in summary.per_inequality.values())

    def test_small_clean_run(self):
        summary = run_suite(FuzzConfig(seed=42, instances=150))
        assert summary.total == 150
        assert summary.violations == ()
        counts = summary.per_inequality
        for name in (
            "reverse_holder",
            "holder_2d",
            "cauchy_schwarz_2d",
            "hardy_bilinear",
            "hardy_dual",
            "hardy_bilinear_upper",
            "hardy_bilinear_lower",
            "hardy_equivalence",
            "bounded_bilinear",
            "general_bilinear",
            "equality_witness",
            "young",
            "alpha_linearity",
            "discrete_oracle",
        ):
            assert counts[name] == 150
        assert counts["product_rule"] <= 150
        # designed equality cases sit at zero slack; arithmetic noise may dip
        # a hair below it but never past the report tolerance
        assert summary.min_rel_slack >= -1e-12
        assert summary.wall_time > 0

    def test_serial_and_parallel_agree(self):
        cfg = FuzzConfig(seed=17, instances=60)
        serial = run_suite(cfg, workers=1)
        parallel = run_suite(cfg, workers=4)
        assert serial.per_inequality == parallel.per_inequality
        assert serial.min_rel_slack == parallel.min_rel_slack
        assert serial.violations == parallel.violations

    def test_repeat_runs_identical_up_to_wall_time(self):
        cfg = FuzzConfig(seed=29, instances=40)
        a = json.loads(summary_to_json(run_suite(cfg)))
        b = json.loads(summary_to_json(run_suite(cfg)))
        a.pop("wall_time"), b.pop("wall_time")
        assert a == b

    def test_corrupted_evaluator_is_caught(self):
        # meta-test: the harness must be able to fail; force every verdict
        # wrong and expect a violation avalanche
        cfg = FuzzConfig(seed=42, instances=2)
        broken = run_suite(
            cfg, _mutate_report=lambda name, r: make_report(1.0, 0.0, r.tolerance)
        )
        assert broken.violations
        assert broken.min_rel_slack == -1.0
        control = run_suite(cfg)
        assert control.violations == ()
        names = {v.name for v in broken.violations}
        assert "holder_2d" in names and "hardy_bilinear" in names
        for v in broken.violations:
            if v.scale_points is not None:
                assert len(v.scale_points) >= 2

    def test_json_field_order(self):
        payload = json.loads(summary_to_json(run_suite(FuzzConfig(instances=0))))
        assert list(payload) == [
            "seed",
            "total",
            "per_inequality",
            "min_rel_slack",
            "violations",
            "wall_time",
        ]

    def test_dense_smoke(self):
        # dense components exercise the quadrature path end to end; moderate
        # ranges keep the nested integrals cheap
        cfg = FuzzConfig(
            seed=7,
            instances=10,
            allow_dense=True,
            value_range=(0.5, 2.0),
            p_range=(1.5, 3.5),
        )
        summary = run_suite(cfg, quad=QuadratureConfig(abs_tol=1e-8))
        assert summary.violations == ()
        assert summary.total == 10


class TestShrink:
    def test_greedy_point_removal(self):
        # a synthetic check that fails exactly when the scale contains 1.0
        # shrinks down to the two-point floor and keeps the culprit
        inst = gen_instance(FuzzConfig(seed=1, max_points=6), 0)
        inst.scale = pts_scale(0.0, 1.0, 2.0, 3.0)

        bad = make_report(2.0, 1.0)

        def fn(scale):
            if 1.0 in scale:
                return [("synthetic", bad, lambda r: r.holds)]
            return [("synthetic", make_report(0.0, 1.0), lambda r: r.holds)]

        points = _shrink(inst, fn, "synthetic")
        assert points is not None
        assert len(points) == 2
        assert 1.0 in points

    def test_dense_scales_are_not_shrunk(self):
        inst = gen_instance(FuzzConfig(seed=1), 0)
        inst.scale = build_time_scale([(0, 1), (2, 2)])
        assert _shrink(inst, lambda s: [], "x") is None


class TestHolderBoundConstant:
    def test_unit_coupling_gives_measure_product(self):
        ts = pts_scale(0, 1, 2)
        c = holder_bound_constant(
            ts,
            (0.0, 2.0),
            (0.0, 2.0),
            lambda x: 1.0,
            lambda y: 1.0,
            lambda u, v: 1.0,
            lambda u: 1.0,
            lambda v: 1.0,
            pair=__import__("tscalc").HolderPair(2.0),
        )
        assert c == pytest.approx(2.0, abs=1e-12)

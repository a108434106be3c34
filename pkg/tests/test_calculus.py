"""Derivatives and integrals in all three modes, plus their algebraic rules."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from tscalc import (
    DELTA,
    NABLA,
    Alpha,
    DomainError,
    InputError,
    QuadratureConfig,
    build_time_scale,
    compose_jump,
    diamond,
    differentiate,
    double_integrate,
    integrate,
    parse_mode,
    partial_diamond,
    point_info,
    sigma,
    rho,
)

Z3 = build_time_scale([(k, k) for k in range(4)])  # {0, 1, 2, 3}
UNIT = build_time_scale([(0, 1)])
ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)


def pts_scale(*pts):
    return build_time_scale([(p, p) for p in pts])


lattice_points = st.sets(
    st.integers(-96, 96).map(lambda k: k / 16.0), min_size=2, max_size=8
).map(sorted)


def table_field(pts, values):
    mapping = dict(zip(pts, values))
    return lambda t: mapping[t]


class TestModes:
    def test_parse_mode(self):
        assert parse_mode("delta") is DELTA
        assert parse_mode("nabla") is NABLA
        assert parse_mode("diamond:0.25").alpha.value == 0.25

    def test_parse_mode_rejects_garbage(self):
        with pytest.raises(InputError):
            parse_mode("diamond:x")
        with pytest.raises(InputError):
            parse_mode("gamma")

    def test_alpha_range_checked(self):
        with pytest.raises(InputError):
            Alpha(1.5)
        with pytest.raises(InputError):
            Alpha(-0.1)
        with pytest.raises(InputError):
            diamond(math.nan)

    def test_quadrature_config_validation(self):
        with pytest.raises(InputError):
            QuadratureConfig(abs_tol=0.0)
        with pytest.raises(InputError):
            QuadratureConfig(max_depth=0)
        with pytest.raises(InputError):
            QuadratureConfig(dense_diff_step_factor=1.0)
        cfg = QuadratureConfig()
        assert cfg.abs_tol == 1e-10
        assert cfg.max_depth == 40
        assert cfg.dense_diff_step_factor == 1e-6


class TestDifferentiate:
    def test_square_at_isolated_point(self):
        sq = lambda t: t * t
        assert differentiate(Z3, sq, 1.0, DELTA) == 3.0
        assert differentiate(Z3, sq, 1.0, NABLA) == 1.0
        assert differentiate(Z3, sq, 1.0, diamond(0.5)) == 2.0

    def test_kappa_domain_enforced(self):
        sq = lambda t: t * t
        with pytest.raises(DomainError):
            differentiate(Z3, sq, 3.0, DELTA)  # left-scattered maximum
        with pytest.raises(DomainError):
            differentiate(Z3, sq, 0.0, NABLA)  # right-scattered minimum
        with pytest.raises(DomainError):
            differentiate(Z3, sq, 0.0, diamond(0.5))
        with pytest.raises(DomainError):
            differentiate(Z3, sq, 1.5, DELTA)  # not a point at all

    def test_dense_point_stencil(self):
        cube = lambda t: t**3
        for mode in (DELTA, NABLA, diamond(0.5)):
            assert differentiate(UNIT, cube, 0.5, mode) == pytest.approx(0.75, abs=1e-8)
        # one-sided stencils also work at the interval edges
        assert differentiate(UNIT, cube, 0.0, DELTA) == pytest.approx(0.0, abs=1e-8)
        assert differentiate(UNIT, cube, 1.0, NABLA) == pytest.approx(3.0, abs=1e-8)
        assert differentiate(UNIT, math.exp, 0.5, diamond(0.25)) == pytest.approx(
            math.exp(0.5), abs=1e-8
        )

    def test_diamond_is_convex_combination(self):
        f = lambda t: math.exp(0.5 * t) + t * t
        ts = build_time_scale([(0, 0), (0.5, 1.5), (2, 2), (3, 3)])
        for t in (0.5, 1.0, 2.0):
            d = differentiate(ts, f, t, DELTA)
            n = differentiate(ts, f, t, NABLA)
            for al in ALPHAS:
                assert differentiate(ts, f, t, diamond(al)) == al * d + (1 - al) * n


class TestIntegrate:
    def test_discrete_defining_sums(self):
        ident = lambda t: t
        assert integrate(Z3, ident, 0, 3, DELTA) == 3.0
        assert integrate(Z3, ident, 0, 3, NABLA) == 6.0
        assert integrate(Z3, ident, 0, 3, diamond(0.5)) == 4.5

    def test_dense_classical(self):
        sq = lambda t: t * t
        for mode in (DELTA, NABLA, diamond(0.5)):
            assert integrate(UNIT, sq, 0, 1, mode) == pytest.approx(1 / 3, abs=1e-9)

    def test_mixed_scale_jump(self):
        ts = build_time_scale([(0, 1), (2, 2)])
        one = lambda t: 1.0
        assert integrate(ts, one, 0, 2, DELTA) == pytest.approx(2.0, abs=1e-9)
        # the nabla weight at 2 is the same gap, counted from the other side
        assert integrate(ts, one, 0, 2, NABLA) == pytest.approx(2.0, abs=1e-9)

    def test_empty_range(self):
        assert integrate(Z3, lambda t: 5.0, 1, 1, DELTA) == 0.0

    def test_limit_validation(self):
        f = lambda t: t
        with pytest.raises(InputError):
            integrate(Z3, f, 0.5, 3, DELTA)
        with pytest.raises(InputError):
            integrate(Z3, f, 0, 2.5, DELTA)
        with pytest.raises(InputError):
            integrate(Z3, f, 3, 0, DELTA)

    @given(
        lattice_points,
        st.data(),
        st.sampled_from(ALPHAS),
    )
    def test_alpha_linearity_is_exact(self, pts, data, al):
        ts = pts_scale(*pts)
        vals = data.draw(
            st.lists(
                st.floats(min_value=-3, max_value=3),
                min_size=len(pts),
                max_size=len(pts),
            )
        )
        f = table_field(pts, vals)
        a, b = pts[0], pts[-1]
        d = integrate(ts, f, a, b, DELTA)
        n = integrate(ts, f, a, b, NABLA)
        assert integrate(ts, f, a, b, diamond(al)) == al * d + (1 - al) * n

    def test_degenerate_weights_bitwise(self):
        ts = build_time_scale([(0, 0), (1, 2), (3, 3)])
        f = lambda t: math.exp(t) - 0.3 * t
        assert integrate(ts, f, 0, 3, diamond(1.0)) == integrate(ts, f, 0, 3, DELTA)
        assert integrate(ts, f, 0, 3, diamond(0.0)) == integrate(ts, f, 0, 3, NABLA)

    @given(
        st.lists(st.floats(min_value=-3, max_value=3), min_size=5, max_size=5),
        st.sampled_from([DELTA, NABLA, diamond(0.5)]),
    )
    def test_dense_polynomial_reduction(self, coeffs, mode):
        def poly(t):
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * t + c
            return acc

        # antiderivative evaluated at the endpoints
        exact = sum(c / (k + 1) for k, c in enumerate(coeffs))
        assert integrate(UNIT, poly, 0, 1, mode) == pytest.approx(exact, abs=5e-10)


class TestIntegralProperties:
    """Linearity, additivity, sign, and the discrete zero biconditional."""

    @given(lattice_points, st.data())
    def test_linearity_and_additivity(self, pts, data):
        ts = pts_scale(*pts)
        n = len(pts)
        fv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        gv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        al = data.draw(st.sampled_from(ALPHAS))
        f, g = table_field(pts, fv), table_field(pts, gv)
        a, b = pts[0], pts[-1]
        mode = diamond(al)
        int_f = integrate(ts, f, a, b, mode)
        int_g = integrate(ts, g, a, b, mode)
        both = integrate(ts, lambda t: f(t) + g(t), a, b, mode)
        scaled = integrate(ts, lambda t: 2.5 * f(t), a, b, mode)
        tol = 1e-10 * max(1.0, abs(int_f), abs(int_g))
        assert abs(both - (int_f + int_g)) <= tol
        assert abs(scaled - 2.5 * int_f) <= tol
        c = data.draw(st.sampled_from(pts))
        split = integrate(ts, f, a, c, mode) + integrate(ts, f, c, b, mode)
        assert abs(split - int_f) <= tol

    @given(lattice_points, st.data())
    def test_sign_and_monotonicity(self, pts, data):
        ts = pts_scale(*pts)
        n = len(pts)
        fv = data.draw(st.lists(st.floats(0, 3), min_size=n, max_size=n))
        hv = data.draw(st.lists(st.floats(0, 3), min_size=n, max_size=n))
        al = data.draw(st.sampled_from(ALPHAS))
        f, h = table_field(pts, fv), table_field(pts, hv)
        a, b = pts[0], pts[-1]
        mode = diamond(al)
        int_f = integrate(ts, f, a, b, mode)
        assert int_f >= 0.0
        # f <= f + h pointwise
        assert int_f <= integrate(ts, lambda t: f(t) + h(t), a, b, mode) + 1e-12

    def test_zero_biconditional_discrete(self):
        # a nonnegative field integrates to zero exactly when it vanishes on
        # the points the mode actually weights: [a, b) for delta, (a, b] for
        # nabla, and all of [a, b] for a strictly interior alpha
        pts = [0.0, 0.5, 1.5, 2.0, 3.0]
        ts = pts_scale(*pts)
        a, b = 0.0, 3.0
        for mode, weighted in (
            (DELTA, pts[:-1]),
            (NABLA, pts[1:]),
            (diamond(0.5), pts),
        ):
            for support in pts:
                spike = table_field(pts, [1.0 if p == support else 0.0 for p in pts])
                value = integrate(ts, spike, a, b, mode)
                if support in weighted:
                    assert value > 0.0
                else:
                    assert value == 0.0
            assert integrate(ts, lambda t: 0.0, a, b, mode) == 0.0


class TestDerivativeRules:
    @given(lattice_points, st.data())
    def test_sum_and_constant_rules_at_scattered_points(self, pts, data):
        ts = pts_scale(*pts)
        n = len(pts)
        fv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        gv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        al = data.draw(st.sampled_from(ALPHAS))
        f, g = table_field(pts, fv), table_field(pts, gv)
        mode = diamond(al)
        for t in pts[1:-1]:
            df = differentiate(ts, f, t, mode)
            dg = differentiate(ts, g, t, mode)
            dsum = differentiate(ts, lambda u: f(u) + g(u), t, mode)
            dconst = differentiate(ts, lambda u: 2.5 * f(u), t, mode)
            scale = max(1.0, abs(df), abs(dg))
            assert abs(dsum - (df + dg)) <= 1e-12 * scale
            assert abs(dconst - 2.5 * df) <= 1e-12 * scale

    @given(lattice_points, st.data())
    def test_product_rule_at_isolated_points(self, pts, data):
        ts = pts_scale(*pts)
        n = len(pts)
        fv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        gv = data.draw(st.lists(st.floats(-3, 3), min_size=n, max_size=n))
        al = data.draw(st.sampled_from(ALPHAS))
        f, g = table_field(pts, fv), table_field(pts, gv)
        for t in pts[1:-1]:
            lhs = differentiate(ts, lambda u: f(u) * g(u), t, diamond(al))
            rhs = (
                differentiate(ts, f, t, diamond(al)) * g(t)
                + al * f(sigma(ts, t)) * differentiate(ts, g, t, DELTA)
                + (1 - al) * f(rho(ts, t)) * differentiate(ts, g, t, NABLA)
            )
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


class TestDoubleIntegrate:
    def test_lattice_sums(self):
        z2 = pts_scale(0, 1, 2)
        assert double_integrate(z2, lambda x, y: x + y, 0, 2, DELTA) == 4.0
        assert double_integrate(z2, lambda x, y: 1.0, 0, 2, DELTA) == 4.0
        assert double_integrate(z2, lambda x, y: 1.0, 0, 2, diamond(0.5)) == 4.0
        assert double_integrate(z2, lambda x, y: x * y, 0, 2, DELTA) == 1.0

    def test_dense_product(self):
        val = double_integrate(UNIT, lambda x, y: x * y, 0, 1, DELTA)
        assert val == pytest.approx(0.25, abs=1e-8)


class TestPartialDiamond:
    def test_linear_slices(self):
        prod = lambda x, y: x * y
        assert partial_diamond(Z3, prod, 1, (1.0, 2.0), 1.0) == 2.0
        assert partial_diamond(Z3, prod, 2, (2.0, 1.0), 0.0) == 2.0

    def test_constant_slice(self):
        assert partial_diamond(Z3, lambda x, y: x * x, 2, (2.0, 1.0), 0.5) == 0.0

    def test_axis_validation(self):
        with pytest.raises(InputError):
            partial_diamond(Z3, lambda x, y: x, 3, (1.0, 1.0), 0.5)

    def test_kappa_domain(self):
        with pytest.raises(DomainError):
            partial_diamond(Z3, lambda x, y: x * y, 1, (0.0, 1.0), 0.5)


class TestComposeJump:
    def test_sigma_composition(self):
        z2 = pts_scale(0, 1, 2)
        fsig = compose_jump(z2, lambda t: t, "sigma")
        assert [fsig(t) for t in (0.0, 1.0, 2.0)] == [1.0, 2.0, 2.0]

    def test_rho_composition(self):
        z2 = pts_scale(0, 1, 2)
        frho = compose_jump(z2, lambda t: t, "rho")
        assert [frho(t) for t in (0.0, 1.0, 2.0)] == [0.0, 0.0, 1.0]

    def test_dense_identity(self):
        f = lambda t: t * t + 1
        fsig = compose_jump(UNIT, f, "sigma")
        for t in (0.0, 0.25, 0.5, 1.0):
            assert fsig(t) == f(t)

    def test_which_validation(self):
        with pytest.raises(InputError):
            compose_jump(UNIT, lambda t: t, "tau")

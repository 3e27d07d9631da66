import math

import numpy as np
import pytest

from sl2geom.core import ChartPoint
from sl2geom.metric import (
    connection_table,
    constant_field,
    coordinate_to_frame,
    covariant_derivative,
    coframe_at,
    curvature,
    curvature_contact_form,
    directional_derivative,
    eta_value,
    fd_step,
    frame_at,
    frame_metric,
    frame_to_coordinate,
    g_frame,
    lie_bracket,
    metric_at,
    sasaki_data,
    sasaki_residuals,
    sectional_curvature,
)
from conftest import random_point, random_vec


def polynomial_field(coeffs):
    """Frame-component field whose entries are low-degree polynomials in
    (x, y, theta)."""

    def field(x, y, t):
        out = []
        for c in coeffs:
            out.append(c[0] + c[1] * x + c[2] * y + c[3] * t + c[4] * x * y)
        return out

    return field


def random_polynomial_field(rng):
    return polynomial_field(rng.uniform(-0.5, 0.5, (3, 5)))


class TestMetricMatrix:
    def test_riemannian_at_base_point(self):
        m = metric_at(ChartPoint(0.0, 1.0, 0.0), 1.0)
        expected = np.array([[0.5, 0.0, 0.5], [0.0, 0.25, 0.0], [0.5, 0.0, 1.0]])
        assert np.allclose(m, expected, atol=1e-15)

    def test_lorentzian_at_base_point(self):
        m = metric_at(ChartPoint(0.0, 1.0, 0.0), -1.0)
        expected = np.array([[0.0, 0.0, -0.5], [0.0, 0.25, 0.0], [-0.5, 0.0, -1.0]])
        assert np.allclose(m, expected, atol=1e-15)

    def test_signature(self, rng):
        for nu, signs in ((1.0, (3, 0)), (-1.0, (2, 1))):
            for _ in range(20):
                vals = np.linalg.eigvalsh(metric_at(random_point(rng), nu))
                assert (vals > 0).sum() == signs[0]
                assert (vals < 0).sum() == signs[1]

    def test_frame_is_pseudo_orthonormal(self, rng):
        for nu in (1.0, -1.0, 0.37):
            for _ in range(30):
                p = random_point(rng)
                m = metric_at(p, nu)
                frame = [e.components for e in frame_at(p)]
                gram = np.array([[a @ m @ b for b in frame] for a in frame])
                assert np.allclose(gram, frame_metric(nu), atol=1e-12)

    def test_rejects_zero_nu(self):
        with pytest.raises(ValueError):
            metric_at(ChartPoint(0.0, 1.0, 0.0), 0.0)


class TestFrame:
    def test_frame_at_unit_height(self):
        e1, e2, e3 = frame_at(ChartPoint(0.0, 1.0, 0.0))
        assert np.allclose(e1.components, [2.0, 0.0, -1.0])
        assert np.allclose(e2.components, [0.0, 2.0, 0.0])
        assert np.allclose(e3.components, [0.0, 0.0, 1.0])

    def test_coframe_duality(self, rng):
        for _ in range(100):
            p = random_point(rng)
            w = coframe_at(p)
            frame = [e.components for e in frame_at(p)]
            pairing = np.array([[w[i] @ frame[j] for j in range(3)] for i in range(3)])
            assert np.allclose(pairing, np.eye(3), atol=1e-14)

    def test_component_conversions_round_trip(self, rng):
        for _ in range(100):
            p = random_point(rng)
            v = random_vec(rng)
            assert np.allclose(
                coordinate_to_frame(p, frame_to_coordinate(p, v)), v, atol=1e-13
            )

    def test_e3_norm_is_nu(self, rng):
        for nu in (1.0, -1.0, 2.5):
            for _ in range(100):
                p = random_point(rng)
                m = metric_at(p, nu)
                e3 = frame_at(p)[2].components
                assert abs(e3 @ m @ e3 - nu) < 1e-12


class TestConnection:
    def test_table_entries(self):
        for nu in (1.0, -1.0):
            assert np.allclose(connection_table(1, 1, nu), [0.0, 2.0, 0.0])
            assert np.allclose(connection_table(1, 2, nu), [-2.0, 0.0, -1.0])
            assert np.allclose(connection_table(2, 2, nu), [0.0, 0.0, 0.0])
            assert np.allclose(connection_table(3, 2, nu), [-nu, 0.0, 0.0])
            assert np.allclose(connection_table(3, 3, nu), [0.0, 0.0, 0.0])

    def test_constant_fields_reproduce_table(self, rng):
        e = np.eye(3)
        for nu in (1.0, -1.0):
            for i in range(3):
                for j in range(3):
                    got = covariant_derivative(
                        constant_field(e[i]), constant_field(e[j]), random_point(rng), nu
                    )
                    assert np.allclose(got, connection_table(i + 1, j + 1, nu), atol=1e-12)

    def test_koszul_oracle_matches_table(self, rng):
        e = np.eye(3)
        worst = 0.0
        for nu in (1.0, -1.0):
            for _ in range(100):
                p = random_point(rng)
                for i in range(3):
                    for j in range(3):
                        oracle = covariant_derivative(
                            constant_field(e[i]), constant_field(e[j]), p, nu, method="koszul"
                        )
                        worst = max(
                            worst,
                            float(np.abs(oracle - connection_table(i + 1, j + 1, nu)).max()),
                        )
        assert worst < 1e-5

    def test_frame_bracket(self, rng):
        e = np.eye(3)
        for _ in range(30):
            p = random_point(rng)
            br = lie_bracket(constant_field(e[0]), constant_field(e[1]), p, fd_step(p))
            assert np.allclose(br, [-2.0, 0.0, -2.0], atol=1e-6)

    def test_torsion_free_on_polynomial_fields(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(20):
                u, v = random_polynomial_field(rng), random_polynomial_field(rng)
                p = random_point(rng)
                duv = covariant_derivative(u, v, p, nu)
                dvu = covariant_derivative(v, u, p, nu)
                br = lie_bracket(u, v, p, fd_step(p))
                assert np.abs(duv - dvu - br).max() < 1e-5

    def test_metric_compatibility(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(20):
                p = random_point(rng)
                u, v, w = (random_polynomial_field(rng) for _ in range(3))
                uc = frame_to_coordinate(p, np.asarray(u(p.x, p.y, p.theta)))
                gvw = lambda q: g_frame(
                    np.asarray(v(q.x, q.y, q.theta)), np.asarray(w(q.x, q.y, q.theta)), nu
                )
                lhs = directional_derivative(gvw, p, uc, fd_step(p))
                rhs = g_frame(
                    covariant_derivative(u, v, p, nu), np.asarray(w(p.x, p.y, p.theta)), nu
                ) + g_frame(
                    np.asarray(v(p.x, p.y, p.theta)), covariant_derivative(u, w, p, nu), nu
                )
                assert abs(float(lhs) - rhs) < 1e-5


class TestCurvature:
    def test_table_entries(self):
        for nu in (1.0, -1.0):
            s = 3.0 * nu + 4.0
            assert np.allclose(curvature(1, 2, 1, nu), [0.0, s, 0.0], atol=1e-12)
            assert np.allclose(curvature(1, 2, 2, nu), [-s, 0.0, 0.0], atol=1e-12)
            assert np.allclose(curvature(1, 3, 1, nu), [0.0, 0.0, -nu], atol=1e-12)
            assert np.allclose(curvature(1, 3, 3, nu), [nu * nu, 0.0, 0.0], atol=1e-12)
            assert np.allclose(curvature(2, 3, 2, nu), [0.0, 0.0, -nu], atol=1e-12)
            assert np.allclose(curvature(2, 3, 3, nu), [0.0, nu * nu, 0.0], atol=1e-12)

    def test_seven_at_riemannian_parameter(self):
        assert np.allclose(curvature(1, 2, 1, 1.0), [0.0, 7.0, 0.0])

    def test_antisymmetry(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(50):
                x, z = random_vec(rng), random_vec(rng)
                assert np.abs(curvature(x, x, z, nu)).max() < 1e-12

    def test_first_bianchi(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(100):
                x, y, z = (random_vec(rng) for _ in range(3))
                total = (
                    curvature(x, y, z, nu)
                    + curvature(y, z, x, nu)
                    + curvature(z, x, y, nu)
                )
                assert np.abs(total).max() < 1e-9

    def test_contact_form_agreement(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(200):
                x, y, z = (random_vec(rng) for _ in range(3))
                diff = curvature(x, y, z, nu) - curvature_contact_form(x, y, z, nu)
                assert np.abs(diff).max() < 1e-9

    def test_lorentzian_constant_curvature_form(self, rng):
        # At nu = -1 the closed form collapses to -(g(Y,Z)X - g(Z,X)Y).
        for _ in range(200):
            x, y, z = (random_vec(rng) for _ in range(3))
            expected = -(g_frame(y, z, -1.0) * x - g_frame(z, x, -1.0) * y)
            assert np.abs(curvature(x, y, z, -1.0) - expected).max() < 1e-9


class TestSectionalCurvature:
    def test_lorentzian_constant(self, rng):
        count = 0
        while count < 500:
            x, y = random_vec(rng), random_vec(rng)
            den = g_frame(x, x, -1.0) * g_frame(y, y, -1.0) - g_frame(x, y, -1.0) ** 2
            if abs(den) < 0.1:
                continue
            assert abs(sectional_curvature(x, y, -1.0) + 1.0) < 1e-8
            count += 1

    def test_holomorphic_planes(self, rng):
        for _ in range(100):
            a = float(rng.uniform(0.0, 2.0 * math.pi))
            x = np.array([math.cos(a), math.sin(a), 0.0])
            fx = np.array([-x[1], x[0], 0.0])
            assert abs(sectional_curvature(x, fx, 1.0) + 7.0) < 1e-8

    def test_vertical_plane(self):
        e1 = np.array([1.0, 0.0, 0.0])
        e3 = np.array([0.0, 0.0, 1.0])
        assert abs(sectional_curvature(e1, e3, 1.0) - 1.0) < 1e-12

    def test_degenerate_plane_rejected(self):
        x = np.array([1.0, 0.0, 0.0])
        with pytest.raises(ValueError):
            sectional_curvature(x, 2.0 * x, 1.0)


class TestSasaki:
    def test_reeb_pairing(self):
        d = sasaki_data(ChartPoint(0.3, 2.0, 1.0))
        assert eta_value(d.xi) == 1.0
        assert np.allclose(d.xi, [0.0, 0.0, -1.0])

    def test_f_squared_structure(self):
        d = sasaki_data(ChartPoint(0.0, 1.0, 0.0))
        f2 = d.f_operator @ d.f_operator
        assert np.allclose(f2, np.diag([-1.0, -1.0, 0.0]))

    def test_reeb_derivative_matches_table(self):
        # D_{e1} xi = -nu F e1 = -nu e2, straight from the connection table.
        from sl2geom.metric import XI, connect_constant

        for nu in (1.0, -1.0):
            e1 = np.array([1.0, 0.0, 0.0])
            got = connect_constant(e1, XI, nu)
            assert np.allclose(got, [0.0, -nu, 0.0], atol=1e-14)

    def test_all_identities_on_random_data(self, rng):
        for nu in (1.0, -1.0):
            for _ in range(200):
                res = sasaki_residuals(random_point(rng), random_vec(rng), random_vec(rng), nu)
                assert res.max() < 1e-6

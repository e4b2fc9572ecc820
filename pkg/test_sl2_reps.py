#!/usr/bin/env python3
"""
Unit tests for sl2_reps: irreducible representations and clutching degrees.

Covers the exact matrices of ρ_n, both chart sections, the winding number of
the transition function for n = 1..8 and past the float64 factorial (n = 171),
and the exterior powers Λ^k C^{n+1} for n <= 6.

Run with: python -m unittest test_sl2_reps.py -v
"""

import math
import unittest

import numpy as np
import sympy as sp

from sl2_reps import (
    CertificationError,
    ChartMismatchError,
    DegenerateRepresentationError,
    IrrepN,
    NonIntegerWindingError,
    UndersampledError,
    bracket_relations_hold,
    build_irrep,
    casimir,
    chart_parallelism,
    default_samples,
    exterior_rep,
    exterior_weight,
    grassmann_degree,
    induced_irrep,
    transition_samples,
    winding_number,
    x_chart,
    y_chart,
)


class TestIrrep(unittest.TestCase):
    def test_trivial_representation_rejected(self):
        with self.assertRaises(DegenerateRepresentationError):
            build_irrep(0)
        with self.assertRaises(ValueError):
            build_irrep(0)
        with self.assertRaises(ValueError):
            build_irrep(-2)

    def test_matrices_n2(self):
        rep = build_irrep(2)
        self.assertEqual(rep.X, sp.ImmutableMatrix([[0, 2, 0], [0, 0, 2], [0, 0, 0]]))
        self.assertEqual(rep.H, sp.ImmutableMatrix([[2, 0, 0], [0, 0, 0], [0, 0, -2]]))
        self.assertEqual(rep.Y, sp.ImmutableMatrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]]))

    def test_brackets_and_casimir(self):
        for n in range(1, 13):
            rep = build_irrep(n)
            self.assertTrue(bracket_relations_hold(rep.X, rep.H, rep.Y))
            self.assertEqual(casimir(rep), sp.eye(n + 1) * sp.Rational(n * (n + 2), 2))

    def test_broken_triple_detected(self):
        rep = build_irrep(3)
        self.assertFalse(bracket_relations_hold(2 * rep.X, rep.H, rep.Y))


class TestCharts(unittest.TestCase):
    def test_y_chart_coordinates(self):
        rep = build_irrep(4)
        z = 0.3 - 0.7j
        coords = y_chart(rep, z).coords
        expected = [z ** k / math.factorial(k) for k in range(5)]
        np.testing.assert_allclose(coords, expected, rtol=1e-14)

    def test_x_chart_coordinates(self):
        n = 5
        rep = build_irrep(n)
        w = 1.1 + 0.4j
        coords = x_chart(rep, w).coords
        for k in range(n + 1):
            coeff = math.factorial(n) // math.factorial(n - k)
            self.assertAlmostEqual(coords[n - k], coeff * w ** k, delta=1e-12 * abs(coeff * w ** k))
        self.assertAlmostEqual(coords[n - 1], n * w)

    def test_small_chart_values(self):
        np.testing.assert_allclose(y_chart(build_irrep(3), 2).coords, [1, 2, 2, 4 / 3])
        np.testing.assert_allclose(y_chart(build_irrep(2), 0).coords, [1, 0, 0])
        np.testing.assert_allclose(x_chart(build_irrep(1), 3).coords, [3, 1])
        np.testing.assert_allclose(x_chart(build_irrep(2), 1).coords[1:], [2, 1])

    def test_clutching_values(self):
        a, _ = chart_parallelism(build_irrep(3), 1.0)
        self.assertAlmostEqual(a, 6.0)
        a, _ = chart_parallelism(build_irrep(2), 1j)
        self.assertAlmostEqual(a, -2.0)

    def test_random_points_on_circle(self):
        rng = np.random.default_rng(0)
        for n in (2, 6):
            rep = build_irrep(n)
            for theta in rng.uniform(0, 2 * np.pi, 100):
                x = np.exp(1j * theta)
                a, deviation = chart_parallelism(rep, x)
                self.assertLess(deviation, 1e-9)
                self.assertLess(abs(a - math.factorial(n) * x ** n), 1e-9 * math.factorial(n))

    def test_x_chart_polynomials_have_positive_coefficients(self):
        rep = build_irrep(6)
        self.assertTrue(np.all(x_chart(rep, 1.0).coords.real > 0))

    def test_parallel_scalar(self):
        for n in (1, 3, 7):
            rep = build_irrep(n)
            x = np.exp(0.37j)
            a, deviation = chart_parallelism(rep, x)
            self.assertAlmostEqual(abs(a - math.factorial(n) * x ** n), 0.0, delta=1e-9 * math.factorial(n))
            self.assertLess(deviation, 1e-9)

    def test_large_n_charts_stay_finite(self):
        rep = build_irrep(171)
        chi = x_chart(rep, np.exp(0.3j))
        self.assertTrue(np.all(np.isfinite(chi.mantissa)))
        peak = np.max(np.abs(chi.mantissa))
        self.assertTrue(0.5 <= peak < 1.0)
        # log2(171!) is about 1026
        self.assertGreater(chi.exponent, 1000)

    def test_large_n_scalar_out_of_float_range(self):
        with self.assertRaises(CertificationError):
            chart_parallelism(build_irrep(171), np.exp(0.3j))

    def test_largest_representable_scalar(self):
        n = 170
        x = np.exp(0.3j)
        a, deviation = chart_parallelism(build_irrep(n), x)
        self.assertLess(deviation, 1e-9)
        self.assertLess(abs(a / (float(math.factorial(n)) * x ** n) - 1), 1e-9)

    def test_mismatch_detected(self):
        rep = build_irrep(2)
        broken = IrrepN(2, 2 * rep.X, rep.H, rep.Y)
        with self.assertRaises(ChartMismatchError):
            chart_parallelism(broken, np.exp(0.5j))


class TestWinding(unittest.TestCase):
    def test_degree_equals_n(self):
        for n in range(1, 9):
            rep = build_irrep(n)
            samples = transition_samples(rep)
            self.assertEqual(len(samples.points), default_samples(n))
            self.assertLess(samples.max_residual, 1e-9)
            self.assertEqual(winding_number(samples), n)

    def test_doubling_samples_keeps_degree(self):
        for n in (2, 5, 8):
            rep = build_irrep(n)
            self.assertEqual(winding_number(transition_samples(rep, 2 * default_samples(n))), n)

    def test_default_samples(self):
        self.assertEqual(default_samples(5), 1024)
        self.assertEqual(default_samples(100), 1600)

    def test_too_few_samples(self):
        with self.assertRaises(UndersampledError):
            transition_samples(build_irrep(4), 16)

    def test_negative_winding_of_raw_samples(self):
        k = np.arange(64)
        self.assertEqual(winding_number(np.exp(-2j * np.pi * 3 * k / 64)), -3)

    def test_half_turn_step_is_ambiguous(self):
        with self.assertRaises(UndersampledError):
            winding_number(np.array([1.0, -1.0], dtype=complex))

    def test_constant_loop(self):
        self.assertEqual(winding_number(np.ones(32, dtype=complex)), 0)

    def test_degree_beyond_float_factorial(self):
        n = 171
        samples = transition_samples(build_irrep(n), 8 * n)
        self.assertGreater(samples.exponent, 0)
        self.assertTrue(np.all(np.isfinite(samples.points)))
        self.assertLess(samples.max_residual, 1e-9)
        self.assertEqual(winding_number(samples), n)

    def test_non_finite_sample_rejected(self):
        with self.assertRaises(NonIntegerWindingError):
            winding_number(np.array([1.0, np.nan, -1.0j], dtype=complex))

    def test_zero_sample_rejected(self):
        with self.assertRaises(NonIntegerWindingError):
            winding_number(np.array([1.0, 0.0, -1.0j], dtype=complex))


class TestExteriorPowers(unittest.TestCase):
    def test_exterior_weight(self):
        self.assertEqual(exterior_weight(3, 2), 4)
        self.assertEqual(exterior_weight(6, 3), 12)
        self.assertEqual(exterior_weight(5, 3), 9)
        for n in range(1, 10):
            for k in range(1, n + 1):
                self.assertEqual(exterior_weight(n, k), exterior_weight(n, n + 1 - k))
        for n, k in [(3, 0), (3, 4)]:
            with self.assertRaises(ValueError):
                exterior_weight(n, k)

    def test_cyclic_span_dimension(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                ext = exterior_rep(n, k)
                m = k * (n - k + 1)
                self.assertEqual(ext.weight, m)
                self.assertEqual(ext.span_dim, m + 1, f"n={n} k={k}")
                self.assertEqual(ext.dimension, math.comb(n + 1, k))
                self.assertTrue((ext.X * ext.xi).is_zero_matrix)
                self.assertTrue(bracket_relations_hold(*ext.restricted))

    def test_full_exterior_action_is_a_representation(self):
        ext = exterior_rep(4, 2)
        self.assertTrue(bracket_relations_hold(ext.X, ext.H, ext.Y))

    def test_induced_irrep(self):
        rep = induced_irrep(exterior_rep(3, 2))
        self.assertEqual(rep.n, 4)
        self.assertEqual(rep, build_irrep(4))

    def test_induced_winding(self):
        self.assertEqual(grassmann_degree(3, 2), 4)
        for n in range(1, 7):
            for k in range(1, n + 1):
                self.assertEqual(grassmann_degree(n, k), k * (n - k + 1), f"n={n} k={k}")


if __name__ == "__main__":
    unittest.main()

#!/usr/bin/env python3
"""
Unit tests for root_core: root system construction and exact pairings.

Covers root counts against the closed forms, the highest-root marks of every
family, reflection closure, the two evaluations of ω_j(H_α^∨), chamber roots
and dominantization.

Run with: python -m unittest test_root_core.py -v
"""

import unittest
from fractions import Fraction

from root_core import (
    LONG,
    SHORT,
    ConsistencyError,
    LieType,
    RankDomainError,
    Root,
    basic_weights,
    build_type,
    cartan_matrix,
    dominant_short_root,
    dominantize,
    highest_root,
    is_chamber_closure,
    killing_number,
    labeling_note,
    reflect,
    root_count,
    support,
    weight_pairing,
    weight_pairing_direct,
    weyl_orbit_count,
)


def admissible_types(max_rank=8):
    """Every admissible (family, rank) with rank <= max_rank."""
    types = [("A", l) for l in range(1, max_rank + 1)]
    types += [("B", l) for l in range(2, max_rank + 1)]
    types += [("C", l) for l in range(3, max_rank + 1)]
    types += [("D", l) for l in range(4, max_rank + 1)]
    types += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    return types


def expected_marks(family, l):
    if family == "A":
        return (1,) * l
    if family == "B":
        return (1,) + (2,) * (l - 1)
    if family == "C":
        return (2,) * (l - 1) + (1,)
    if family == "D":
        return (1,) + (2,) * (l - 3) + (1, 1)
    return {
        ("E", 6): (1, 2, 3, 2, 1, 2),
        ("E", 7): (1, 2, 3, 4, 3, 2, 2),
        ("E", 8): (2, 3, 4, 5, 6, 4, 2, 3),
        ("F", 4): (2, 3, 4, 2),
        ("G", 2): (2, 3),
    }[(family, l)]


class TestLieType(unittest.TestCase):
    def test_inadmissible_pairs_rejected(self):
        for family, rank in [("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 5), ("G", 3), ("B", 1), ("H", 3), ("A", 0)]:
            with self.subTest(family=family, rank=rank):
                with self.assertRaises(RankDomainError):
                    LieType(family, rank)

    def test_lowercase_family_is_normalized(self):
        self.assertEqual(str(LieType("c", 4)), "C4")

    def test_simply_laced(self):
        self.assertTrue(LieType("E", 7).simply_laced)
        self.assertFalse(LieType("F", 4).simply_laced)


class TestRootSystemConstruction(unittest.TestCase):
    def test_root_counts_match_closed_form(self):
        for family, l in admissible_types():
            with self.subTest(type=f"{family}{l}"):
                sys_ = build_type(family, l)
                self.assertEqual(len(sys_.all_roots), root_count(sys_.type))
                self.assertEqual(len(sys_.positive_roots) * 2, len(sys_.all_roots))

    def test_known_counts(self):
        self.assertEqual(len(build_type("E", 8).all_roots), 240)
        self.assertEqual(len(build_type("G", 2).all_roots), 12)
        self.assertEqual(len(build_type("B", 3).all_roots), 18)
        self.assertEqual(len(build_type("D", 5).all_roots), 40)

    def test_highest_root_marks(self):
        for family, l in admissible_types():
            with self.subTest(type=f"{family}{l}"):
                mu = highest_root(build_type(family, l))
                self.assertEqual(mu.coeffs, expected_marks(family, l))
                self.assertEqual(mu.length_class, LONG)

    def test_reflection_closure(self):
        for family, l in [("B", 4), ("C", 3), ("E", 6), ("F", 4), ("G", 2)]:
            sys_ = build_type(family, l)
            for alpha in sys_.all_roots:
                for i in range(1, l + 1):
                    image = reflect(sys_, i, alpha)
                    self.assertIn(image, sys_)
                    self.assertEqual(image.length_class, alpha.length_class)

    def test_root_reflection_closure(self):
        for family, l in admissible_types():
            sys_ = build_type(family, l)
            with self.subTest(type=f"{family}{l}"):
                # r_{-α} = r_α
                for alpha in sys_.positive_roots:
                    for beta in sys_.all_roots:
                        k = killing_number(sys_, beta, alpha)
                        image = tuple(b - k * a for a, b in zip(alpha.coeffs, beta.coeffs))
                        self.assertIsNotNone(sys_.lookup(image), f"r_{alpha}({beta})")

    def test_simple_reflection_negates_simple_root(self):
        sys_ = build_type("A", 2)
        self.assertEqual(reflect(sys_, 1, sys_.simple[0]).coeffs, (-1, 0))

    def test_positive_roots_ordered_by_height(self):
        heights = [r.height for r in build_type("F", 4).positive_roots]
        self.assertEqual(heights, sorted(heights))
        self.assertEqual(heights[-1], 11)

    def test_lookup_rejects_non_roots(self):
        sys_ = build_type("A", 3)
        self.assertIsNone(sys_.lookup((1, 0, 1)))
        self.assertIsNotNone(sys_.lookup((1, 1, 1)))


class TestPairings(unittest.TestCase):
    def test_cartan_matrices(self):
        self.assertEqual(cartan_matrix(build_type("A", 2)), [[2, -1], [-1, 2]])
        self.assertEqual(cartan_matrix(build_type("C", 3)), [[2, -1, 0], [-1, 2, -1], [0, -2, 2]])
        self.assertEqual(cartan_matrix(build_type("G", 2)), [[2, -3], [-1, 2]])

    def test_killing_numbers_g2(self):
        sys_ = build_type("G", 2)
        a1, a2 = sys_.simple
        self.assertEqual(killing_number(sys_, a1, a2), -3)
        self.assertEqual(killing_number(sys_, a2, a1), -1)
        self.assertEqual(killing_number(sys_, a1, a1), 2)

    def test_basic_weights_a2(self):
        weights = basic_weights(build_type("A", 2))
        self.assertEqual(weights[0], [Fraction(2, 3), Fraction(1, 3)])
        self.assertEqual(weights[1], [Fraction(1, 3), Fraction(2, 3)])

    def test_basic_weights_g2_are_integral(self):
        # the root lattice is the weight lattice for G2
        self.assertEqual(basic_weights(build_type("G", 2)), [[2, 3], [1, 2]])

    def test_shortcut_matches_direct_evaluation(self):
        for family, l in admissible_types():
            sys_ = build_type(family, l)
            for alpha in sys_.positive_roots:
                for j in range(1, l + 1):
                    self.assertEqual(weight_pairing(sys_, j, alpha), weight_pairing_direct(sys_, j, alpha),
                                     f"{family}{l} {alpha} j={j}")

    def test_pairings_of_chamber_roots(self):
        g2 = build_type("G", 2)
        self.assertEqual([weight_pairing(g2, j, highest_root(g2)) for j in (1, 2)], [2, 1])
        self.assertEqual([weight_pairing(g2, j, dominant_short_root(g2)) for j in (1, 2)], [3, 2])

        f4 = build_type("F", 4)
        self.assertEqual([weight_pairing(f4, j, highest_root(f4)) for j in range(1, 5)], [2, 3, 2, 1])
        self.assertEqual([weight_pairing(f4, j, dominant_short_root(f4)) for j in range(1, 5)], [2, 4, 3, 2])

    def test_weight_pairing_requires_positive_root(self):
        sys_ = build_type("A", 2)
        with self.assertRaises(RankDomainError):
            weight_pairing(sys_, 1, sys_.all_roots[-1])

    def test_weight_pairing_index_range(self):
        sys_ = build_type("A", 2)
        with self.assertRaises(RankDomainError):
            weight_pairing(sys_, 3, sys_.simple[0])

    def test_foreign_root_rejected(self):
        sys_ = build_type("A", 2)
        with self.assertRaises(RankDomainError):
            killing_number(sys_, Root((1, 1, 1), LONG), sys_.simple[0])


class TestChamberRoots(unittest.TestCase):
    def test_dominant_short_roots(self):
        self.assertEqual(dominant_short_root(build_type("G", 2)).coeffs, (1, 2))
        self.assertEqual(dominant_short_root(build_type("B", 3)).coeffs, (1, 1, 1))
        self.assertEqual(dominant_short_root(build_type("C", 4)).coeffs, (1, 2, 2, 1))
        self.assertEqual(dominant_short_root(build_type("F", 4)).coeffs, (1, 2, 3, 2))
        self.assertIsNone(dominant_short_root(build_type("E", 6)))

    def test_chamber_closure(self):
        sys_ = build_type("A", 2)
        self.assertTrue(is_chamber_closure(sys_, highest_root(sys_)))
        self.assertFalse(is_chamber_closure(sys_, sys_.simple[0]))

    def test_weyl_orbit_count(self):
        self.assertEqual(weyl_orbit_count(build_type("D", 5)), 1)
        self.assertEqual(weyl_orbit_count(build_type("B", 5)), 2)

    def test_dominantize_lands_on_chamber_root(self):
        for family, l in [("B", 3), ("C", 4), ("F", 4), ("G", 2), ("E", 6)]:
            sys_ = build_type(family, l)
            targets = {LONG: highest_root(sys_), SHORT: dominant_short_root(sys_)}
            for alpha in sys_.positive_roots:
                dominant, word = dominantize(sys_, alpha)
                self.assertEqual(dominant, targets[alpha.length_class], f"{family}{l} {alpha}")
                image = alpha
                for i in word:
                    image = reflect(sys_, i, image)
                self.assertEqual(image, dominant)

    def test_support(self):
        sys_ = build_type("B", 3)
        self.assertEqual(support(highest_root(sys_)), frozenset({1, 2, 3}))
        with self.assertRaises(RankDomainError):
            support(sys_.all_roots[-1])


class TestLabels(unittest.TestCase):
    def test_root_labels(self):
        self.assertEqual(Root((1, 2), SHORT).label(), "α1+2α2")
        self.assertEqual(Root((-1, -2), SHORT).label(), "-(α1+2α2)")
        self.assertEqual(Root((0, -1), SHORT).label(), "-α2")

    def test_labeling_note_only_for_g2(self):
        self.assertIn("α1 is long", labeling_note(LieType("G", 2)))
        self.assertEqual(labeling_note(LieType("F", 4)), "")

    def test_consistency_error_is_runtime_error(self):
        self.assertTrue(issubclass(ConsistencyError, RuntimeError))


if __name__ == "__main__":
    unittest.main()

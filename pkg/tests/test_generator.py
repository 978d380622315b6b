"""
Unit tests for the witness constructions.
"""

import os
import sys
import unittest
from itertools import combinations

import numpy as np
import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import ParameterError
from colouring.validation import validate
from generator.affine import affine_plane, affine_tree_cover_colouring, is_prime, turan_affine_colouring
from generator.bipartite import (
    bipartite_subsets_colouring,
    bipartite_tuples_colouring,
    disjoint_tuples,
    tuple_lower_bound,
    tuples_matching_cover,
    tuples_side_size,
)
from generator.codes import code_colouring, distance_code, distance_matrix, min_distance
from generator.complete import (
    loboco_colouring,
    path_lb_class_sizes,
    path_partition_lb_colouring,
    two_missing_colouring,
)
from generator.cycles import doubling_cycle_colouring
from ramsey.detect import has_mono_subgraph
from ramsey.target import TargetGraph
from solver.exact import exact_tree_cover, verify_cover


class TestAffine(unittest.TestCase):
    """Affine planes of prime order."""

    def test_primes(self):
        self.assertEqual([q for q in range(12) if is_prime(q)], [2, 3, 5, 7, 11])
        with self.assertRaises(ParameterError):
            affine_plane(4)

    def test_every_pair_on_one_line(self):
        plane = affine_plane(3)
        self.assertEqual(len(plane.lines()), 12)
        for p1, p2 in combinations(plane.points, 2):
            classes = [i for i, cls in enumerate(plane.parallel_classes)
                       for line in cls if p1 in line and p2 in line]
            self.assertEqual(classes, [plane.line_class(p1, p2)])

    def test_tree_cover_colouring(self):
        colouring = affine_tree_cover_colouring(3)
        self.assertEqual(colouring.describe(), "(4,1)-colouring of K_9")
        self.assertEqual(validate(colouring), [])
        value, certificate = exact_tree_cover(colouring)
        self.assertEqual(value, 3)
        self.assertEqual(verify_cover(colouring, certificate), [])

    def test_turan_colouring_has_no_large_clique(self):
        for q in (2, 3):
            with self.subTest(q=q):
                colouring = turan_affine_colouring(q)
                self.assertEqual(validate(colouring), [])
                self.assertIsNone(has_mono_subgraph(colouring, TargetGraph.clique(q + 1)))
                self.assertIsNotNone(has_mono_subgraph(colouring, TargetGraph.clique(q)))


class TestCompleteConstructions(unittest.TestCase):

    def test_two_missing(self):
        colouring = two_missing_colouring(5)
        self.assertEqual((colouring.r, colouring.k, colouring.n), (5, 3, 5))
        self.assertEqual(colouring.colour_set(0, 1), 0b11100)
        self.assertEqual(exact_tree_cover(colouring)[0], 2)
        with self.assertRaises(ParameterError):
            two_missing_colouring(2)

    def test_path_lb_class_sizes(self):
        self.assertEqual(path_lb_class_sizes(2), (1, 3))
        self.assertEqual(path_lb_class_sizes(3), (1, 3, 6))

    def test_path_lb_colouring(self):
        colouring = path_partition_lb_colouring(2)
        self.assertEqual(validate(colouring), [])
        # vertex 0 reaches the rest in colour 1, the class {1,2,3} is a colour-0 triangle
        self.assertEqual(colouring.colour_set(0, 2), 0b10)
        self.assertEqual(colouring.colour_set(1, 3), 0b01)
        self.assertEqual(path_partition_lb_colouring(3).n, 10)

    def test_loboco(self):
        colouring = loboco_colouring(2, 2, 6)
        self.assertEqual(colouring.describe(), "(6,2)-colouring of K_6")
        self.assertEqual(validate(colouring), [])
        self.assertGreaterEqual(exact_tree_cover(colouring)[0], 2)
        with self.assertRaises(ParameterError):
            loboco_colouring(3, 1, 5)


class TestBipartiteConstructions(unittest.TestCase):

    def test_subsets(self):
        colouring = bipartite_subsets_colouring(4, 2, 3)
        self.assertEqual((colouring.host.n, colouring.host.m), (6, 3))
        self.assertGreaterEqual(exact_tree_cover(colouring)[0], 3)

    def test_disjoint_tuples(self):
        self.assertEqual(len(disjoint_tuples(4, 2, 1)), 6)
        self.assertEqual(len(disjoint_tuples(4, 1, 3)), 24)
        self.assertEqual(tuples_side_size(4, 1), 24)
        self.assertEqual(tuples_side_size(6, 2), 90)

    def test_tuples_cover_matches_lower_bound(self):
        for r, k in [(4, 2), (4, 1), (5, 2)]:
            with self.subTest(r=r, k=k):
                colouring = bipartite_tuples_colouring(r, k)
                cover = tuples_matching_cover(colouring)
                self.assertEqual(verify_cover(colouring, cover), [])
                self.assertLessEqual(cover.size, tuple_lower_bound(r, k))
                self.assertEqual(exact_tree_cover(colouring)[0], tuple_lower_bound(r, k))

    def test_tuples_need_two_blocks(self):
        with self.assertRaises(ParameterError):
            bipartite_tuples_colouring(3, 2)


class TestCodes(unittest.TestCase):

    def test_sizes_and_distance(self):
        for r, k in [(4, 2), (7, 3), (9, 3), (6, 6)]:
            with self.subTest(r=r, k=k):
                code = distance_code(r, k)
                self.assertEqual(code.shape, (2 ** ((r - 1) // (k - 1)), r))
                self.assertGreaterEqual(min_distance(code), k)
                self.assertEqual(len({tuple(w) for w in code}), len(code))

    def test_distance_matrix(self):
        code = np.array([[0, 0, 0], [1, 1, 0]], dtype=np.uint8)
        self.assertEqual(distance_matrix(code).tolist(), [[0, 2], [2, 0]])

    def test_colouring_avoids_odd_cycles(self):
        colouring = code_colouring(distance_code(4, 2), 2)
        self.assertEqual(colouring.describe(), "(4,2)-colouring of K_8")
        self.assertIsNone(has_mono_subgraph(colouring, TargetGraph.odd_cycle(3)))
        self.assertIsNone(has_mono_subgraph(colouring, TargetGraph.odd_cycle(5)))

    def test_close_words_rejected(self):
        with self.assertRaises(ParameterError):
            code_colouring(np.array([[0, 0, 0], [1, 0, 0]]), 2)


@pytest.mark.parametrize("r,k,length,n", [(2, 1, 3, 4), (4, 2, 3, 4), (6, 2, 5, 16), (3, 1, 5, 16)])
def test_doubling_cycle(r, k, length, n):
    colouring = doubling_cycle_colouring(r, k, length)
    assert colouring.n == n
    assert validate(colouring) == []
    assert has_mono_subgraph(colouring, TargetGraph.odd_cycle(length)) is None


def test_doubling_rejects_even_cycles():
    with pytest.raises(ParameterError):
        doubling_cycle_colouring(4, 2, 4)


if __name__ == '__main__':
    unittest.main()

"""
Unit tests for hypergraphs, transversals and the colouring bridge.
"""

import os
import sys
import unittest

import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import ColouringParseError, ParameterError
from colouring.model import HostGraph, SetColouring
from ryser.bridge import (
    colouring_to_hypergraph,
    hypergraph_to_colouring,
    is_saturated,
    ryser_transversal,
    saturate,
)
from ryser.hypergraph import (
    Hypergraph,
    hypergraphs_isomorphic,
    intersection_level,
    is_intersecting,
    matching_number,
    parse_hypergraph,
    random_intersecting_hypergraph,
    serialize_hypergraph,
    transversal_exact,
)
from solver.exact import exact_tree_cover

# Four edges of a 3-partite hypergraph, any two meeting in exactly one part.
FANO_LIKE = Hypergraph((2, 2, 2), ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)))


class TestHypergraph(unittest.TestCase):

    def test_levels(self):
        self.assertEqual(intersection_level(FANO_LIKE), 1)
        self.assertTrue(is_intersecting(FANO_LIKE))
        disjoint = Hypergraph((2, 2), ((0, 0), (1, 1)))
        self.assertFalse(is_intersecting(disjoint))
        self.assertEqual(intersection_level(Hypergraph((2, 2), ((0, 1),))), 2)

    def test_transversal(self):
        tau, vertices = transversal_exact(FANO_LIKE)
        self.assertEqual(tau, 2)
        self.assertTrue(FANO_LIKE.is_transversal(vertices))
        self.assertEqual(matching_number(FANO_LIKE), 1)

    def test_vertex_ids(self):
        h = Hypergraph((2, 3, 1), ())
        self.assertEqual(h.vertex_id((1, 2)), 4)
        self.assertEqual(h.vertex_at(5), (2, 0))

    def test_invalid_edge(self):
        with self.assertRaises(ParameterError):
            Hypergraph((2, 2), ((0, 2),))

    def test_random_hypergraph(self):
        h = random_intersecting_hypergraph(4, 2, 6, 3, seed=7)
        self.assertEqual(h.num_edges, 6)
        self.assertEqual(len(set(h.edges)), 6)
        self.assertGreaterEqual(intersection_level(h), 2)
        self.assertEqual(h, random_intersecting_hypergraph(4, 2, 6, 3, seed=7))


class TestFormats(unittest.TestCase):

    def test_text_round_trip(self):
        text = "parts 2 2 2  # three parts\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n"
        self.assertEqual(parse_hypergraph(text), FANO_LIKE)
        self.assertEqual(parse_hypergraph(serialize_hypergraph(FANO_LIKE, as_json=True)), FANO_LIKE)

    def test_errors(self):
        for text in ("0 0\n", "parts 2 2\n0 0 0\n", "parts 2 2\n0 5\n", "parts 2 x\n"):
            with self.subTest(text=text):
                with self.assertRaises(ColouringParseError):
                    parse_hypergraph(text)


class TestBridge(unittest.TestCase):

    def test_tau_equals_tree_cover(self):
        colouring = hypergraph_to_colouring(FANO_LIKE)
        self.assertEqual(colouring.describe(), "(3,*)-colouring of K_4")
        self.assertFalse(colouring.partial)
        self.assertEqual(colouring.colour_set(0, 1), 0b001)
        self.assertEqual(exact_tree_cover(colouring)[0], transversal_exact(FANO_LIKE)[0])

    def test_non_intersecting_is_partial(self):
        colouring = hypergraph_to_colouring(Hypergraph((2, 2), ((0, 0), (1, 1), (0, 1))))
        self.assertTrue(colouring.partial)
        self.assertEqual(colouring.colour_set(0, 1), 0)

    def test_round_trip_is_isomorphic(self):
        colouring = hypergraph_to_colouring(FANO_LIKE)
        self.assertTrue(is_saturated(colouring))
        back = colouring_to_hypergraph(colouring)
        self.assertTrue(hypergraphs_isomorphic(back, FANO_LIKE))

    def test_saturate(self):
        # colour 0 on the path 0-1-2, colour 1 on 0-2
        colouring = SetColouring(HostGraph.complete(3), 2, (0b01, 0b10, 0b01), None)
        self.assertFalse(is_saturated(colouring))
        with self.assertRaises(ParameterError):
            colouring_to_hypergraph(colouring)
        closed = saturate(colouring)
        self.assertEqual(closed.colour_set(0, 2), 0b11)
        h = colouring_to_hypergraph(closed)
        self.assertEqual(h.part_sizes, (1, 2))

    def test_ryser_transversal(self):
        result = ryser_transversal(FANO_LIKE, 1)
        self.assertLessEqual(result.size, result.bound)
        self.assertEqual(result.bound, 2)
        self.assertTrue(FANO_LIKE.is_transversal(result.transversal))
        self.assertEqual(result.as_dict()["level"], 1)

    def test_ryser_needs_intersecting(self):
        with self.assertRaises(ParameterError):
            ryser_transversal(FANO_LIKE, 2)


def test_random_hypergraph_recovers_from_a_stuck_family():
    h = random_intersecting_hypergraph(3, 1, 7, 3, seed=0)
    assert h.num_edges == 7
    assert len(set(h.edges)) == 7
    assert intersection_level(h) >= 1


@pytest.mark.parametrize("r,k,edges", [(3, 1, 9), (4, 2, 9), (4, 1, 12)])
def test_random_hypergraph_core_family(r, k, edges):
    h = random_intersecting_hypergraph(r, k, edges, 3, seed=5, restarts=0)
    assert len(set(h.edges)) == edges
    assert intersection_level(h) >= k
    with pytest.raises(ParameterError):
        random_intersecting_hypergraph(r, k, 3 ** (r - k) + 1, 3, seed=5, restarts=0)


@pytest.mark.parametrize("r,k", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_random_hypergraphs(r, k):
    for seed in range(5):
        h = random_intersecting_hypergraph(r, k, 7, 3, seed=seed)
        tau, _ = transversal_exact(h)
        assert exact_tree_cover(hypergraph_to_colouring(h))[0] == tau
        result = ryser_transversal(h, k)
        assert h.is_transversal(result.transversal)
        assert tau <= result.size <= result.bound


if __name__ == '__main__':
    unittest.main()

"""
Unit tests for exact and constructive tree covers.
"""

import os
import sys
import unittest
from itertools import product

import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import BudgetExceeded, ParameterError
from colouring.model import CoverCertificate, HostGraph, MonoComponent, SetColouring
from colouring.sampling import random_colouring
from generator.complete import two_missing_colouring
from solver.constructive import (
    bipartite_bound,
    bipartite_regime,
    complete_bound,
    complete_regime,
    constructive_bound,
    constructive_cover,
    constructive_cover_bipartite,
    constructive_cover_complete,
)
from solver.exact import exact_tree_cover, is_cover, verify_cover


class TestExactTreeCover(unittest.TestCase):
    """Branch-and-bound tree cover."""

    def test_monochromatic_host_needs_one_tree(self):
        host = HostGraph.complete(5)
        colouring = SetColouring(host, 2, (0b01,) * host.num_edges, 1)
        value, certificate = exact_tree_cover(colouring)
        self.assertEqual(value, 1)
        self.assertEqual(certificate.trees[0].colour, 0)
        self.assertEqual(len(certificate.trees[0].tree_edges), 4)

    def test_single_vertex(self):
        colouring = SetColouring(HostGraph.complete(1), 2, (), 1)
        value, certificate = exact_tree_cover(colouring)
        self.assertEqual(value, 1)
        self.assertEqual(certificate.covered, 0b1)

    def test_random_certificates_verify(self):
        for seed in range(8):
            with self.subTest(seed=seed):
                colouring = random_colouring(HostGraph.complete(9), 4, 1, seed=seed)
                value, certificate = exact_tree_cover(colouring)
                self.assertEqual(certificate.size, value)
                self.assertEqual(verify_cover(colouring, certificate), [])

    def test_certificates_are_deterministic(self):
        colouring = random_colouring(HostGraph.bipartite(5, 6), 5, 2, seed=4)
        self.assertEqual(exact_tree_cover(colouring), exact_tree_cover(colouring))

    def test_allowed_colours(self):
        colouring = two_missing_colouring(5)
        value, certificate = exact_tree_cover(colouring, allowed_colours=0b00001)
        self.assertEqual(value, 2)
        self.assertTrue(all(tree.colour == 0 for tree in certificate.trees))
        with self.assertRaises(ParameterError):
            exact_tree_cover(colouring, allowed_colours=0b100000)

    def test_budget(self):
        colouring = random_colouring(HostGraph.complete(6), 3, 1, seed=2)
        with self.assertRaises(BudgetExceeded) as ctx:
            exact_tree_cover(colouring, budget=1)
        self.assertEqual(ctx.exception.budget, 1)

    def test_invalid_colouring_rejected(self):
        colouring = SetColouring(HostGraph.complete(3), 3, (0b011, 0b001, 0b110), 2)
        with self.assertRaises(ParameterError):
            exact_tree_cover(colouring)


class TestVerifyCover(unittest.TestCase):

    def setUp(self):
        # colour 0 on the path 0-1-2, colour 1 on the edge 0-2
        self.colouring = SetColouring(HostGraph.complete(3), 2, (0b01, 0b10, 0b01), 1)

    def test_valid(self):
        certificate = CoverCertificate((MonoComponent(0, 0b111, ((0, 1), (1, 2))),))
        self.assertTrue(is_cover(self.colouring, certificate))

    def test_uncovered_vertex(self):
        certificate = CoverCertificate((MonoComponent(1, 0b101, ((0, 2),)),))
        self.assertEqual(verify_cover(self.colouring, certificate), ["vertex 1 uncovered"])

    def test_wrong_colour(self):
        certificate = CoverCertificate((MonoComponent(1, 0b111, ((0, 1), (1, 2))),))
        problems = verify_cover(self.colouring, certificate)
        self.assertTrue(any("lacks colour 1" in p for p in problems))

    def test_disconnected_tree(self):
        certificate = CoverCertificate((MonoComponent(0, 0b111, ((0, 1),)),))
        self.assertFalse(is_cover(self.colouring, certificate))


def test_bounds():
    assert bipartite_bound(4, 2) == 3
    assert bipartite_bound(5, 2) == 5
    assert bipartite_bound(8, 1) == 15
    assert bipartite_bound(3, 3) == 1
    assert complete_bound(5, 2, 10) == 3
    assert complete_bound(6, 2, 10) == 4
    assert complete_bound(7, 2, 10) == 6
    assert complete_bound(4, 1, 10) == 4
    assert complete_bound(4, 1, 1) == 1


def test_regimes():
    assert bipartite_regime(6, 3) == "half or more"
    assert bipartite_regime(5, 2) == "two-k-plus-p"
    assert bipartite_regime(7, 2) == "paired stars"
    assert complete_regime(5, 2, 8) == "split"
    assert complete_regime(6, 2, 8) == "almost half"
    assert complete_regime(7, 2, 8) == "stars"


@pytest.mark.parametrize("r,k", [(5, 3), (7, 4), (7, 2), (8, 3), (4, 4), (5, 2), (7, 3)])
def test_constructive_bipartite_within_bound(r, k):
    for seed in range(10):
        colouring = random_colouring(HostGraph.bipartite(6, 7), r, k, seed=seed)
        certificate = constructive_cover_bipartite(colouring)
        assert verify_cover(colouring, certificate) == []
        assert certificate.size <= bipartite_bound(r, k)
        assert certificate.size >= exact_tree_cover(colouring)[0]


@pytest.mark.parametrize("r,k", [(7, 2), (5, 3), (4, 1), (3, 3), (5, 2), (6, 2)])
def test_constructive_complete_within_bound(r, k):
    for seed in range(10):
        colouring = random_colouring(HostGraph.complete(8), r, k, seed=seed)
        certificate = constructive_cover_complete(colouring)
        assert verify_cover(colouring, certificate) == []
        assert certificate.size <= complete_bound(r, k, 8)
        assert certificate.size >= exact_tree_cover(colouring)[0]


@pytest.mark.parametrize("r,k", [(5, 2), (7, 3)])
def test_two_k_plus_p_regime_on_bipartite_hosts(r, k):
    assert bipartite_regime(r, k) == "two-k-plus-p"
    for seed in range(15):
        colouring = random_colouring(HostGraph.bipartite(5, 5), r, k, seed=100 + seed)
        certificate = constructive_cover_bipartite(colouring)
        assert verify_cover(colouring, certificate) == []
        assert exact_tree_cover(colouring)[0] <= certificate.size <= bipartite_bound(r, k)


def test_almost_half_regime_on_complete_hosts():
    assert complete_regime(6, 2, 9) == "almost half"
    for seed in range(15):
        colouring = random_colouring(HostGraph.complete(9), 6, 2, seed=100 + seed)
        certificate = constructive_cover_complete(colouring)
        assert verify_cover(colouring, certificate) == []
        assert exact_tree_cover(colouring)[0] <= certificate.size <= complete_bound(6, 2, 9)


def test_every_three_colouring_of_k4_needs_at_most_two_trees():
    host = HostGraph.complete(4)
    worst = 0
    for sets in product((0b001, 0b010, 0b100), repeat=host.num_edges):
        value, certificate = exact_tree_cover(SetColouring(host, 3, sets, 1))
        assert certificate.size == value
        worst = max(worst, value)
    assert worst == 2


def test_constructive_dispatch():
    bipartite = random_colouring(HostGraph.bipartite(3, 3), 3, 2, seed=0)
    assert constructive_bound(bipartite) == bipartite_bound(3, 2)
    assert is_cover(bipartite, constructive_cover(bipartite))
    with pytest.raises(ParameterError):
        constructive_cover_complete(bipartite)


def test_constructive_needs_uniform_colouring():
    colouring = SetColouring(HostGraph.complete(3), 3, (0b011, 0b001, 0b110), None)
    with pytest.raises(ParameterError):
        constructive_cover_complete(colouring)


if __name__ == '__main__':
    unittest.main()

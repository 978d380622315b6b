"""
Unit tests for monochromatic path and cycle partitions.
"""

import os
import sys
import unittest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import BudgetExceeded, ParameterError
from colouring.model import HostGraph, SetColouring
from colouring.reductions import reduce_to_partition_colouring
from colouring.sampling import random_colouring
from generator.complete import path_partition_lb_colouring
from solver.partition import (
    PartitionCertificate,
    PartitionPiece,
    PieceKind,
    exact_cycle_partition,
    exact_path_partition,
    partition_from_document,
    partition_to_document,
    verify_partition,
)


def star_and_clique(n):
    """Colour 0 on the edges at vertex 0, colour 1 everywhere else."""
    return SetColouring.from_function(HostGraph.complete(n), 2, 1, lambda u, v: 0b01 if u == 0 else 0b10)


class TestPartitions(unittest.TestCase):

    def test_monochromatic_host(self):
        host = HostGraph.complete(5)
        colouring = SetColouring(host, 2, (0b10,) * host.num_edges, 1)
        for solve in (exact_path_partition, exact_cycle_partition):
            with self.subTest(solver=solve.__name__):
                value, certificate = solve(colouring)
                self.assertEqual(value, 1)
                self.assertEqual(certificate.pieces[0].colour, 1)
                self.assertEqual(sorted(certificate.pieces[0].vertices), [0, 1, 2, 3, 4])

    def test_star_and_clique(self):
        colouring = star_and_clique(6)
        for solve in (exact_path_partition, exact_cycle_partition):
            with self.subTest(solver=solve.__name__):
                value, certificate = solve(colouring)
                self.assertEqual(value, 2)
                self.assertEqual(verify_partition(colouring, certificate), [])

    def test_lower_bound_colourings(self):
        for r in (2, 3):
            with self.subTest(r=r):
                colouring = path_partition_lb_colouring(r)
                self.assertEqual(exact_path_partition(colouring)[0], 2)
                self.assertEqual(exact_cycle_partition(colouring)[0], 2)

    def test_random_certificates_verify(self):
        for seed in range(5):
            colouring = random_colouring(HostGraph.complete(8), 3, 1, seed=seed)
            paths, path_cert = exact_path_partition(colouring)
            cycles, cycle_cert = exact_cycle_partition(colouring)
            self.assertLessEqual(paths, cycles)
            self.assertEqual(verify_partition(colouring, path_cert), [])
            self.assertEqual(verify_partition(colouring, cycle_cert), [])

    def test_size_limit(self):
        colouring = random_colouring(HostGraph.complete(17), 2, 1, seed=0)
        with self.assertRaises(ParameterError):
            exact_path_partition(colouring)

    def test_budget(self):
        colouring = star_and_clique(6)
        with self.assertRaises(BudgetExceeded):
            exact_path_partition(colouring, budget=1)


class TestVerifyPartition(unittest.TestCase):

    def setUp(self):
        self.colouring = star_and_clique(4)

    def test_reused_vertex(self):
        certificate = PartitionCertificate((
            PartitionPiece(1, (1, 2, 3)),
            PartitionPiece(0, (0, 1)),
        ))
        problems = verify_partition(self.colouring, certificate)
        self.assertIn("piece 1 (path, colour 0): vertex 1 used twice", problems)

    def test_cycle_closing_edge_checked(self):
        certificate = PartitionCertificate((
            PartitionPiece(1, (1, 2, 3), PieceKind.CYCLE),
            PartitionPiece(0, (0,), PieceKind.CYCLE),
        ))
        self.assertEqual(verify_partition(self.colouring, certificate), [])
        bad = PartitionCertificate((PartitionPiece(0, (0, 1, 2), PieceKind.CYCLE), PartitionPiece(1, (3,))))
        self.assertTrue(verify_partition(self.colouring, bad))


def test_reduction_never_lowers_path_partitions():
    for seed in range(12):
        r, k = (4, 2) if seed % 2 else (5, 3)
        colouring = random_colouring(HostGraph.complete(7), r, k, seed=seed)
        paths, _ = exact_path_partition(colouring)
        cycles, _ = exact_cycle_partition(colouring)
        reduced = reduce_to_partition_colouring(colouring, range(k - 1))
        assert paths <= exact_path_partition(reduced)[0]
        assert paths <= cycles


def test_document_round_trip():
    colouring = star_and_clique(5)
    _, certificate = exact_cycle_partition(colouring)
    doc = partition_to_document(certificate).model_dump(mode="json")
    assert doc["kind"] == "partition"
    assert partition_from_document(doc) == certificate


if __name__ == '__main__':
    unittest.main()

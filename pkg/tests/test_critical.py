"""
Unit tests for critical colourings and the edge-count inequality.
"""

import os
import sys
import unittest

import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring
from colouring.sampling import random_colouring
from generator.complete import two_missing_colouring
from solver.critical import critical_report, critical_vertices_summary, lbn_inequality, vertex_bound


class TestCriticalReport(unittest.TestCase):

    def test_two_missing_is_critical(self):
        report = critical_report(two_missing_colouring(5), 2)
        self.assertEqual(report.value, 2)
        self.assertTrue(report.is_critical)
        self.assertTrue(report.injective)
        self.assertEqual(report.critical_function, {v: (v,) for v in range(5)})
        self.assertFalse(report.sees_all_colours)
        self.assertEqual(report.vertex_bound, 5)
        self.assertTrue(report.within_bound)
        self.assertIsNone(report.lbn_holds)

    def test_summary(self):
        report = critical_report(two_missing_colouring(4), 2)
        self.assertEqual(critical_vertices_summary(report), ["0: {0}", "1: {1}", "2: {2}", "3: {3}"])

    def test_monochromatic_is_not_critical(self):
        host = HostGraph.complete(4)
        colouring = SetColouring(host, 2, (0b11,) * host.num_edges, 2)
        report = critical_report(colouring, 2)
        self.assertEqual(report.value, 1)
        self.assertFalse(report.is_critical)
        self.assertEqual(report.critical_function, {})
        self.assertTrue(report.sees_all_colours)
        self.assertTrue(report.lbn_holds)
        self.assertEqual(report.as_dict()["critical_function"], {})

    def test_rejects_other_t(self):
        with self.assertRaises(ParameterError):
            critical_report(two_missing_colouring(4), 4)


@pytest.mark.parametrize("n,r,k,t,expected", [
    (10, 5, 2, 3, False),
    (11, 5, 2, 3, True),
    (5, 3, 3, 1, True),
    (4, 2, 1, 2, False),
])
def test_lbn_inequality(n, r, k, t, expected):
    assert lbn_inequality(n, r, k, t) is expected


def test_critical_function_is_injective():
    found = [critical_report(two_missing_colouring(n), 2) for n in (4, 5)]
    for seed in range(40):
        r = 3 + seed % 3
        k = 1 + seed % 2
        colouring = random_colouring(HostGraph.complete(4 + seed % 4), r, k, seed=seed)
        for t in (2, 3):
            report = critical_report(colouring, t)
            if report.is_critical:
                found.append(report)
    for report in found:
        images = list(report.critical_function.values())
        assert None not in images
        assert len(set(images)) == len(images)
        assert report.injective
        assert report.within_bound


def test_vertex_bound():
    assert vertex_bound(5, 2) == 5
    assert vertex_bound(5, 3) == 15
    assert vertex_bound(5, 3, sees_all=True) == 10


if __name__ == '__main__':
    unittest.main()

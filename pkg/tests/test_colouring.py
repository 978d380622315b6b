"""
Unit tests for the colouring data model, file formats and reductions.
"""

import os
import sys
import unittest
from itertools import combinations, product

import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.colour_set import colour_set, k_subsets, members, smallest_k
from colouring.components import component_at, mono_components, sees_all_colours
from colouring.errors import ColouringParseError, ParameterError
from colouring.io import (
    cover_from_document,
    cover_to_document,
    parse_colouring,
    parse_json,
    serialize,
)
from colouring.model import CoverCertificate, HostGraph, MonoComponent, SetColouring
from colouring.reductions import (
    delete_vertex,
    duplicate_vertex,
    missing_colour_view,
    reduce_to_partition_colouring,
    split_colours,
    star_cover,
)
from colouring.sampling import random_colouring
from colouring.unionfind import UnionFind
from colouring.validation import validate
from generator.complete import two_missing_colouring
from solver.exact import exact_tree_cover

TRIANGLE_TEXT = """\
# a 2-colouring of K_3
host complete 3
params 2 1
0 1 0
0 2 1
1 2 0
"""


def constant(n, r, k, bits):
    host = HostGraph.complete(n)
    return SetColouring(host, r, (bits,) * host.num_edges, k)


class TestColourSets(unittest.TestCase):
    """Bit-vector colour sets."""

    def test_members_round_trip(self):
        self.assertEqual(colour_set([0, 2]), 0b101)
        self.assertEqual(members(0b101), (0, 2))
        self.assertEqual(members(0), ())

    def test_k_subsets_are_lexicographic(self):
        self.assertEqual(k_subsets(3, 2), [0b011, 0b101, 0b110])
        self.assertEqual(len(k_subsets(5, 2)), 10)

    def test_smallest_k(self):
        self.assertEqual(smallest_k(0b1110, 2), 0b0110)


class TestHostGraph(unittest.TestCase):
    """Edge indexing of complete and bipartite hosts."""

    def test_edge_index_matches_edge_order(self):
        for host in (HostGraph.complete(6), HostGraph.bipartite(3, 4)):
            with self.subTest(host=host.describe()):
                for i, (u, v) in enumerate(host.edges):
                    self.assertEqual(host.edge_index(u, v), i)
                    self.assertEqual(host.edge_index(v, u), i)
                self.assertEqual(len(host.edges), host.num_edges)

    def test_complete_host_starts_with_vertex_zero(self):
        host = HostGraph.complete(5)
        self.assertEqual(host.edges[:4], ((0, 1), (0, 2), (0, 3), (0, 4)))

    def test_bipartite_sides(self):
        host = HostGraph.bipartite(2, 3)
        self.assertFalse(host.has_edge(0, 1))
        self.assertTrue(host.has_edge(1, 4))
        self.assertEqual(list(host.side_b), [2, 3, 4])
        with self.assertRaises(ParameterError):
            host.edge_index(2, 3)

    def test_invalid_hosts(self):
        with self.assertRaises(ParameterError):
            HostGraph.complete(0)
        with self.assertRaises(ParameterError):
            HostGraph.bipartite(2, 0)


class TestValidation(unittest.TestCase):

    def test_wrong_cardinality_is_reported(self):
        host = HostGraph.complete(3)
        colouring = SetColouring(host, 3, (0b011, 0b001, 0b110), 2)
        problems = validate(colouring)
        self.assertEqual(len(problems), 1)
        self.assertIn("cardinality", problems[0])

    def test_colour_out_of_range(self):
        colouring = SetColouring(HostGraph.complete(2), 2, (0b100,), 1)
        self.assertTrue(any("colour 2" in p for p in validate(colouring)))

    def test_random_colouring_is_valid_and_seeded(self):
        host = HostGraph.complete(7)
        first = random_colouring(host, 5, 2, seed=11)
        self.assertEqual(validate(first), [])
        self.assertEqual(first, random_colouring(host, 5, 2, seed=11))


class TestComponents(unittest.TestCase):

    def setUp(self):
        host = HostGraph.complete(4)
        # colour 0 only on the edge (0, 1)
        self.colouring = SetColouring.from_function(
            host, 2, 1, lambda u, v: 0b01 if (u, v) == (0, 1) else 0b10
        )

    def test_singletons_are_components(self):
        self.assertEqual(self.colouring.component_masks(0), (0b0011, 0b0100, 0b1000))
        self.assertEqual(len(mono_components(self.colouring, 0)), 3)

    def test_component_trees_span(self):
        comp = component_at(self.colouring, 1, 3)
        self.assertEqual(comp.vertices, 0b1111)
        self.assertEqual(len(comp.tree_edges), 3)

    def test_sees_all_colours(self):
        self.assertFalse(sees_all_colours(self.colouring))
        self.assertTrue(sees_all_colours(constant(3, 2, 2, 0b11)))


class TestTextFormat(unittest.TestCase):

    def test_parse_text(self):
        colouring = parse_colouring(TRIANGLE_TEXT)
        self.assertEqual(colouring.describe(), "(2,1)-colouring of K_3")
        self.assertEqual(colouring.colour_set(2, 0), 0b10)

    def test_text_and_json_agree(self):
        colouring = parse_colouring(TRIANGLE_TEXT)
        self.assertEqual(parse_colouring(serialize(colouring)), colouring)
        self.assertEqual(parse_json(serialize(colouring, as_json=True)), colouring)

    def test_duplicate_edge_reports_line(self):
        with self.assertRaises(ColouringParseError) as ctx:
            parse_colouring(TRIANGLE_TEXT + "1 0 1\n")
        self.assertEqual(ctx.exception.line, 7)

    def test_missing_edge(self):
        text = "host complete 3\nparams 2 1\n0 1 0\n0 2 1\n"
        with self.assertRaises(ColouringParseError):
            parse_colouring(text)

    def test_generalized_colouring(self):
        text = "host bipartite 1 2\nparams 3 *\n0 1 0\n0 2 0,1,2\n"
        colouring = parse_colouring(text)
        self.assertIsNone(colouring.k)
        self.assertEqual(colouring.colour_set(0, 2), 0b111)


@pytest.mark.parametrize("text,field", [
    ("host complete 3\nparams 2 3\n", "k"),
    ("host complete 2\nparams 2 1\n0 1 5\n", "colours"),
    ("host complete 2\nparams 2 2\n0 1 1,0\n", "colours"),
    ("host triangle 3\n", "host"),
    ("host complete 2\nparams 2 1\n0 x 0\n", "v"),
    ("host complete 3 4\nparams 2 1\n", "m"),
])
def test_parse_errors_name_the_field(text, field):
    with pytest.raises(ColouringParseError) as info:
        parse_colouring(text)
    assert info.value.field == field


def test_cover_document_round_trip():
    certificate = CoverCertificate((MonoComponent(1, 0b0111, ((0, 1), (0, 2))), MonoComponent(0, 0b1000)))
    doc = cover_to_document(certificate).model_dump()
    assert doc["kind"] == "tree-cover"
    assert cover_from_document(doc) == certificate


def test_cover_document_rejects_vertices_out_of_range():
    doc = {"kind": "tree-cover", "size": 1, "trees": [{"colour": 0, "vertices": [-2, 0]}]}
    with pytest.raises(ColouringParseError) as info:
        cover_from_document(doc)
    assert info.value.field == "vertices"

    doc = {"kind": "tree-cover", "size": 1, "trees": [{"colour": 0, "vertices": [0, 3], "tree_edges": [[0, 3]]}]}
    assert cover_from_document(doc).size == 1
    with pytest.raises(ColouringParseError):
        cover_from_document(doc, num_vertices=3)


def test_two_missing_colour_zero_components():
    # edge v_i v_j carries every colour but i and j
    components = mono_components(two_missing_colouring(4), 0)
    assert sorted(c.vertices for c in components) == [0b0001, 0b1110]
    singleton = next(c for c in components if c.vertices == 0b0001)
    assert singleton.tree_edges == ()


def test_reduce_keeps_smallest_survivor_on_triangle():
    colouring = SetColouring(HostGraph.complete(3), 3, (0b011, 0b101, 0b110), 2)
    reduced = reduce_to_partition_colouring(colouring, [0])
    # survivors 1, 2, 1 become 0, 1, 0 after re-indexing
    assert reduced.colours == (0b01, 0b10, 0b01)
    for c in range(reduced.r):
        for piece in reduced.component_masks(c):
            assert any(piece & ~whole == 0 for d in range(colouring.r) for whole in colouring.component_masks(d))


@pytest.mark.parametrize("seed", range(6))
def test_split_and_duplicate_keep_tree_cover(seed):
    partition = random_colouring(HostGraph.complete(6), 3, 1, seed=seed)
    value, _ = exact_tree_cover(partition)
    assert exact_tree_cover(split_colours(partition, 2))[0] == value
    for v in (0, 5):
        for cross in (0b001, 0b100):
            assert exact_tree_cover(duplicate_vertex(partition, v, cross))[0] == value

    bipartite = random_colouring(HostGraph.bipartite(3, 4), 4, 2, seed=seed)
    value, _ = exact_tree_cover(bipartite)
    assert exact_tree_cover(duplicate_vertex(bipartite, 0))[0] == value
    assert exact_tree_cover(duplicate_vertex(bipartite, 6))[0] == value


@pytest.mark.parametrize("r", [2, 3, 4])
def test_star_cover_on_every_small_star(r):
    host = HostGraph.bipartite(1, 3)
    for k in range(1, r + 1):
        for sets in product(k_subsets(r, k), repeat=host.num_edges):
            colouring = SetColouring(host, r, sets, k)
            for pool in combinations(range(r), r - k + 1):
                cover = star_cover(colouring, 0, pool)
                colours = [tree.colour for tree in cover.trees]
                assert cover.size <= r - k + 1
                assert cover.covered == 0b1111
                assert len(set(colours)) == len(colours)
                assert set(colours) <= set(pool)


def test_star_cover_on_twelve_leaves():
    for seed in range(20):
        colouring = random_colouring(HostGraph.bipartite(1, 12), 4, 2, seed=seed)
        cover = star_cover(colouring, 0, [1, 2, 3])
        assert cover.size <= 3
        assert cover.covered == colouring.host.all_vertices


class TestReductions(unittest.TestCase):

    def test_split_colours(self):
        partition = parse_colouring(TRIANGLE_TEXT)
        split = split_colours(partition, 3)
        self.assertEqual((split.r, split.k), (6, 3))
        self.assertEqual(split.colour_set(0, 1), 0b000111)
        self.assertEqual(split.colour_set(0, 2), 0b111000)

    def test_duplicate_vertex_complete(self):
        colouring = random_colouring(HostGraph.complete(4), 4, 2, seed=3)
        twin = duplicate_vertex(colouring, 1, 0b0011)
        self.assertEqual(twin.n, 5)
        self.assertEqual(twin.colour_set(1, 4), 0b0011)
        for u in (0, 2, 3):
            self.assertEqual(twin.colour_set(u, 4), colouring.colour_set(u, 1))
        with self.assertRaises(ParameterError):
            duplicate_vertex(colouring, 1)

    def test_duplicate_vertex_bipartite(self):
        colouring = random_colouring(HostGraph.bipartite(2, 2), 3, 1, seed=5)
        twin = duplicate_vertex(colouring, 3)
        self.assertEqual((twin.host.n, twin.host.m), (2, 3))
        self.assertEqual(twin.colour_set(0, 4), colouring.colour_set(0, 3))

    def test_delete_vertex(self):
        colouring = random_colouring(HostGraph.complete(5), 3, 1, seed=8)
        smaller = delete_vertex(colouring, 2)
        self.assertEqual(smaller.n, 4)
        self.assertEqual(smaller.colour_set(2, 3), colouring.colour_set(3, 4))

    def test_reduce_to_partition(self):
        colouring = constant(3, 3, 2, 0b011)
        reduced = reduce_to_partition_colouring(colouring, [0])
        self.assertEqual((reduced.r, reduced.k), (2, 1))
        self.assertEqual(set(reduced.colours), {0b01})
        with self.assertRaises(ParameterError):
            reduce_to_partition_colouring(colouring, [0, 1])

    def test_star_cover_uses_pool(self):
        colouring = random_colouring(HostGraph.complete(6), 4, 2, seed=1)
        cover = star_cover(colouring, 0, [0, 1, 2])
        self.assertLessEqual(cover.size, 3)
        self.assertEqual(cover.covered, 0b111111)

    def test_missing_colour_view(self):
        colouring = constant(3, 3, 2, 0b110)
        view = missing_colour_view(colouring)
        self.assertEqual(set(view.colours), {0b001})


def test_union_find():
    uf = UnionFind(4)
    assert uf.union(0, 1)
    assert not uf.union(1, 0)
    uf.union(2, 3)
    assert uf.sets == 2
    assert uf.find(0) == uf.find(1) != uf.find(3)


if __name__ == '__main__':
    unittest.main()

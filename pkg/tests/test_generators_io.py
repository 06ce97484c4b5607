import pytest
from hypothesis import given

from modbounds import generators as gen
from modbounds.edgelist import load, read_edge_list, save, write_edge_list
from modbounds.errors import (
    CouldNotConnectError,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
    TooSmallError,
)
from modbounds.graph import VertexSet, e_in, e_out, is_connected

from strategies import connected_graphs


class TestGenerators:
    def test_complete(self):
        assert gen.complete(4).n_edges == 6

    def test_multipartite_is_c4(self):
        g = gen.complete_multipartite([2, 2])
        assert g.n_edges == 4
        assert sorted(g.degrees) == [2, 2, 2, 2] and is_connected(g)

    def test_planted_denser_inside(self):
        g = gen.planted_partition([10, 10], 0.9, 0.05, seed=1)
        A = VertexSet.from_members(g, range(10))
        inside = (e_in(g, A) + e_in(g, A.complement())) // 2
        assert inside > e_out(g, A)
        assert inside / 90 > e_out(g, A) / 100

    def test_planted_deterministic(self):
        a = gen.planted_partition([5, 5], 0.7, 0.2, seed=42)
        b = gen.planted_partition([5, 5], 0.7, 0.2, seed=42)
        assert a == b

    def test_planted_cannot_connect(self):
        with pytest.raises(CouldNotConnectError):
            gen.planted_partition([3, 3], 0.0, 0.0, seed=0, max_tries=5)

    @pytest.mark.parametrize("fn,arg", [(gen.complete, 1), (gen.cycle, 2), (gen.path, 1), (gen.star, 1)])
    def test_too_small(self, fn, arg):
        with pytest.raises(TooSmallError):
            fn(arg)

    def test_multipartite_too_small(self):
        with pytest.raises(TooSmallError):
            gen.complete_multipartite([3])

    def test_barbell_and_ladder(self):
        b = gen.barbell(3)
        assert b.n == 6 and b.n_edges == 7 and b.has_edge(2, 3)
        lad = gen.clique_ladder(4)
        assert lad.n == 8 and set(lad.degrees) == {4}

    def test_generate_dispatch(self):
        assert gen.generate("cycle", 6) == gen.cycle(6)
        with pytest.raises(ValueError):
            gen.generate("petersen")

    def test_family_sizes(self):
        assert gen.star(5).degrees == (4, 1, 1, 1, 1)
        assert gen.path(4).n_edges == 3
        assert gen.cycle(7).n_edges == 7


class TestEdgeList:
    def test_path(self):
        g = read_edge_list("0 1\n1 2\n")
        assert g == gen.path(3)

    def test_comment(self):
        assert read_edge_list("# comment\n0 1\n") == gen.complete(2)

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            read_edge_list("0 0\n")

    def test_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            read_edge_list("0 1\n1 0\n")

    def test_header(self):
        g = read_edge_list("#n 3\n0 1\n1 2\n")
        assert g.n == 3

    @pytest.mark.parametrize("text,line", [("0 1\nfoo bar\n", 2), ("0 1 2\n", 1), ("#n x\n0 1\n", 1), ("0 -1\n", 1)])
    def test_parse_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as info:
            read_edge_list(text)
        assert info.value.line == line
        assert f"line {line}" in str(info.value)

    def test_empty(self):
        with pytest.raises(ParseError):
            read_edge_list("# nothing\n")

    def test_writer_sorted(self):
        g = read_edge_list("2 1\n0 2\n")
        assert write_edge_list(g) == "#n 3\n0 2\n1 2\n"

    def test_corpus_fixpoint(self, corpus):
        for g in corpus.values():
            text = write_edge_list(g)
            h = read_edge_list(text)
            assert h == g
            assert write_edge_list(h) == text

    def test_file_roundtrip(self, tmp_path):
        g = gen.barbell()
        p = tmp_path / "bb.txt"
        save(g, p)
        assert load(p) == g

    @given(connected_graphs())
    def test_roundtrip_property(self, g):
        assert read_edge_list(write_edge_list(g)) == g

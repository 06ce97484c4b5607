from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from modbounds import generators as gen
from modbounds.errors import EmptySideError, NotAPartitionError
from modbounds.graph import VertexSet, e_out
from modbounds.measures import (
    conductance,
    cut_functionals,
    modularity,
    modularity_from_boundary,
    normalized_modularity,
    partition_modularity,
    relative_modularity,
    sandwich_check,
)
from modbounds.oracle import brute_force_cuts
from modbounds.spectral import modularity_matrix, normalized_modularity_matrix

from strategies import connected_graphs, graph_and_subset


def vs(g, members):
    return VertexSet.from_members(g, members)


class TestModularity:
    def test_whole_set_is_zero(self, corpus):
        for g in corpus.values():
            assert modularity(g, g.vertices) == 0
            assert modularity(g, vs(g, [])) == 0

    def test_barbell(self):
        g = gen.barbell()
        assert modularity(g, vs(g, [0, 1, 2])) == Fraction(5, 2)

    def test_k4_pair(self):
        g = gen.complete(4)
        assert modularity(g, vs(g, [0, 1])) == -1

    def test_exact_type(self):
        g = gen.cycle(5)
        assert isinstance(modularity(g, vs(g, [0, 1])), Fraction)

    @given(graph_and_subset(proper=False))
    @settings(max_examples=150)
    def test_two_forms_and_complement(self, gs):
        g, S = gs
        q = modularity(g, S)
        assert q == modularity_from_boundary(g, S)
        assert q == modularity(g, S.complement())

    @given(graph_and_subset(proper=False, max_n=12))
    @settings(max_examples=150)
    def test_quadratic_form(self, gs):
        g, S = gs
        one = S.indicator().astype(float)
        assert abs(one @ modularity_matrix(g) @ one - float(modularity(g, S))) <= 1e-9


class TestPartition:
    def test_trivial(self):
        g = gen.barbell()
        assert partition_modularity(g, [g.vertices]) == 0

    def test_barbell(self):
        g = gen.barbell()
        assert partition_modularity(g, [vs(g, [0, 1, 2]), vs(g, [3, 4, 5])]) == Fraction(5, 14)

    def test_k4(self):
        g = gen.complete(4)
        assert partition_modularity(g, [vs(g, [0, 1]), vs(g, [2, 3])]) == Fraction(-1, 6)

    def test_overlap(self):
        g = gen.complete(4)
        with pytest.raises(NotAPartitionError):
            partition_modularity(g, [vs(g, [0, 1]), vs(g, [1, 2, 3])])

    def test_not_covering(self):
        g = gen.complete(4)
        with pytest.raises(NotAPartitionError):
            partition_modularity(g, [vs(g, [0, 1]), vs(g, [2])])


class TestCutFunctionals:
    def test_barbell(self):
        g = gen.barbell()
        r = cut_functionals(g, vs(g, [0, 1, 2]))
        assert (r.Q, r.q_norm, r.q_rel, r.conductance) == (Fraction(5, 2), Fraction(5, 7), Fraction(5, 3), Fraction(1, 7))
        assert (r.e_in, r.e_out, r.vol_S) == (6, 1, 7)
        assert r.is_module

    def test_c6_consecutive(self):
        g = gen.cycle(6)
        r = cut_functionals(g, vs(g, [0, 1, 2]))
        assert r.Q == 1 and r.q_norm == Fraction(1, 3)

    def test_k4(self):
        g = gen.complete(4)
        r = cut_functionals(g, vs(g, [0, 1]))
        assert r.q_norm == Fraction(-1, 3)
        assert not r.is_module

    @pytest.mark.parametrize("members", [[], [0, 1, 2, 3]])
    def test_empty_side(self, members):
        g = gen.complete(4)
        with pytest.raises(EmptySideError):
            cut_functionals(g, vs(g, members))
        for fn in (relative_modularity, normalized_modularity, conductance):
            with pytest.raises(EmptySideError):
                fn(g, vs(g, members))

    def test_as_dict(self):
        g = gen.barbell()
        d = cut_functionals(g, vs(g, [0, 1, 2])).as_dict()
        assert d["S"] == [0, 1, 2] and d["Q"] == Fraction(5, 2)

    @given(graph_and_subset())
    @settings(max_examples=150)
    def test_identities(self, gs):
        g, S = gs
        r = cut_functionals(g, S)
        c = cut_functionals(g, S.complement())
        assert r.q_norm == c.q_norm and r.q_rel == c.q_rel and r.conductance == c.conductance
        assert r.q_norm == r.Q * g.volume / (S.volume * (g.volume - S.volume))
        assert r.q_rel == r.Q * g.n / (S.size * (g.n - S.size))
        assert r.q_norm == 1 - Fraction(e_out(g, S) * g.volume, S.volume * (g.volume - S.volume))
        assert r.q_norm >= 1 - 2 * r.conductance

    @given(graph_and_subset())
    @settings(max_examples=150)
    def test_normalized_rayleigh(self, gs):
        g, S = gs
        delta = g.sqrt_degrees
        v = delta * (S.indicator() - S.volume / g.volume)
        assert abs(delta @ v) <= 1e-10
        assert v @ v == pytest.approx(S.volume * (g.volume - S.volume) / g.volume, abs=1e-9)
        rq = v @ normalized_modularity_matrix(g) @ v / (v @ v)
        assert abs(rq - float(normalized_modularity(g, S))) <= 1e-9

    @given(graph_and_subset())
    def test_relative_rayleigh(self, gs):
        g, S = gs
        v = S.indicator() - S.size / g.n
        assert abs(v.sum()) <= 1e-12
        rq = v @ modularity_matrix(g) @ v / (v @ v)
        assert abs(rq - float(relative_modularity(g, S))) <= 1e-9


class TestSandwich:
    def test_barbell(self):
        g = gen.barbell()
        o = brute_force_cuts(g)
        assert sandwich_check(g, o.q_cut.value, o.q_rcut.value, o.q_ncut.value)

    def test_k4_negative_optima_break_the_chain(self):
        # q_cut = -1/8 > q_rcut / 2 = -1/2: the upper halves need nonnegative optima
        g = gen.complete(4)
        o = brute_force_cuts(g)
        assert (o.q_cut.value, o.q_rcut.value, o.q_ncut.value) == (Fraction(-1, 8), -1, Fraction(-1, 3))
        assert not sandwich_check(g, o.q_cut.value, o.q_rcut.value, o.q_ncut.value)

    def test_fabricated_violation(self):
        assert not sandwich_check(gen.barbell(), 1.0, 0.1, 0.1)

    @given(connected_graphs(min_n=3, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_holds_for_positive_optima(self, g):
        o = brute_force_cuts(g)
        if o.q_cut.value >= 0:
            assert sandwich_check(g, o.q_cut.value, o.q_rcut.value, o.q_ncut.value)

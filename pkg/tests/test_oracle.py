from fractions import Fraction

import pytest
from hypothesis import given, settings

from modbounds import generators as gen
from modbounds.certificates import BoundCertificate, CertName, Verdict
from modbounds.errors import TooLargeError
from modbounds.graph import VertexSet
from modbounds.measures import conductance, modularity, normalized_modularity, partition_modularity, relative_modularity
from modbounds.oracle import brute_force_cuts, brute_force_partitions, verify_bounds
from modbounds.report import certify
from modbounds.spectral import modularity_matrix
from modbounds.linalg import eig_sym

from strategies import connected_graphs


def naive_cuts(g):
    """Reference optima over every proper subset, without Gray code."""
    sets = [VertexSet(g, m) for m in range(1, (1 << g.n) - 1)]
    return (
        max(modularity(g, S) for S in sets) * 2 / g.volume,
        max(relative_modularity(g, S) for S in sets),
        max(normalized_modularity(g, S) for S in sets),
        min(conductance(g, S) for S in sets),
    )


class TestCuts:
    def test_barbell(self):
        o = brute_force_cuts(gen.barbell())
        assert o.q_cut.value == Fraction(5, 14)
        assert o.q_cut.argopt.members == (0, 1, 2)
        assert o.q_ncut.value == Fraction(5, 7)
        assert o.h_G.value == Fraction(1, 7)
        assert o.cuts_examined == 31

    def test_k4(self):
        o = brute_force_cuts(gen.complete(4))
        assert o.q_cut.value <= 0

    def test_k2(self):
        o = brute_force_cuts(gen.complete(2))
        assert o.q_cut.value == Fraction(-1, 2)
        assert o.q_cut.argopt.members == (0,) and o.cuts_examined == 1

    def test_c6_ties(self):
        o = brute_force_cuts(gen.cycle(6))
        assert o.q_ncut.value == Fraction(1, 3)
        # six rotations of three consecutive vertices, three distinct cuts
        assert o.q_ncut.count == 3
        assert o.q_ncut.argopt.members == (0, 1, 2)
        assert o.h_G.value == Fraction(1, 3)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            brute_force_cuts(gen.cycle(25))
        with pytest.raises(TooLargeError):
            brute_force_cuts(gen.cycle(8), max_n=7)

    def test_exact_types(self):
        o = brute_force_cuts(gen.path(5))
        for opt in (o.q_cut, o.q_rcut, o.q_ncut, o.h_G):
            assert isinstance(opt.value, Fraction)
            assert opt.argopt.is_proper and 0 in opt.argopt

    @given(connected_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_matches_naive(self, g):
        o = brute_force_cuts(g)
        assert (o.q_cut.value, o.q_rcut.value, o.q_ncut.value, o.h_G.value) == naive_cuts(g)
        # attained by the reported set and its complement
        S = o.q_ncut.argopt
        assert normalized_modularity(g, S) == o.q_ncut.value == normalized_modularity(g, S.complement())
        assert conductance(g, o.h_G.argopt) == o.h_G.value


class TestPartitions:
    def test_barbell(self):
        r = brute_force_partitions(gen.barbell())
        assert r.best_q == Fraction(5, 14) and r.k == 2 and r.all_modules
        assert sorted(p.members for p in r.partition) == [(0, 1, 2), (3, 4, 5)]
        assert r.k_minimal_modules == 2

    def test_k4(self):
        r = brute_force_partitions(gen.complete(4))
        assert r.best_q == 0 and r.k == 1 and not r.all_modules
        assert r.k_minimal_modules is None

    def test_k2(self):
        r = brute_force_partitions(gen.complete(2))
        assert r.best_q == 0 and r.k == 1

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            brute_force_partitions(gen.cycle(11))

    def test_attached(self):
        assert brute_force_cuts(gen.barbell(), partitions=True).multiway.best_q == Fraction(5, 14)

    @given(connected_graphs(max_n=6))
    @settings(max_examples=30, deadline=None)
    def test_matches_partition_modularity(self, g):
        r = brute_force_partitions(g)
        assert partition_modularity(g, r.partition) == r.best_q
        if r.all_modules:
            assert all(modularity(g, p) > 0 for p in r.partition)
            positive = eig_sym(modularity_matrix(g)).count_above(1e-8)
            assert r.k - 1 <= positive


class TestVerify:
    def test_barbell_pipeline(self):
        g = gen.barbell()
        rep = verify_bounds(g, certify(g), brute_force_cuts(g))
        assert rep.ok and rep.checked == 6
        assert all(c.verified_against_oracle for c in rep.certificates)

    def test_c6_pipeline(self):
        g = gen.cycle(6)
        rep = verify_bounds(g, certify(g), brute_force_cuts(g))
        assert rep.ok
        simple = next(c for c in rep.certificates if c.name is CertName.SIMPLE_CHEEGER)
        assert simple.verified_against_oracle is True

    def test_violation_reported_not_raised(self):
        g = gen.barbell()
        fake = BoundCertificate(CertName.SIMPLE_CHEEGER, True, {}, {"lower": 0.9, "upper": 1.0}, Verdict.CERTIFIED)
        rep = verify_bounds(g, [fake], brute_force_cuts(g))
        assert not rep.ok and rep.violations[0]["q_ncut"] == Fraction(5, 7)
        assert rep.certificates[0].verified_against_oracle is False

    def test_uncertified_left_alone(self):
        g = gen.star(5)
        rep = verify_bounds(g, certify(g), brute_force_cuts(g))
        assert rep.ok
        for c in rep.certificates:
            assert (c.verified_against_oracle is None) == (not c.certified)

    def test_corpus_sweep(self, corpus):
        for name, g in corpus.items():
            rep = verify_bounds(g, certify(g), brute_force_cuts(g))
            assert rep.ok, (name, rep.violations)

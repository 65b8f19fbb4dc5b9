import random

import pytest
from hypothesis import given, strategies as st

from bbdigraph import (
    BipartiteDigraph,
    Cycle,
    GeneralDigraph,
    HamiltonCycle,
    InputError,
    ParseError,
    RerouteInapplicable,
    contraction,
    find_cycle_of_length,
    find_hamilton_cycle,
    is_bipancyclic,
    is_strongly_connected,
    lift_cycle,
    reroute_hamilton,
    thomassen_classify,
    vx,
    vy,
)
from bbdigraph.cycles import (
    cycle_spectrum,
    is_directed_full_cycle,
    is_tournament,
    parse_general,
    serialize_general,
)
from bbdigraph.matching import has_cycle_factor
from bbdigraph.verify import oracle
from bbdigraph.verify.generate import (
    biased_highdegree_digraph,
    complete,
    directed_cycle,
    enumerate_digraphs,
    enumerate_general_digraphs,
)

from conftest import digraphs


@st.composite
def general_digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    succ = [draw(st.integers(0, full)) & ~(1 << u) for u in range(n)]
    return GeneralDigraph(n, succ)


class TestStrongConnectivity:
    def test_cycle(self):
        assert is_strongly_connected(directed_cycle(4))

    def test_sink(self):
        D = BipartiteDigraph.from_arcs(2, [(vx(0), vy(0)), (vy(0), vx(1)), (vx(1), vy(1))])
        assert not is_strongly_connected(D)

    def test_exhaustive_a2(self):
        for D in enumerate_digraphs(2):
            assert is_strongly_connected(D) == oracle.strongly_connected(D)

    @given(general_digraphs())
    def test_general(self, G):
        assert is_strongly_connected(G) == oracle.strongly_connected(G)


class TestFixedLength:
    def test_complete(self):
        for a in (2, 3, 4):
            for L in range(2, 2 * a + 1, 2):
                c = find_cycle_of_length(complete(a), L)
                assert len(c) == L and c.is_valid_in(complete(a))

    def test_cycle_has_only_full_length(self):
        D = directed_cycle(4)
        for L in (2, 4, 6):
            assert find_cycle_of_length(D, L) is None
        assert len(find_cycle_of_length(D, 8)) == 8

    @pytest.mark.parametrize("L", [0, 3, 10])
    def test_bad_length(self, L):
        with pytest.raises(InputError):
            find_cycle_of_length(complete(4), L)

    @given(digraphs(max_a=4), st.data())
    def test_against_oracle(self, D, data):
        L = data.draw(st.sampled_from(range(2, 2 * D.a + 1, 2)))
        c = find_cycle_of_length(D, L)
        assert (c is not None) == oracle.cycle_lengths(D, [L])[L]
        if c is not None:
            c.validate(D)
            assert len(c) == L

    def test_length4_exhaustive_slice(self):
        # every 16th a=3 digraph, against brute force
        for idx in range(0, 1 << 18, 16):
            D = BipartiteDigraph.from_index(3, idx)
            assert (find_cycle_of_length(D, 4) is not None) == oracle.cycle_lengths(D, [4])[4]

    @given(general_digraphs(min_n=2), st.data())
    def test_general_lengths(self, G, data):
        L = data.draw(st.integers(2, G.n))
        ids = find_cycle_of_length(G, L)
        assert (ids is not None) == oracle.cycle_lengths(G, [L])[L]
        if ids is not None:
            assert len(set(ids)) == L
            assert all(G.has_arc(ids[i], ids[(i + 1) % L]) for i in range(L))


class TestHamilton:
    def test_cycle_finds_itself(self):
        C = find_hamilton_cycle(directed_cycle(3))
        assert str(C) == "cycle: y0 x0 y1 x1 y2 x2"

    def test_hall_violator_means_absent(self):
        D = BipartiteDigraph.from_arcs(2, [(vx(0), vy(0)), (vx(1), vy(0)), (vy(0), vx(0)), (vy(1), vx(1))])
        assert not has_cycle_factor(D)
        assert find_hamilton_cycle(D) is None

    @given(digraphs(max_a=5))
    def test_witness_and_necessary_conditions(self, D):
        C = find_hamilton_cycle(D)
        if C is not None:
            C.validate(D)
            assert is_strongly_connected(D) and has_cycle_factor(D)
        if D.a <= 4:
            assert (C is not None) == oracle.hamiltonian(D)

    def test_exhaustive_a3(self):
        for D in enumerate_digraphs(3):
            found = find_hamilton_cycle(D) is not None
            if not is_strongly_connected(D):
                assert not found
            else:
                assert found == oracle.hamiltonian(D)

    def test_parse_round_trip(self):
        C = HamiltonCycle.parse("cycle: y2 x0 y1 x2 y0 x1")
        assert (C.ys, C.xs) == ((2, 1, 0), (0, 2, 1))
        assert HamiltonCycle.parse(str(C)) == C
        assert C.canonical().ys[0] == 0
        with pytest.raises(InputError):
            HamiltonCycle.parse("cycle: x0 y0")


class TestBipancyclic:
    def test_complete(self, k33):
        s = is_bipancyclic(k33)
        assert s.holds and sorted(s.witnesses) == [2, 4, 6]

    def test_cycle_missing_two(self):
        s = is_bipancyclic(directed_cycle(4))
        assert not s.holds and s.missing == 2

    def test_sampled_against_oracle(self):
        rng = random.Random(2)
        for _ in range(60):
            D = biased_highdegree_digraph(4, rng.randint(3, 7), rng.getrandbits(32))
            assert is_bipancyclic(D).holds == oracle.bipancyclic(D)

    @given(digraphs(max_a=5))
    def test_bipancyclic_has_two_cycle(self, D):
        if is_bipancyclic(D).holds:
            assert find_cycle_of_length(D, 2) is not None

    def test_directed_full_cycle(self):
        assert is_directed_full_cycle(directed_cycle(5))
        assert not is_directed_full_cycle(complete(2))


def hamiltonian_samples(a, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        D = biased_highdegree_digraph(a, rng.randint(a - 1, 2 * a - 2), rng.getrandbits(32))
        C = find_hamilton_cycle(D)
        if C is not None:
            out.append((D, C))
    return out


class TestReroute:
    def test_complete(self, k33):
        C = HamiltonCycle.parse("cycle: y0 x0 y1 x1 y2 x2")
        R = reroute_hamilton(k33, C, 1, 2)
        R.validate(k33)
        assert R.sequence() == [vy(0), vx(1), vy(2), vx(0), vy(1), vx(2)]

    def test_missing_arc(self):
        D = directed_cycle(3)
        C = find_hamilton_cycle(D)
        with pytest.raises(RerouteInapplicable):
            reroute_hamilton(D, C, 1, 2)

    @pytest.mark.parametrize("l, m", [(0, 1), (2, 1), (1, 3), (1, 1)])
    def test_index_range(self, k33, l, m):
        with pytest.raises(InputError):
            reroute_hamilton(k33, find_hamilton_cycle(k33), l, m)

    def test_random(self):
        applied = 0
        for a in (4, 5, 6, 7):
            for D, C in hamiltonian_samples(a, 25, a):
                for l in range(1, a):
                    for m in range(l + 1, a):
                        try:
                            R = reroute_hamilton(D, C, l, m)
                        except RerouteInapplicable:
                            continue
                        R.validate(D)
                        assert sorted(R.sequence()) == sorted(C.sequence())
                        applied += 1
        assert applied > 100


class TestContraction:
    def test_cycle_gives_cycle(self):
        D = directed_cycle(4)
        G = contraction(D, find_hamilton_cycle(D))
        assert sorted(G.arcs()) == [(0, 1), (1, 2), (2, 3), (3, 0)]

    def test_complete(self, k33):
        G = contraction(k33, find_hamilton_cycle(k33))
        assert G == GeneralDigraph.complete(3)

    def test_labelling_mismatch(self, k33):
        with pytest.raises(InputError):
            contraction(directed_cycle(3), HamiltonCycle.parse("cycle: y0 x1 y1 x0 y2 x2"))

    def test_degrees_and_lifts(self):
        for D, C in hamiltonian_samples(5, 40, 9):
            G = contraction(D, C)
            assert G.n == 5
            # the labelled cycle itself is v_0 -> v_1 -> ... in G
            assert all(G.has_arc(p, (p + 1) % 5) for p in range(5))
            for p in range(5):
                assert G.out_degree(p) >= D.out_degree(vx(C.xs[p])) - 1
                assert G.in_degree(p) >= D.in_degree(vy(C.ys[p])) - 1
            for L in range(2, 6):
                ids = find_cycle_of_length(G, L)
                if ids is not None:
                    lifted = lift_cycle(D, C, ids)
                    assert len(lifted) == 2 * L

    def test_lift_identity_and_two_cycle(self, k33):
        C = HamiltonCycle.parse("cycle: y0 x0 y1 x1 y2 x2")
        assert lift_cycle(k33, C, [0, 1, 2]) == C.cycle
        assert lift_cycle(k33, C, [0, 2]) == Cycle([vy(0), vx(0), vy(2), vx(2)])


class TestGeneralFormat:
    @given(general_digraphs())
    def test_round_trip(self, G):
        assert parse_general(serialize_general(G)) == G

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_general("gd 1\nn 3\narc 0 0\nend\n")
        with pytest.raises(ParseError):
            parse_general("gd 1\nn 3\narc 0 1\n")


class TestThomassen:
    def test_three_cycle(self):
        G = GeneralDigraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert thomassen_classify(G).tag == "tournament"

    def test_complete_three(self):
        assert thomassen_classify(GeneralDigraph.complete(3)).tag == "pancyclic"

    def test_k22(self):
        G = GeneralDigraph.from_arcs(4, [(u, v) for u in (0, 1) for v in (2, 3)] + [(v, u) for u in (0, 1) for v in (2, 3)])
        assert thomassen_classify(G).tag == "complete-bipartite"

    def test_hypothesis_failed(self):
        assert thomassen_classify(GeneralDigraph.complete(2)).tag == "hypothesis-failed"
        G = GeneralDigraph.from_arcs(3, [(0, 1), (1, 2)])
        assert thomassen_classify(G).tag == "hypothesis-failed"

    @pytest.mark.parametrize("n", [3, 4])
    def test_exhaustive(self, n):
        for G in enumerate_general_digraphs(n):
            cls = thomassen_classify(G)
            assert cls.tag != "outside"
            if cls.tag != "hypothesis-failed":
                assert oracle.thomassen_outcome(G)
                assert ("tournament" in cls.flags) == oracle.tournament(G)
                assert ("complete-bipartite" in cls.flags) == oracle.complete_balanced_bipartite(G)

    @given(general_digraphs(min_n=3, max_n=6))
    def test_tournament_check(self, G):
        assert is_tournament(G) == oracle.tournament(G)

    def test_spectrum(self):
        s = cycle_spectrum(GeneralDigraph.complete(4), range(2, 5))
        assert s.holds and sorted(s.witnesses) == [2, 3, 4]

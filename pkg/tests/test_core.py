import pickle

import pytest
from hypothesis import given, strategies as st

from bbdigraph import (
    Arc,
    BipartiteDigraph,
    Cycle,
    CycleFactor,
    InputError,
    ParseError,
    Vertex,
    parse,
    serialize,
    to_compact,
    vx,
    vy,
)
from bbdigraph.verify.generate import complete, directed_cycle
from bbdigraph.verify.oracle import as_arc_set

from conftest import digraphs


def small():
    # xy = {(0,0),(0,1)}, yx = {} at a=2
    return BipartiteDigraph.from_arcs(2, [(vx(0), vy(0)), (vx(0), vy(1))])


class TestDegrees:
    def test_cycle(self):
        D = directed_cycle(4)
        for v in D.vertices():
            assert D.out_degree(v) == 1 and D.in_degree(v) == 1 and D.degree(v) == 2

    def test_complete(self, k33):
        for v in k33.vertices():
            assert (k33.out_degree(v), k33.in_degree(v), k33.degree(v)) == (3, 3, 6)

    def test_listed_arcs(self):
        D = small()
        assert D.out_degree(vx(0)) == 2
        assert D.in_degree(vx(0)) == 0
        assert D.degree(vx(0)) == 2

    def test_bad_vertex(self):
        with pytest.raises(InputError):
            small().out_degree(vx(5))


class TestRestrictedDegrees:
    def test_full_and_empty_sets(self, k33):
        v = vx(0)
        d = k33.restricted_degrees(v, k33.vertices())
        assert (d.total_e, d.total_ec) == (6, 0)
        d = k33.restricted_degrees(v, [])
        assert (d.total_e, d.total_ec) == (0, 6)

    def test_partial(self, k33):
        d = k33.restricted_degrees(vx(0), [vy(0), vy(1)])
        assert d.total_e == 4 and d.total_ec == 2

    def test_bad_member(self, k33):
        with pytest.raises(InputError):
            k33.restricted_degrees(vx(0), [vy(9)])

    @given(digraphs(), st.data())
    def test_split_sums(self, D, data):
        E = data.draw(st.sets(st.sampled_from(list(D.vertices()))))
        for v in D.vertices():
            d = D.restricted_degrees(v, E)
            assert d.out_e + d.out_ec == D.out_degree(v)
            assert d.in_e + d.in_ec == D.in_degree(v)
            assert d.total_e + d.total_ec == D.degree(v)


class TestNeighborhoodAndArcs:
    def test_empty_set(self, k33):
        assert k33.neighborhood([], "out") == frozenset()

    def test_cycle_neighbourhood(self):
        D = directed_cycle(3)
        assert D.neighborhood([vy(0)], "out") == {vx(0)}
        assert D.neighborhood([vx(0)], "in") == {vy(0)}

    def test_direction_checked(self, k33):
        with pytest.raises(InputError):
            k33.neighborhood([vx(0)], "sideways")

    def test_arcs_between_complete(self, k33):
        X = [vx(i) for i in range(3)]
        Y = [vy(i) for i in range(3)]
        assert k33.arcs_between(X, Y) == 18

    @given(digraphs())
    def test_matches_arc_set(self, D):
        _, arcs = as_arc_set(D)
        assert {(arc.tail, arc.head) for arc in D.arcs()} == arcs
        assert D.arc_count == len(arcs)
        for v in D.vertices():
            assert D.neighborhood([v], "out") == {t for s, t in arcs if s == v}
            assert D.neighborhood([v], "in") == {s for s, t in arcs if t == v}

    @given(digraphs())
    def test_reverse_flips_every_arc(self, D):
        R = D.reverse()
        assert {(a.head, a.tail) for a in R.arcs()} == {(a.tail, a.head) for a in D.arcs()}
        assert R.reverse() == D


class TestArcAndVertex:
    def test_intra_side_rejected(self):
        with pytest.raises(InputError):
            Arc(vx(0), vx(1))
        with pytest.raises(InputError):
            BipartiteDigraph.from_arcs(2, [(vy(0), vy(1))])

    def test_vertex_text(self):
        assert str(vy(3)) == "y3"
        assert Vertex.parse("x12") == vx(12)
        with pytest.raises(InputError):
            Vertex.parse("z1")

    def test_immutable(self, k33):
        with pytest.raises(AttributeError):
            k33.a = 4


class TestIndex:
    @given(digraphs(max_a=3))
    def test_round_trip(self, D):
        assert BipartiteDigraph.from_index(D.a, D.index) == D

    def test_bit_layout(self):
        D = BipartiteDigraph.from_index(2, 0b0001_0000)
        assert [(a.tail, a.head) for a in D.arcs()] == [(vy(0), vx(0))]
        D = BipartiteDigraph.from_index(2, 0b0000_0010)
        assert [(a.tail, a.head) for a in D.arcs()] == [(vx(0), vy(1))]

    def test_out_of_range(self):
        with pytest.raises(InputError):
            BipartiteDigraph.from_index(1, 4)


class TestFormats:
    @given(digraphs(), st.sampled_from(["text", "compact"]))
    def test_round_trip(self, D, fmt):
        assert parse(serialize(D, fmt)) == D

    @given(digraphs())
    def test_pickle(self, D):
        assert pickle.loads(pickle.dumps(D)) == D

    def test_text_layout(self):
        assert serialize(directed_cycle(2)) == "bbd 1\na 2\nxy 0 1\nxy 1 0\nyx 0 0\nyx 1 1\nend\n"
        assert to_compact(directed_cycle(2)) == "a=2;xy=0110;yx=1001"

    @pytest.mark.parametrize(
        "text, line",
        [
            ("bbd 2\na 2\nend\n", 1),
            ("bbd 1\na x\nend\n", 2),
            ("bbd 1\na 2\nxy 0 5\nend\n", 3),
            ("bbd 1\na 2\nxy 0 1\nxy 0 1\nend\n", 4),
            ("bbd 1\na 2\nxx 0 1\nend\n", 3),
            ("bbd 1\na 2\nzz 0 1\nend\n", 3),
            ("bbd 1\na 2\nxy 0 1\n", None),
            ("bbd 1\na 2\nend\nxy 0 1\n", 4),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(ParseError) as info:
            parse(text)
        if line is not None:
            assert info.value.line == line

    def test_bad_compact(self):
        with pytest.raises(ParseError):
            parse("a=2;xy=01;yx=0000")


class TestCycle:
    def test_canonical_rotation(self):
        c = Cycle([vy(1), vx(0), vy(0), vx(1)])
        assert str(c) == "cycle: x0 y0 x1 y1"
        assert Cycle.parse(str(c)) == c

    @pytest.mark.parametrize(
        "vs",
        [[vx(0)], [vx(0), vy(0), vx(0), vy(0)], [vx(0), vx(1)], []],
    )
    def test_invalid(self, vs):
        with pytest.raises(InputError):
            Cycle(vs)

    def test_validate_against_digraph(self):
        D = directed_cycle(3)
        good = Cycle([vy(0), vx(0), vy(1), vx(1), vy(2), vx(2)])
        good.validate(D)
        bad = Cycle([vx(0), vy(0)])
        assert not bad.is_valid_in(D)
        with pytest.raises(InputError):
            bad.validate(D)

    def test_factor_cover(self):
        c1 = Cycle([vx(0), vy(0)])
        c2 = Cycle([vx(1), vy(1)])
        f = CycleFactor([c2, c1], 2)
        assert f.cycles == (c1, c2)
        with pytest.raises(InputError):
            CycleFactor([c1], 2)
        with pytest.raises(InputError):
            CycleFactor([c1, c1], 2)

import itertools
from collections import Counter

import pytest
from hypothesis import given

from oracles import irreducible
from rauzy.classes import ClassCapExceeded, rauzy_class, same_class, standardize
from rauzy.perm import Permutation, is_irreducible_one_line

FIG_DOT = """digraph rauzy_class {
  n0 [label="(3,2,1)"];
  n1 [label="(3,1,2)"];
  n2 [label="(2,3,1)"];
  n0 -> n1 [label="0", style=solid];
  n0 -> n2 [label="1", style=dashed];
  n1 -> n0 [label="0", style=solid];
  n1 -> n1 [label="1", style=dashed];
  n2 -> n2 [label="0", style=solid];
  n2 -> n0 [label="1", style=dashed];
}
"""


def partition(d):
    seen, sizes = set(), []
    for w in itertools.permutations(range(1, d + 1)):
        if w in seen or not is_irreducible_one_line(w):
            continue
        cls = rauzy_class(w)
        seen.update(cls.vertices)
        sizes.append(len(cls))
    return sorted(sizes)


class TestGraph:
    def test_three_letters(self):
        cls = rauzy_class(Permutation.parse("(3,2,1)"))
        assert len(cls) == 3 and len(cls.edges) == 6
        assert cls.to_dot() == FIG_DOT

    @pytest.mark.parametrize("w, size", [("(4,3,2,1)", 7), ("(5,4,3,2,1)", 15),
                                         ("(6,5,4,3,2,1)", 31), ("(6,3,2,5,4,1)", 134),
                                         ("(7,6,5,4,3,2,1)", 63), ("(7,3,2,4,6,5,1)", 294)])
    def test_known_sizes(self, w, size):
        assert len(rauzy_class(Permutation.parse(w))) == size

    @given(irreducible(max_d=6))
    def test_each_vertex_has_one_edge_in_and_out_per_type(self, p):
        cls = rauzy_class(p)
        outs = Counter((i, e) for i, e, _ in cls.edges)
        ins = Counter((j, e) for _, e, j in cls.edges)
        assert set(outs.values()) == {1} and set(ins.values()) == {1}
        assert len(outs) == len(ins) == 2 * len(cls)

    @given(irreducible(max_d=7))
    def test_closed_under_inverse(self, p):
        cls = rauzy_class(p)
        verts = set(cls.vertices)
        assert all(q.inverse().one_line() in verts for q in cls.permutations())

    @given(irreducible(max_d=7))
    def test_strongly_connected(self, p):
        cls = rauzy_class(p)
        back = {}
        for i, _, j in cls.edges:
            back.setdefault(j, set()).add(i)
        seen, todo = {0}, [0]
        while todo:
            for i in back.get(todo.pop(), ()):
                if i not in seen:
                    seen.add(i)
                    todo.append(i)
        assert len(seen) == len(cls)

    def test_two_letters(self):
        cls = rauzy_class(Permutation.parse("(2,1)"))
        assert len(cls) == 1
        assert cls.to_dot().count("n0 -> n0") == 2

    def test_classes_partition_irreducibles(self):
        assert sum(partition(5)) == 71
        assert sum(partition(6)) == 461

    def test_cap(self):
        with pytest.raises(ClassCapExceeded):
            rauzy_class(Permutation.parse("(4,3,2,1)"), cap=3)

    def test_json(self):
        js = rauzy_class(Permutation.parse("(3,2,1)")).to_json()
        assert js["vertices"] == ["(3,2,1)", "(3,1,2)", "(2,3,1)"]
        assert js["edges"][1] == [0, 1, 2]


class TestStandardize:
    def test_reaches_standard_in_three_moves(self):
        q, path = standardize(Permutation.parse("(7,4,5,1,6,2,3)"))
        assert q == Permutation.parse("(7,6,2,3,4,5,1)")
        assert path.to_string() == "0^3"

    def test_all_up_to_six(self):
        for d in range(2, 7):
            for w in itertools.permutations(range(1, d + 1)):
                if is_irreducible_one_line(w):
                    p = Permutation.from_one_line(w)
                    q, path = standardize(p)
                    assert q.is_standard() and path.start == p and path.end == q

    def test_standard_input_is_fixed(self):
        p = Permutation.parse("(6,3,2,5,4,1)")
        q, path = standardize(p)
        assert q == p and len(path) == 0

    def test_replay(self):
        p = Permutation.parse("(4,1,3,2)")
        q, path = standardize(p)
        replay = p
        for e in path.moves():
            replay = replay.rauzy_induce(e)
        assert replay == q and q.is_standard()
        assert q in rauzy_class(p)

    @given(irreducible(min_d=7, max_d=11))
    def test_larger(self, p):
        q, path = standardize(p)
        assert q.is_standard() and path.end == q


class TestSameClass:
    @given(irreducible(max_d=7))
    def test_modes_agree_on_inverse(self, p):
        q = p.inverse()
        assert same_class(p, q, "bfs") == same_class(p, q, "invariant")

    @pytest.mark.parametrize("p, q", [("(7,4,5,1,6,2,3)", "(7,2,3,4,6,5,1)"), ("(3,2,1)", "(3,1,2)")])
    def test_examples(self, p, q):
        p, q = Permutation.parse(p), Permutation.parse(q)
        assert same_class(p, q, "bfs") and same_class(p, q, "invariant")

    @given(irreducible(max_d=6), irreducible(max_d=6))
    def test_modes_agree(self, p, q):
        if p.d == q.d:
            assert same_class(p, q, "bfs") == same_class(p, q, "invariant")

    def test_different_sizes(self):
        assert not same_class(Permutation.parse("(2,1)"), Permutation.parse("(3,2,1)"))

    def test_components_of_h4(self):
        hyp, odd = Permutation.parse("(6,5,4,3,2,1)"), Permutation.parse("(6,3,2,5,4,1)")
        assert not same_class(hyp, odd, "bfs")
        assert not same_class(hyp, odd, "invariant")

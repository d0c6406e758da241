import numpy as np
import pytest
from hypothesis import given

from oracles import irreducible, move_oracle, omega_oracle, relabelled
from rauzy.perm import (
    Permutation,
    PermutationError,
    ReducibleError,
    is_irreducible_one_line,
    move,
    reversal,
)


class TestParse:
    def test_one_line(self):
        p = Permutation.parse("(3,2,1)")
        assert p.top_row == (1, 2, 3)
        assert p.bottom_row == (3, 2, 1)

    def test_two_row_equals_one_line(self):
        assert Permutation.parse("1 3 2 / 3 2 1") == Permutation.parse("(2,3,1)")

    def test_letters_do_not_matter(self):
        assert Permutation.parse("a b c / c b a") == Permutation.parse("(3,2,1)")

    @pytest.mark.parametrize("text", ["(1,1,2)", "(0,1)", "a b / a c", "(x)", ""])
    def test_rejects(self, text):
        with pytest.raises(PermutationError):
            Permutation.parse(text)

    @given(relabelled())
    def test_json_round_trip(self, p):
        q = Permutation.from_json(p.to_json())
        assert q == p and q.alphabet == p.alphabet

    @given(irreducible())
    def test_text_round_trip(self, p):
        assert Permutation.parse(str(p)) == p
        assert Permutation.parse(p.two_row()) == p


class TestPredicates:
    def test_irreducible(self):
        assert Permutation.parse("(3,2,1)").is_irreducible()
        assert not Permutation.parse("(2,1,3)").is_irreducible()
        assert not Permutation.parse("(1,3,2)").is_irreducible()

    def test_standard(self):
        assert Permutation.parse("(4,3,2,1)").is_standard()
        assert not Permutation.parse("(3,1,2)").is_standard()

    def test_inverse_swaps_rows(self):
        p = Permutation.parse("(4,1,3,2)")
        assert p.inverse() == Permutation.parse("(2,4,3,1)")
        assert p.inverse().top_row == p.bottom_row

    @given(irreducible())
    def test_inverse_is_involution(self, p):
        assert p.inverse().inverse() == p


class TestRauzyGraphOnThreeLetters:
    p = Permutation.parse("(3,2,1)")

    def test_type0(self):
        assert self.p.rauzy_induce(0) == Permutation.parse("(3,1,2)")

    def test_type1(self):
        assert self.p.rauzy_induce(1).two_row() == "1 3 2 / 3 2 1"

    def test_loops(self):
        q0, q1 = self.p.rauzy_induce(0), self.p.rauzy_induce(1)
        assert q0.rauzy_induce(1) == q0
        assert q1.rauzy_induce(0) == q1
        assert q0.rauzy_induce(0) == self.p
        assert q1.rauzy_induce(1) == self.p

    def test_reducible_rejected(self):
        with pytest.raises(ReducibleError):
            Permutation.parse("(2,1,3)").rauzy_induce(0)


class TestMoves:
    @given(relabelled(), irreducible())
    def test_against_position_shift(self, p, _):
        for eps in (0, 1):
            q = p.rauzy_induce(eps)
            r = move_oracle(p, eps)
            assert q.top_row == r.top_row and q.bottom_row == r.bottom_row

    @given(irreducible())
    def test_fast_moves_agree(self, p):
        for eps in (0, 1):
            assert p.rauzy_induce(eps).one_line() == move(p.one_line(), eps)

    @given(irreducible())
    def test_conjugation(self, p):
        for eps in (0, 1):
            assert p.inverse().rauzy_induce(eps) == p.rauzy_induce(1 - eps).inverse()

    @given(irreducible())
    def test_irreducibility_preserved(self, p):
        for eps in (0, 1):
            assert p.rauzy_induce(eps).is_irreducible()

    @given(irreducible())
    def test_preimage(self, p):
        for eps in (0, 1):
            pre, loser = p.rauzy_preimage(eps)
            assert pre.rauzy_induce(eps) == p
            assert pre.last(1 - eps) == loser


class TestOmega:
    def test_two_letters(self):
        assert Permutation.parse("(2,1)").omega().tolist() == [[0, 1], [-1, 0]]

    @given(relabelled())
    def test_against_indicators(self, p):
        assert p.omega().tolist() == omega_oracle(p)

    @given(irreducible())
    def test_antisymmetric(self, p):
        om = p.omega()
        assert (om == -om.T).all()

    @given(irreducible())
    def test_inverse_negates(self, p):
        assert np.array_equal(p.inverse().omega(), -p.omega())


def test_irreducible_counts():
    from itertools import permutations

    counts = [sum(is_irreducible_one_line(w) for w in permutations(range(1, d + 1))) for d in range(1, 8)]
    # number of indecomposable permutations
    assert counts == [1, 1, 3, 13, 71, 461, 3447]


def test_reversal():
    assert str(reversal(5)) == "(5,4,3,2,1)"

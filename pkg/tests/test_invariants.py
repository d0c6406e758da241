import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import arf_oracle, degrees_by_angle, irreducible
from rauzy import exact
from rauzy.classes import rauzy_class, standardize
from rauzy.invariants import (
    Signature,
    block_decomposition,
    class_key,
    genus,
    invariants,
    is_hyperelliptic_class,
    reduce_removable,
    singularity_profile,
    spin_blocks,
    spin_generic,
    spin_parity,
)
from rauzy.perm import Permutation, is_irreducible_one_line


def P(text):
    return Permutation.parse(text)


class TestSignature:
    @pytest.mark.parametrize("w, marked, rest", [
        ("(4,3,2,1)", 2, ()),
        ("(3,2,1)", 0, (0,)),
        ("(8,3,2,4,7,6,5,1)", 1, (2, 1)),
        ("(7,6,1,4,3,2,8,5)", 0, (3, 1)),
        ("(7,4,5,2,6,3,1)", 4, (0,)),
        ("(2,1)", 0, ()),
    ])
    def test_fixtures(self, w, marked, rest):
        assert singularity_profile(P(w)) == Signature(marked, rest)

    def test_parse_and_print(self):
        s = Signature.parse("(1;{2,1})")
        assert s == Signature(1, (1, 2)) and str(s) == "(1;{2,1})"
        assert Signature.parse("4") == Signature(4)

    @given(irreducible(max_d=8))
    def test_against_cone_angles(self, p):
        sig = singularity_profile(p)
        marked, rest = degrees_by_angle(p)
        assert (marked, list(sig.rest)) == (marked, rest) and sig.marked == marked

    @given(irreducible(max_d=8))
    def test_letter_count(self, p):
        sig = singularity_profile(p)
        assert p.d == sum(sig.degrees) + len(sig.degrees) + 1

    @given(irreducible(max_d=8))
    def test_genus_is_half_rank(self, p):
        assert 2 * genus(p) == exact.rank(p.omega().tolist())

    @given(irreducible(max_d=6))
    def test_constant_on_class(self, p):
        sig = singularity_profile(p)
        for q in rauzy_class(p).permutations()[:40]:
            assert singularity_profile(q) == sig


class TestSpin:
    def test_reduction_trace(self):
        r = spin_generic(P("(4,3,6,1,5,2)"))
        assert r.parity == 1
        first, second, third, last = r.trace
        assert first.matrix == (
            (0, 0, 1, 1, 0, 1), (0, 0, 1, 1, 1, 1), (1, 1, 0, 1, 0, 0),
            (1, 1, 1, 0, 0, 0), (0, 1, 0, 0, 0, 1), (1, 1, 0, 0, 1, 0),
        )
        assert second.labels == (2, 4, 5, 6)
        assert second.matrix == ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 1, 0))
        assert second.cycles == {2: {1, 2}, 4: {1, 3, 4}, 5: {5}, 6: {3, 6}}
        assert second.phi == {2: 0, 4: 0, 5: 1, 6: 0}
        assert third.labels == (4, 6)
        assert third.matrix == ((0, 1), (1, 0))
        assert third.cycles == {4: {1, 3, 4}, 6: {1, 2, 3, 6}}
        assert third.phi == {4: 0, 6: 0}
        assert last.labels == ()

    def test_block_shortcut_example(self):
        p = P("(7,3,2,6,5,4,1)")
        assert [b for _, b in block_decomposition(p)] == [(2, 3), (4, 5, 6)]
        assert spin_parity(p) is None  # degrees 1 and 3

    @pytest.mark.parametrize("w, parity", [("(6,3,2,5,4,1)", 1), ("(7,3,2,4,6,5,1)", 1),
                                           ("(6,5,4,3,2,1)", 0), ("(7,6,5,4,3,2,1)", 0), ("(8,7,6,5,4,3,2,1)", 0)])
    def test_values(self, w, parity):
        assert spin_parity(P(w)).parity == parity

    @given(irreducible(min_d=4, max_d=9), st.randoms(use_true_random=False))
    def test_selection_order_is_irrelevant(self, p, rng):
        r = spin_parity(p)
        if r is not None:
            assert random_order_parity(p, rng) == r.parity

    @given(irreducible(min_d=4, max_d=9))
    def test_routes_agree(self, p):
        r = spin_parity(p, "generic")
        if r is None:
            return
        assert r.parity == arf_oracle(p)
        assert len(r.basis) == genus(p)
        if p.is_standard():
            assert spin_blocks(p).parity == r.parity


def random_order_parity(p, rng):
    """Arf invariant from a symplectic basis picked in a random order.

    Cycles are bitmasks over the letter cycles; phi is evaluated from its
    quadratic-form expansion rather than tracked through the updates.
    """
    d = p.d
    om = [[int(x) % 2 for x in row] for row in p.omega()]

    def bits(x):
        return [i for i in range(d) if x >> i & 1]

    def form(x, y):
        return sum(om[i][j] for i in bits(x) for j in bits(y)) % 2

    def phi(x):
        b = bits(x)
        return (len(b) + sum(om[i][j] for i in b for j in b if i < j)) % 2

    live, total = [1 << i for i in range(d)], 0
    while True:
        rng.shuffle(live)
        pair = next(((x, y) for x in live for y in live if form(x, y)), None)
        if pair is None:
            return total
        x, y = pair
        total ^= phi(x) & phi(y)
        live = [c ^ (x if form(c, y) else 0) ^ (y if form(c, x) else 0)
                for c in live if c not in (x, y)]
        live = [c for c in live if c]


class TestRemovable:
    def test_forgets_three_zeros(self):
        (q, note), = reduce_removable(P("(7,6,2,3,4,5,1)"))
        assert q == P("(4,3,2,1)")
        assert note.count("forget") == 3

    def test_marked_removable(self):
        p, _ = standardize(P("(7,6,1,4,3,2,8,5)"))
        got = [r for r, _ in reduce_removable(p)]
        assert got == [P("(7,4,3,2,6,5,1)"), P("(7,3,2,6,5,4,1)")]

    def test_genus_one(self):
        (q, _), = reduce_removable(P("(5,2,3,4,1)"))
        assert q == P("(2,1)")

    def test_four_zero(self):
        inv = invariants(P("(7,4,5,2,6,3,1)"))
        assert inv.signature == Signature(4, (0,))
        assert inv.kind == "odd"

    def test_requires_standard(self):
        with pytest.raises(ValueError):
            reduce_removable(P("(3,1,2)"))

    @given(irreducible(min_d=3, max_d=8))
    def test_reduction_keeps_nonzero_degrees(self, p):
        q, _ = standardize(p)
        sig = singularity_profile(p)
        for r, _ in reduce_removable(q):
            rs = singularity_profile(r)
            assert 0 not in rs.degrees or r.d == 2
            assert sorted(x for x in rs.degrees if x) == sorted(x for x in sig.degrees if x)
            assert r.is_standard()


class TestClassKey:
    def test_hyperelliptic(self):
        assert is_hyperelliptic_class(P("(4,3,2,1)"))
        assert is_hyperelliptic_class(P("(4,1,3,2)"))
        assert is_hyperelliptic_class(P("(7,4,5,1,6,2,3)"))
        assert not is_hyperelliptic_class(P("(6,3,2,5,4,1)"))
        assert not is_hyperelliptic_class(P("(4,3,6,1,5,2)"))

    @pytest.mark.parametrize("w, sig, kind", [
        ("(7,3,2,6,5,4,1)", "(1;{3})", "none"),
        ("(6,5,4,3,2,1)", "(4)", "hyperelliptic"),
        ("(6,3,2,5,4,1)", "(4)", "odd"),
    ])
    def test_examples(self, w, sig, kind):
        k = class_key(P(w))
        assert (k.signature, k.kind) == (Signature.parse(sig), kind)

    @given(irreducible(max_d=9))
    def test_inverse(self, p):
        assert class_key(p.inverse()) == class_key(p)

    @pytest.mark.parametrize("d", [4, 5, 6])
    def test_complete_invariant(self, d):
        keys = {}
        seen = set()
        for w in itertools.permutations(range(1, d + 1)):
            if w in seen or not is_irreducible_one_line(w):
                continue
            cls = rauzy_class(w)
            seen.update(cls.vertices)
            ks = {class_key(q) for q in cls.permutations()}
            assert len(ks) == 1
            k = ks.pop()
            assert k not in keys
            keys[k] = w

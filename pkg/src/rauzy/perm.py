"""
Labelled permutations and Rauzy moves.

A permutation on ``d`` letters is a pair of rows (top, bottom), each listing
every letter once.  The top position of a letter is ``pi0(letter)`` and its
bottom position is ``pi1(letter)``, both 1-based.  Two permutations are equal
when they induce the same position map, so renaming letters never matters.

The one-line form ``(p1, ..., pd)`` lists, for each bottom position, the top
position of the letter sitting there::

    >>> p = Permutation.parse("(3,2,1)")
    >>> p.rauzy_induce(0)
    Permutation('(3,1,2)')
    >>> p.rauzy_induce(1).two_row()
    '1 3 2 / 3 2 1'
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np


class PermutationError(ValueError):
    """Raised when input does not describe a valid permutation."""


class ReducibleError(PermutationError):
    """Raised when an operation needs an irreducible permutation."""


def _maybe_int(tokens):
    if all(re.fullmatch(r"-?\d+", t) for t in tokens):
        return [int(t) for t in tokens]
    return list(tokens)


@dataclass(frozen=True, eq=False)
class Permutation:
    """A pair of rows over a common alphabet.

    ``alphabet`` fixes the order used for vector and matrix indices; it
    defaults to the order of the top row.
    """

    top_row: tuple
    bottom_row: tuple
    alphabet: tuple = None
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        top, bot = tuple(self.top_row), tuple(self.bottom_row)
        object.__setattr__(self, "top_row", top)
        object.__setattr__(self, "bottom_row", bot)
        if self.alphabet is None:
            object.__setattr__(self, "alphabet", top)
        else:
            object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if len(set(top)) != len(top) or not top:
            raise PermutationError("top row must list distinct letters")
        if set(top) != set(bot) or len(bot) != len(top):
            raise PermutationError("rows must use the same letters")
        if set(self.alphabet) != set(top) or len(self.alphabet) != len(top):
            raise PermutationError("alphabet does not match the rows")
        pos = (
            {a: i + 1 for i, a in enumerate(top)},
            {a: i + 1 for i, a in enumerate(bot)},
        )
        object.__setattr__(self, "_pos", pos)

    # construction

    @classmethod
    def from_one_line(cls, values):
        values = tuple(int(v) for v in values)
        d = len(values)
        if sorted(values) != list(range(1, d + 1)):
            raise PermutationError(f"{values} is not a permutation of 1..{d}")
        return cls(tuple(range(1, d + 1)), values)

    @classmethod
    def parse(cls, text):
        """Read ``(p1,...,pd)`` or a two-row form ``a b c / c b a``."""
        text = text.strip()
        if "/" in text:
            top, _, bot = text.partition("/")
            top, bot = top.split(), bot.split()
            if len(top) != len(bot):
                raise PermutationError("rows have different lengths")
            top, bot = _maybe_int(top), _maybe_int(bot)
            return cls(tuple(top), tuple(bot))
        m = re.fullmatch(r"\(?\s*([\d\s,]*?)\s*\)?", text)
        if not m:
            raise PermutationError(f"cannot parse permutation {text!r}")
        parts = [t for t in re.split(r"[\s,]+", m.group(1)) if t]
        if not parts:
            raise PermutationError("empty permutation")
        return cls.from_one_line(parts)

    @classmethod
    def from_json(cls, obj):
        alphabet = tuple(obj["alphabet"])
        top = sorted(alphabet, key=lambda a: obj["top"][alphabet.index(a)])
        bot = sorted(alphabet, key=lambda a: obj["bottom"][alphabet.index(a)])
        return cls(tuple(top), tuple(bot), alphabet)

    def to_json(self):
        return {
            "alphabet": list(self.alphabet),
            "top": [self.pi0(a) for a in self.alphabet],
            "bottom": [self.pi1(a) for a in self.alphabet],
        }

    # basic data

    def __len__(self):
        return len(self.top_row)

    @property
    def d(self):
        return len(self.top_row)

    def pi0(self, letter):
        return self._pos[0][letter]

    def pi1(self, letter):
        return self._pos[1][letter]

    def pos(self, row, letter):
        return self._pos[row][letter]

    def row(self, eps):
        return self.top_row if eps == 0 else self.bottom_row

    def last(self, eps):
        """The letter in the last position of row ``eps``."""
        return self.row(eps)[-1]

    def index(self, letter):
        return self.alphabet.index(letter)

    def one_line(self):
        top = self._pos[0]
        return tuple(top[a] for a in self.bottom_row)

    def two_row(self):
        return " ".join(map(str, self.top_row)) + " / " + " ".join(map(str, self.bottom_row))

    def __str__(self):
        return "(" + ",".join(map(str, self.one_line())) + ")"

    def __repr__(self):
        return f"Permutation('{self}')"

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line() == other.one_line()

    def __hash__(self):
        return hash(self.one_line())

    def canonical(self):
        """The permutation on letters 1..d with the identity as top row."""
        return Permutation.from_one_line(self.one_line())

    def relabel(self, mapping):
        f = mapping.get if isinstance(mapping, dict) else mapping
        return Permutation(
            tuple(f(a) for a in self.top_row),
            tuple(f(a) for a in self.bottom_row),
            tuple(f(a) for a in self.alphabet),
        )

    # predicates

    def is_irreducible(self):
        return is_irreducible_one_line(self.one_line())

    def is_standard(self):
        return self.top_row[0] == self.bottom_row[-1] and self.top_row[-1] == self.bottom_row[0]

    def is_self_inverse(self):
        return self == self.inverse()

    # operations

    def inverse(self):
        return Permutation(self.bottom_row, self.top_row, self.alphabet)

    def rauzy_induce(self, eps):
        """Apply a Rauzy move of type ``eps`` (0 or 1)."""
        if eps not in (0, 1):
            raise ValueError("move type must be 0 or 1")
        if not self.is_irreducible():
            raise ReducibleError(f"{self} is reducible")
        winner = self.last(eps)
        loser = self.last(1 - eps)
        moved = list(self.row(1 - eps)[:-1])
        moved.insert(moved.index(winner) + 1, loser)
        if eps == 0:
            return Permutation(self.top_row, tuple(moved), self.alphabet)
        return Permutation(tuple(moved), self.bottom_row, self.alphabet)

    def rauzy_preimage(self, eps):
        """The permutation sent to ``self`` by a move of type ``eps``.

        Returns the pair (preimage, loser) where ``loser`` is the letter
        beaten in that move.
        """
        if not self.is_irreducible():
            raise ReducibleError(f"{self} is reducible")
        winner = self.last(eps)
        other = list(self.row(1 - eps))
        loser = other[other.index(winner) + 1]
        other.remove(loser)
        other.append(loser)
        if eps == 0:
            return Permutation(self.top_row, tuple(other), self.alphabet), loser
        return Permutation(tuple(other), self.bottom_row, self.alphabet), loser

    def omega(self):
        """The antisymmetric matrix indexed by the alphabet.

        Entry (a, b) is 1 when a is left of b on top and right of b on the
        bottom, -1 in the opposite case and 0 otherwise.
        """
        letters = self.alphabet
        p0 = np.array([self.pi0(a) for a in letters])
        p1 = np.array([self.pi1(a) for a in letters])
        top_lt = p0[:, None] < p0[None, :]
        bot_gt = p1[:, None] > p1[None, :]
        top_gt = p0[:, None] > p0[None, :]
        bot_lt = p1[:, None] < p1[None, :]
        return (top_lt & bot_gt).astype(int) - (top_gt & bot_lt).astype(int)


def is_irreducible_one_line(w):
    """No proper prefix of bottom positions holds exactly the first top positions."""
    best = 0
    for k, v in enumerate(w[:-1], start=1):
        best = max(best, v)
        if best == k:
            return False
    return True


# Fast moves on one-line tuples (top row fixed to the identity).

def move0(w):
    d = len(w)
    rest = list(w[:-1])
    rest.insert(rest.index(d) + 1, w[-1])
    return tuple(rest)


def move1(w):
    d = len(w)
    a1 = w[-1]
    return tuple(v if v <= a1 else (a1 + 1 if v == d else v + 1) for v in w)


def move(w, eps):
    return move0(w) if eps == 0 else move1(w)


def reversal(d):
    return Permutation.from_one_line(range(d, 0, -1))

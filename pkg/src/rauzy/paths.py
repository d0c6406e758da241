"""
Rauzy paths and their matrices.

A path is stored run-length encoded: a tuple of ``(type, count)`` pairs.
Long runs such as ``1^(c(d-1))`` with astronomically large ``c`` stay cheap,
because a run of equal moves has a closed-form matrix.  Within a run of type
``eps`` the winner never changes and the losers cycle through the letters
that follow it in the other row.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .perm import Permutation, ReducibleError


def identity(d):
    m = np.zeros((d, d), dtype=object)
    for i in range(d):
        m[i, i] = 1
    return m


def _run(p, eps, count):
    """Winner, loser counts and end point of ``count`` moves of type ``eps``."""
    if not p.is_irreducible():
        raise ReducibleError(f"{p} is reducible")
    winner = p.last(eps)
    other = list(p.row(1 - eps))
    k = other.index(winner)
    tail = other[k + 1:]
    length = len(tail)
    q, r = divmod(count, length)
    losses = {}
    for i, letter in enumerate(reversed(tail)):
        losses[letter] = q + (1 if i < r else 0)
    if r:
        tail = tail[-r:] + tail[:-r]
    new_other = tuple(other[:k + 1] + tail)
    if eps == 0:
        end = Permutation(p.top_row, new_other, p.alphabet)
    else:
        end = Permutation(new_other, p.bottom_row, p.alphabet)
    return winner, losses, end


def theta_step(p, eps):
    """Identity plus a single 1 in row winner, column loser."""
    m = identity(p.d)
    m[p.index(p.last(eps)), p.index(p.last(1 - eps))] = 1
    return m


def _compress(moves):
    runs = []
    for e in moves:
        e = int(e)
        if e not in (0, 1):
            raise ValueError(f"bad move {e!r}")
        if runs and runs[-1][0] == e:
            runs[-1][1] += 1
        else:
            runs.append([e, 1])
    return tuple((e, n) for e, n in runs)


def _merge(runs):
    out = []
    for e, n in runs:
        if n < 0:
            raise ValueError("run lengths must be non-negative")
        if n == 0:
            continue
        if out and out[-1][0] == e:
            out[-1] = (e, out[-1][1] + n)
        else:
            out.append((e, n))
    return tuple(out)


def parse_moves(text):
    """Read ``0110`` or ``0 1^3 0^12`` style move strings into runs."""
    runs = []
    for token in text.replace(",", " ").split():
        m = re.fullmatch(r"([01])\^(\d+)", token)
        if m:
            runs.append((int(m.group(1)), int(m.group(2))))
        elif re.fullmatch(r"[01]+", token):
            runs.extend(_compress(token))
        else:
            raise ValueError(f"cannot parse move token {token!r}")
    return _merge(runs)


@dataclass(frozen=True)
class RauzyPath:
    start: Permutation
    runs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "runs", _merge(tuple(self.runs)))

    @classmethod
    def from_moves(cls, start, moves):
        return cls(start, _compress(moves))

    @classmethod
    def parse(cls, start, text):
        return cls(start, parse_moves(text))

    def __len__(self):
        return sum(n for _, n in self.runs)

    def moves(self):
        for e, n in self.runs:
            for _ in range(n):
                yield e

    def __add__(self, other):
        if other.start != self.end:
            raise ValueError("paths do not connect")
        return RauzyPath(self.start, self.runs + other.runs)

    def run_endpoints(self):
        """Yield (start, type, count, winner, losses, end) for every run."""
        p = self.start
        for e, n in self.runs:
            winner, losses, q = _run(p, e, n)
            yield p, e, n, winner, losses, q
            p = q

    @property
    def end(self):
        p = self.start
        for e, n in self.runs:
            p = _run(p, e, n)[2]
        return p

    def is_loop(self):
        return self.end == self.start

    def steps(self):
        """Yield (permutation, type, winner, loser) move by move."""
        p = self.start
        for e in self.moves():
            q = p.rauzy_induce(e)
            yield p, e, p.last(e), p.last(1 - e)
            p = q

    def winners(self):
        return {w for _, _, n, w, _, _ in self.run_endpoints() if n}

    def letters_all_win(self):
        return self.winners() == set(self.start.alphabet)

    def theta(self):
        """The ordered product of the step matrices along the path."""
        p = self.start
        m = identity(p.d)
        for _, _, _, winner, losses, _ in self.run_endpoints():
            w = p.index(winner)
            for letter, k in losses.items():
                if k:
                    j = p.index(letter)
                    m[:, j] = m[:, j] + k * m[:, w]
        return m

    def sub(self, first, last):
        """Steps ``first`` through ``last`` (1-based, inclusive) as a path."""
        if not 1 <= first <= last + 1 or last > len(self):
            raise ValueError("step range out of bounds")
        out, p, done, start = [], self.start, 0, None
        for e, n in self.runs:
            if start is None and first - 1 <= done + n:
                start = _run(p, e, first - 1 - done)[2]
            a, b = max(done + 1, first), min(done + n, last)
            if a <= b:
                out.append((e, b - a + 1))
            p = _run(p, e, n)[2]
            done += n
        if start is None:
            start = p
        return RauzyPath(start, tuple(out))

    def is_positive_product(self, first=1, last=None):
        last = len(self) if last is None else last
        m = self.sub(first, last).theta()
        return all(x > 0 for x in m.flat)

    def to_string(self):
        return " ".join(str(e) if n == 1 else f"{e}^{n}" for e, n in self.runs)

    def __str__(self):
        return self.to_string()

"""
Vertical cycles of a permutation and the Lagrangian test.

The orbits of ``a -> top letter at the bottom position of a`` partition the
alphabet.  Summing the columns of the pairing matrix over an orbit gives the
vertical cycle of that orbit.  The vertical cycles span an isotropic
subspace; the permutation is Lagrangian when that span has dimension equal
to the genus.

    >>> p = Permutation.parse("(4,1,3,2)")
    >>> is_lagrangian(p)
    True
"""
from __future__ import annotations

from dataclasses import dataclass

from . import exact
from .invariants import genus
from .perm import Permutation


def orbits(p):
    """Orbits of the letter map, each listed from its first letter in alphabet order."""
    step = {a: p.top_row[p.pi1(a) - 1] for a in p.alphabet}
    seen, out = set(), []
    for a in p.alphabet:
        if a in seen:
            continue
        orb, b = [], a
        while b not in seen:
            seen.add(b)
            orb.append(b)
            b = step[b]
        out.append(tuple(orb))
    return out


def indicator(p, letters):
    e = [0] * p.d
    for a in letters:
        e[p.index(a)] = 1
    return e


def vertical_cycles(p):
    """Pairs (orbit, integer vector) in alphabet coordinates."""
    om = p.omega()
    out = []
    for orb in orbits(p):
        idx = [p.index(a) for a in orb]
        v = tuple(int(sum(om[i, j] for j in idx)) for i in range(p.d))
        out.append((orb, v))
    return out


def pairing(p, u, v):
    """Intersection of the cycles with preimages ``u`` and ``v``."""
    om = p.omega()
    return sum(int(u[i]) * int(om[i, j]) * int(v[j]) for i in range(p.d) for j in range(p.d))


def cycle_pairing(p, first, second):
    """Intersection of the vertical cycles of two letter sets."""
    om = p.omega()
    return sum(int(om[p.index(a), p.index(b)]) for a in first for b in second)


def is_lagrangian(p):
    return exact.rank([v for _, v in vertical_cycles(p)]) == genus(p)


def is_transposition_lagrangian(p):
    """Exactly genus-many swapped pairs whose cycles are independent."""
    if not p.is_self_inverse():
        raise ValueError(f"{p} is not self-inverse")
    swaps = [v for orb, v in vertical_cycles(p) if len(orb) == 2]
    g = genus(p)
    return len(swaps) == g and exact.rank(swaps) == g


@dataclass(frozen=True)
class LagrangianReport:
    orbits: tuple
    rank: int
    genus: int
    lagrangian: bool
    transposition_lagrangian: object

    def to_json(self):
        return {
            "orbits": [list(o) for o in self.orbits],
            "rank": self.rank,
            "genus": self.genus,
            "lagrangian": self.lagrangian,
            "transposition_lagrangian": self.transposition_lagrangian,
        }


def lagrangian_report(p):
    cyc = vertical_cycles(p)
    r = exact.rank([v for _, v in cyc])
    g = genus(p)
    tl = is_transposition_lagrangian(p) if p.is_self_inverse() else None
    return LagrangianReport(tuple(o for o, _ in cyc), r, g, r == g, tl)

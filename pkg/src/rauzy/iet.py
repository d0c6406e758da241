"""
Interval exchange transformations with exact rational lengths.

    >>> t = IET(Permutation.parse("(3,2,1)"), (1, 1, 1))
    >>> t(0)
    Fraction(2, 1)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .paths import RauzyPath
from .perm import Permutation, ReducibleError


class InductionTieError(ValueError):
    """Raised when the two last intervals have equal length."""

    def __init__(self, msg, step=None):
        super().__init__(msg)
        self.step = step


@dataclass(frozen=True)
class IET:
    """A permutation plus one positive length per letter, in alphabet order."""

    perm: Permutation
    lengths: tuple

    def __post_init__(self):
        lengths = tuple(Fraction(x) for x in self.lengths)
        if len(lengths) != self.perm.d:
            raise ValueError("need one length per letter")
        if any(x <= 0 for x in lengths):
            raise ValueError("lengths must be positive")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def parse(cls, perm, text):
        parts = [s for s in text.replace(";", ",").split(",") if s.strip()]
        return cls(perm, tuple(Fraction(s.strip()) for s in parts))

    def length(self, letter):
        return self.lengths[self.perm.index(letter)]

    @property
    def total(self):
        return sum(self.lengths)

    def left_endpoint(self, letter):
        """Left end of the top interval of ``letter``."""
        p = self.perm
        return sum(self.length(a) for a in p.top_row[: p.pi0(letter) - 1])

    def translations(self):
        om = self.perm.omega()
        return tuple(sum(int(om[i, j]) * self.lengths[j] for j in range(self.perm.d))
                     for i in range(self.perm.d))

    def locate(self, x):
        x = Fraction(x)
        if not 0 <= x < self.total:
            raise ValueError(f"{x} outside [0, {self.total})")
        acc = Fraction(0)
        for a in self.perm.top_row:
            acc += self.length(a)
            if x < acc:
                return a
        raise AssertionError("unreachable")

    def __call__(self, x):
        a = self.locate(x)
        return Fraction(x) + self.translations()[self.perm.index(a)]

    def induce_once(self):
        """One step of Rauzy-Veech induction.

        Returns (type, winner, loser, new IET).
        """
        p = self.perm
        if not p.is_irreducible():
            raise ReducibleError(f"{p} is reducible")
        a0, a1 = p.last(0), p.last(1)
        l0, l1 = self.length(a0), self.length(a1)
        if l0 == l1:
            raise InductionTieError(f"tie between {a0!r} and {a1!r}")
        eps = 0 if l0 > l1 else 1
        winner, loser = (a0, a1) if eps == 0 else (a1, a0)
        lengths = list(self.lengths)
        lengths[p.index(winner)] -= self.length(loser)
        return eps, winner, loser, IET(p.rauzy_induce(eps), tuple(lengths))

    def path_prefix(self, n):
        """The first ``n`` induction steps as (path, theta, final IET)."""
        t, moves = self, []
        for i in range(n):
            try:
                eps, _, _, t = t.induce_once()
            except InductionTieError as exc:
                raise InductionTieError(str(exc), step=i + 1) from None
            moves.append(eps)
        path = RauzyPath.from_moves(self.perm, moves)
        return path, path.theta(), t

    def preimages(self):
        """For each type, the IET sent to ``self`` by one induction step."""
        out = {}
        for eps in (0, 1):
            pre, loser = self.perm.rauzy_preimage(eps)
            lengths = list(self.lengths)
            lengths[pre.index(pre.last(eps))] += self.length(loser)
            out[eps] = IET(pre, tuple(lengths))
        return out

    def keane_violation(self, horizon):
        """First connection between left endpoints within ``horizon`` iterates.

        Scans iterate counts in increasing order, then letters in alphabet
        order.  Returns (alpha, beta, m) or None.
        """
        p = self.perm
        targets = {self.left_endpoint(b): b for b in p.alphabet if p.pi0(b) > 1}
        points = {a: self.left_endpoint(a) for a in p.alphabet}
        for m in range(1, horizon + 1):
            for a in p.alphabet:
                points[a] = self(points[a])
            for a in p.alphabet:
                b = targets.get(points[a])
                if b is not None:
                    return a, b, m
        return None

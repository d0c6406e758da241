"""
Self-inverse standard representatives for every Rauzy class.

A representative is assembled from small blocks, each on fresh letters,
framed by an outer pair of letters ``A`` and ``Z``::

    top:    A  block_1 ... block_k  Z
    bottom: Z  block_1 ... block_k  A

Block kinds (degrees contributed in brackets):

* ``S``: one fixed letter [nothing].
* ``U(2n)``: n adjacent swaps [2n].
* ``V(2n)``, n > 1: n - 2 swaps then a reversed run of four [2n].
* ``V22``: a reversed run of five [2, 2].
* ``W(2m+1, 2n+1)``: m swaps, a reversed run of three, n swaps [2m+1, 2n+1].
* ``R(k)``: a reversed run of k letters, used for hyperelliptic interiors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation
from .invariants import Signature

KINDS = ("hyperelliptic", "even", "odd", "none")


class NoSuchClass(ValueError):
    """Raised for a signature and type that no Rauzy class realises."""


@dataclass(frozen=True)
class ClassKey:
    signature: Signature
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def genus(self):
        return self.signature.genus

    @property
    def ambiguous_marking(self):
        """The marked singularity is removable in a genus above one."""
        return self.signature.marked == 0 and self.genus > 1

    def __str__(self):
        return f"({self.signature},{self.kind})"


@dataclass(frozen=True)
class BlockSpec:
    kind: str
    params: tuple = ()

    def size(self):
        k, p = self.kind, self.params
        if k == "S":
            return 1
        if k in ("U", "V"):
            return p[0]
        if k == "V22":
            return 5
        if k == "W":
            return p[0] + p[1] + 1
        if k == "R":
            return p[0]
        raise ValueError(f"unknown block {k!r}")

    def degrees(self):
        k, p = self.kind, self.params
        if k == "S":
            return ()
        if k in ("U", "V"):
            return (p[0],)
        if k == "V22":
            return (2, 2)
        if k == "W":
            return tuple(p)
        raise ValueError(f"block {k!r} has no fixed degrees")

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.params))})"


def S():
    return BlockSpec("S")


def U(n):
    if n < 2 or n % 2:
        raise ValueError("U needs an even size of at least 2")
    return BlockSpec("U", (n,))


def V(n):
    if n < 4 or n % 2:
        raise ValueError("V needs an even size of at least 4")
    return BlockSpec("V", (n,))


def V22():
    return BlockSpec("V22")


def W(m, n):
    if m % 2 == 0 or n % 2 == 0 or m < 1 or n < 1:
        raise ValueError("W needs two odd sizes")
    return BlockSpec("W", (m, n))


def R(k):
    return BlockSpec("R", (k,))


def _swaps(letters):
    top, bot = [], []
    for a, b in zip(letters[::2], letters[1::2]):
        top += [a, b]
        bot += [b, a]
    return top, bot


def block_rows(block, tag):
    """Top and bottom rows of a block on letters tagged with ``tag``."""
    n = block.size()
    letters = [f"{tag}.{i}" for i in range(1, n + 1)]
    k = block.kind
    if k == "S":
        return letters, letters
    if k == "U":
        return _swaps(letters)
    if k == "V":
        top, bot = _swaps(letters[:-4])
        return top + letters[-4:], bot + letters[-4:][::-1]
    if k in ("V22", "R"):
        return letters, letters[::-1]
    if k == "W":
        m = block.params[0] - 1
        t1, b1 = _swaps(letters[:m])
        mid = letters[m:m + 3]
        t2, b2 = _swaps(letters[m + 3:])
        return t1 + mid + t2, b1 + mid[::-1] + b2
    raise ValueError(f"unknown block {k!r}")


def assemble(blocks):
    """Frame the blocks with the outer letters and return the permutation."""
    top, bot = ["A"], ["Z"]
    for i, block in enumerate(blocks, start=1):
        t, b = block_rows(block, str(i))
        top += t
        bot += b
    top.append("Z")
    bot.append("A")
    return Permutation(tuple(top), tuple(bot))


def _interleave(blocks):
    out = []
    for i, b in enumerate(blocks):
        if i:
            out.append(S())
        out.append(b)
    return out


def admissible_kinds(signature):
    """Component types realised by a signature, zeros ignored."""
    degs = sorted((x for x in signature.degrees if x), reverse=True)
    g = signature.genus
    if g == 1:
        return ("hyperelliptic",)
    if g == 2:
        return ("hyperelliptic",)
    all_even = all(x % 2 == 0 for x in degs)
    if g == 3:
        if degs in ([4], [2, 2]):
            return ("hyperelliptic", "odd")
        return ("none",)
    if len(degs) == 1:
        return ("hyperelliptic", "even", "odd")
    if len(degs) == 2 and degs[0] == degs[1]:
        if all_even:
            return ("hyperelliptic", "even", "odd")
        return ("hyperelliptic", "none")
    if all_even:
        return ("even", "odd")
    return ("none",)


def validate_key(key):
    sig = key.signature
    if any(x < 0 for x in sig.degrees):
        raise NoSuchClass("degrees must be non-negative")
    if sum(sig.degrees) % 2:
        raise NoSuchClass(f"degrees of {sig} have odd sum")
    if key.kind not in admissible_kinds(sig):
        raise NoSuchClass(f"no {key.kind} component with signature {sig}")


def blocks_for(key):
    """The block list whose assembly lies in the class with this key."""
    validate_key(key)
    sig = key.signature
    zeros = sum(1 for x in sig.degrees if x == 0)
    nonzero = tuple(x for x in sig.degrees if x)
    if not nonzero:
        return [S()] * (zeros - 1)
    if zeros:
        marked = sig.marked if sig.marked else nonzero[0]
        rest = list(nonzero)
        rest.remove(marked)
        inner = _blocks_nonzero(Signature(marked, tuple(rest)), key.kind)
        if sig.marked == 0:
            return inner + [S()] * zeros
        return [S()] * zeros + inner
    return _blocks_nonzero(sig, key.kind)


def _blocks_nonzero(sig, kind):
    degs = sig.degrees
    g = sig.genus
    if kind == "hyperelliptic":
        if len(degs) == 1:
            return [R(2 * g - 2)]
        return [R(2 * g - 1)]
    first, rest = degs[0], list(sig.rest)
    if kind in ("none",) or any(x % 2 for x in degs):
        if first % 2:
            odds = [first] + sorted((x for x in rest if x % 2), reverse=True)
            evens = sorted((x for x in rest if x % 2 == 0), reverse=True)
            ws = [W(odds[i + 1], odds[i]) for i in range(0, len(odds), 2)]
            blocks = [U(x) for x in reversed(evens)] + list(reversed(ws))
        else:
            evens = [first] + sorted((x for x in rest if x % 2 == 0), reverse=True)
            odds = sorted((x for x in rest if x % 2), reverse=True)
            ws = [W(odds[i + 1], odds[i]) for i in range(0, len(odds), 2)]
            blocks = list(reversed(ws)) + [U(x) for x in reversed(evens)]
        return _interleave(blocks)
    ells = [first] + sorted(rest, reverse=True)
    if kind == "odd":
        return _interleave([U(x) for x in reversed(ells)])
    # even spin
    if all(x == 2 for x in ells):
        bs = [V22()] + [U(2)] * (len(ells) - 2)
        return _interleave(list(reversed(bs)))
    j = next(i for i, x in enumerate(ells) if x > 2)
    bs = [V(x) if i == j else U(x) for i, x in enumerate(ells)]
    return _interleave(list(reversed(bs)))


def build_self_inverse(key):
    """A standard self-inverse permutation in the class with this key."""
    return assemble(blocks_for(key))


# Reference representatives for genus at most three.
_GENUS3 = {
    ((0,), "hyperelliptic"): (2, 1),
    ((0, 0), "hyperelliptic"): (3, 2, 1),
    ((2,), "hyperelliptic"): (4, 3, 2, 1),
    ((1, 1), "hyperelliptic"): (5, 4, 3, 2, 1),
    ((4,), "hyperelliptic"): (6, 5, 4, 3, 2, 1),
    ((4,), "odd"): (6, 3, 2, 5, 4, 1),
    ((3, 1), "none"): (7, 4, 3, 2, 6, 5, 1),
    ((1, 3), "none"): (7, 3, 2, 6, 5, 4, 1),
    ((2, 2), "hyperelliptic"): (7, 6, 5, 4, 3, 2, 1),
    ((2, 2), "odd"): (7, 3, 2, 4, 6, 5, 1),
    ((1, 1, 2), "none"): (8, 3, 2, 4, 7, 6, 5, 1),
    ((2, 1, 1), "none"): (8, 4, 3, 2, 5, 7, 6, 1),
    ((1, 1, 1, 1), "none"): (9, 4, 3, 2, 5, 8, 7, 6, 1),
}


def genus3_table():
    """All table rows as (key, permutation) pairs."""
    out = []
    for (degs, kind), w in _GENUS3.items():
        key = ClassKey(Signature(degs[0], degs[1:]), kind)
        out.append((key, Permutation.from_one_line(w)))
    return out


def genus3_lookup(key):
    for k, p in genus3_table():
        if k == key:
            return p
    raise KeyError(str(key))

"""
Class invariants: singularity degrees, genus, spin parity, hyperellipticity.

Interval endpoints are glued into singularities by three rules (neighbours
in a row share a vertex, the outer corners of both rows agree, and each
letter's top and bottom copies share their ends).  A singularity meeting the
interior of the top row in ``n`` vertices has degree ``n - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .perm import Permutation, ReducibleError, reversal


@dataclass(frozen=True)
class Signature:
    """Degree of the marked (leftmost) singularity plus the other degrees."""

    marked: int
    rest: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rest", tuple(sorted(self.rest, reverse=True)))

    @property
    def degrees(self):
        return (self.marked,) + self.rest

    @property
    def genus(self):
        return 1 + sum(self.degrees) // 2

    @property
    def dimension(self):
        """Number of letters of a permutation with this signature."""
        return sum(self.degrees) + len(self.degrees) + 1

    def __str__(self):
        inner = ",".join(map(str, self.rest))
        return f"({self.marked};{{{inner}}})" if self.rest else f"({self.marked})"

    @classmethod
    def parse(cls, text):
        text = text.strip().strip("()")
        if ";" in text:
            head, _, tail = text.partition(";")
            tail = tail.strip().strip("{}")
            rest = tuple(int(t) for t in tail.split(",") if t.strip())
            return cls(int(head), rest)
        nums = [int(t) for t in text.split(",") if t.strip()]
        return cls(nums[0], tuple(nums[1:]))


class _Union:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def singularity_classes(p):
    """Union-find over endpoints ``(letter, row, 'L'|'R')``."""
    uf = _Union()
    for eps in (0, 1):
        row = p.row(eps)
        for a, b in zip(row, row[1:]):
            uf.union((a, eps, "R"), (b, eps, "L"))
    uf.union((p.top_row[0], 0, "L"), (p.bottom_row[0], 1, "L"))
    uf.union((p.top_row[-1], 0, "R"), (p.bottom_row[-1], 1, "R"))
    for a in p.alphabet:
        for side in "LR":
            uf.union((a, 0, side), (a, 1, side))
    return uf


def singularity_profile(p):
    if not p.is_irreducible():
        raise ReducibleError(f"{p} is reducible")
    uf = singularity_classes(p)
    counts = {}
    for a in p.top_row[1:]:
        r = uf.find((a, 0, "L"))
        counts[r] = counts.get(r, 0) + 1
    marked = uf.find((p.top_row[0], 0, "L"))
    rest = [n - 1 for r, n in counts.items() if r != marked]
    return Signature(counts[marked] - 1, tuple(rest))


def genus(p):
    sig = singularity_profile(p)
    if p.d != sig.dimension:
        raise AssertionError(f"letter count mismatch for {p}")
    return sig.genus


# spin parity

def _gf2_omega(p, letters):
    om = p.omega()
    idx = [p.index(a) for a in letters]
    return [[int(om[i, j]) & 1 for j in idx] for i in idx]


@dataclass(frozen=True)
class SpinReport:
    parity: int
    basis: tuple
    phi_values: dict
    trace: tuple = field(default=(), repr=False)


@dataclass(frozen=True)
class SpinStage:
    """Cycles still unpaired after some rounds, in the original letters."""

    labels: tuple
    cycles: dict
    phi: dict
    matrix: tuple


def symplectic_reduce(labels, omega, cycles, phi):
    """Pair off cycles by repeated symplectic Gram-Schmidt over GF(2).

    ``cycles[k]`` is the set of original letters summing to cycle ``k``.
    Picks the lowest-index surviving cycle with a nonzero pairing and its
    lowest-index partner.  Returns (pairs, trace).
    """
    labels = list(labels)
    om = {a: {b: omega[i][j] for j, b in enumerate(labels)} for i, a in enumerate(labels)}
    cycles = dict(cycles)
    phi = dict(phi)
    pairs = []
    trace = [_stage(labels, om, cycles, phi)]
    while True:
        pick = None
        for a in labels:
            partner = next((b for b in labels if om[a][b]), None)
            if partner is not None:
                pick = (a, partner)
                break
        if pick is None:
            break
        a, b = pick
        pairs.append(((a, cycles[a], phi[a]), (b, cycles[b], phi[b])))
        left = [k for k in labels if k not in (a, b)]
        new_cycles, new_phi = {}, {}
        for k in left:
            ka, kb = om[k][a], om[k][b]
            c = set(cycles[k])
            if kb:
                c ^= cycles[a]
            if ka:
                c ^= cycles[b]
            new_cycles[k] = frozenset(c)
            new_phi[k] = (phi[k] + kb * phi[a] + ka * phi[b] + ka * kb) % 2
        new_om = {
            k: {l: (om[k][l] + om[k][a] * om[l][b] + om[k][b] * om[l][a]) % 2 for l in left}
            for k in left
        }
        labels, om, cycles, phi = left, new_om, new_cycles, new_phi
        trace.append(_stage(labels, om, cycles, phi))
    return pairs, trace


def _stage(labels, om, cycles, phi):
    return SpinStage(
        tuple(labels),
        {k: cycles[k] for k in labels},
        {k: phi[k] for k in labels},
        tuple(tuple(om[a][b] for b in labels) for a in labels),
    )


def spin_generic(p):
    """Spin parity from the full cycle basis, starting with every index 1."""
    letters = p.alphabet
    pairs, trace = symplectic_reduce(
        letters, _gf2_omega(p, letters),
        {a: frozenset([a]) for a in letters}, {a: 1 for a in letters},
    )
    return _report(pairs, trace)


def _report(pairs, trace, offset=0):
    parity = (offset + sum(x[2] * y[2] for x, y in pairs)) % 2
    basis = tuple((_ordered(x[1]), _ordered(y[1])) for x, y in pairs)
    phi = {}
    for x, y in pairs:
        phi[_ordered(x[1])] = x[2]
        phi[_ordered(y[1])] = y[2]
    return SpinReport(parity, basis, phi, tuple(trace))


def _ordered(cycle):
    return tuple(sorted(cycle, key=str))


def block_decomposition(p):
    """Split the interior of a standard permutation into invariant runs.

    Returns a list of (first top position, letters in top order).  Each run
    occupies the same positions in both rows and cannot be split further.
    """
    if not p.is_standard():
        raise ValueError(f"{p} is not standard")
    d = p.d
    blocks, start, top_set, bot_set = [], 2, set(), set()
    for k in range(2, d):
        top_set.add(p.top_row[k - 1])
        bot_set.add(p.bottom_row[k - 1])
        if top_set == bot_set:
            blocks.append((start, tuple(p.top_row[start - 1:k])))
            start, top_set, bot_set = k + 1, set(), set()
    return blocks


def spin_blocks(p):
    """Spin parity of a standard permutation, block by block.

    The outer letters pair first; afterwards every interior cycle has index
    zero and the pairing matrix splits along the invariant runs.
    """
    first, last = p.top_row[0], p.top_row[-1]
    pairs_all, traces = [], []
    head = ((first, frozenset([first]), 1), (last, frozenset([last]), 1))
    for _, letters in block_decomposition(p):
        pairs, trace = symplectic_reduce(
            letters, _gf2_omega(p, letters),
            {a: _outer_shift(p, a, first, last) for a in letters}, {a: 0 for a in letters},
        )
        pairs_all.extend(pairs)
        traces.extend(trace)
    return _report([head] + pairs_all, traces)


def _outer_shift(p, a, first, last):
    # cycle a after pairing with the two outer letters
    om = p.omega()
    c = {a}
    if int(om[p.index(a), p.index(last)]) & 1:
        c ^= {first}
    if int(om[p.index(a), p.index(first)]) & 1:
        c ^= {last}
    return frozenset(c)


def spin_parity(p, method="auto"):
    """Spin parity report, or None when some singularity has odd degree."""
    sig = singularity_profile(p)
    if any(x % 2 for x in sig.degrees) or sig.genus < 2:
        return None
    if method == "auto":
        method = "blocks" if p.is_standard() else "generic"
    if method == "blocks":
        return spin_blocks(p)
    if method == "generic":
        return spin_generic(p)
    raise ValueError(f"unknown method {method!r}")


# removable singularities

def _forget(p, letter):
    return Permutation(
        tuple(a for a in p.top_row if a != letter),
        tuple(a for a in p.bottom_row if a != letter),
        tuple(a for a in p.alphabet if a != letter),
    )


def _strip_unmarked(p, notes):
    """Drop removable singularities other than the marked one."""
    while True:
        d = p.d
        if d <= 2:
            return p
        top, bot = p.top_row, p.bottom_row
        hit = None
        for g, h in zip(top, top[1:]):
            i = p.pi1(g)
            if i < d and bot[i] == h and g != top[0] and h != top[-1]:
                hit = h
                notes.append(f"forget {h} (follows {g} in both rows)")
                break
        if hit is None and top[1] == bot[1]:
            hit = top[1]
            notes.append(f"forget {hit} (second in both rows)")
        if hit is None:
            return p
        p = _forget(p, hit)


def reduce_removable(p):
    """Remove every degree-zero singularity of a standard permutation.

    Returns a list of (permutation, note).  When the marked singularity is
    itself removable, one result is returned for each admissible degree of
    the new marked singularity (largest first).
    """
    if not p.is_standard():
        raise ValueError(f"{p} is not standard")
    notes = []
    q = _strip_unmarked(p, notes)
    sig = singularity_profile(q)
    if q.d > 2 and sig.marked == 0:
        top, bot = q.top_row, q.bottom_row
        if top[-2] != bot[-2]:
            raise AssertionError(f"marked removable singularity not found in {q}")
        g = top[-2]
        notes.append(f"forget {g} (next to last in both rows)")
        q = _strip_unmarked(_forget(q, g), notes)
        sig = singularity_profile(q)
    if q.d > 2 and 0 in sig.degrees:
        raise AssertionError(f"removable singularity left in {q}")
    results = [(q, "; ".join(notes))]
    if q.d > 2 and singularity_profile(p).marked == 0:
        kind = _kind_reduced(q)
        for deg in sorted(set(sig.rest) - {sig.marked}, reverse=True):
            from .builder import ClassKey, build_self_inverse

            rest = list(sig.degrees)
            rest.remove(deg)
            alt = build_self_inverse(ClassKey(Signature(deg, tuple(rest)), kind))
            results.append((alt.canonical(), f"marked singularity of degree {deg}"))
        results.sort(key=lambda r: -singularity_profile(r[0]).marked)
    return results


def is_hyperelliptic_class(p):
    q, _ = _standard(p)
    r = reduce_removable(q)[0][0]
    return r == reversal(r.d)


def _standard(p):
    if p.is_standard():
        return p, None
    from .classes import standardize

    return standardize(p)


def _kind_reduced(q):
    if q == reversal(q.d):
        return "hyperelliptic"
    sig = singularity_profile(q)
    if all(x % 2 == 0 for x in sig.degrees) and sig.genus >= 2:
        return "even" if spin_blocks(q).parity == 0 else "odd"
    return "none"


def class_key(p):
    """Signature plus component type; constant on each Rauzy class."""
    from .builder import ClassKey

    sig = singularity_profile(p)
    q, _ = _standard(p)
    reduced = reduce_removable(q)[0][0]
    return ClassKey(sig, _kind_reduced(reduced))


@dataclass(frozen=True)
class Invariants:
    signature: Signature
    genus: int
    kind: str
    spin: int
    reduced: tuple


def invariants(p):
    sig = singularity_profile(p)
    key = class_key(p)
    q, _ = _standard(p)
    reduced = tuple(r for r, _ in reduce_removable(q))
    spin = spin_parity(reduced[0]) if reduced[0].d > 2 else None
    return Invariants(sig, sig.genus, key.kind, None if spin is None else spin.parity, reduced)

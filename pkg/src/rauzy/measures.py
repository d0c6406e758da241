"""
Loops built from block profiles and the invariant measures they pin down.

A block profile describes a standard permutation whose interior is a row
of reversed runs of sizes 1 to 5.  For each run there is a short loop whose
matrix has a fixed shape on that run (depending on parameters ``a`` and
``b``); chaining them and closing with ``1^(c(d-1))`` gives a loop at the
permutation.  Iterating such loops with growing parameters forces the
columns of the product matrices to cluster into ``genus`` directions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .invariants import block_decomposition
from .paths import RauzyPath, identity
from .perm import Permutation


@dataclass(frozen=True)
class BlockProfile:
    """Run starts ``j`` and sizes ``n`` of a standard block permutation."""

    d: int
    starts: tuple
    sizes: tuple

    def __post_init__(self):
        if not self.sizes or self.starts[0] != 2:
            raise ValueError("first run must start at position 2")
        for j, n, nxt in zip(self.starts, self.sizes, self.starts[1:] + (self.d,)):
            if not 1 <= n <= 5:
                raise ValueError("run sizes must lie between 1 and 5")
            if j + n != nxt:
                raise ValueError("runs must tile positions 2..d-1")

    @classmethod
    def from_sizes(cls, sizes):
        starts, j = [], 2
        for n in sizes:
            starts.append(j)
            j += n
        return cls(j, tuple(starts), tuple(sizes))

    @property
    def genus(self):
        return 1 + sum(n // 2 for n in self.sizes)

    def image(self, k):
        if k == 1:
            return self.d
        if k == self.d:
            return 1
        for j, n in zip(self.starts, self.sizes):
            if j <= k < j + n:
                return 2 * j + n - 1 - k
        raise ValueError(k)

    def permutation(self):
        return Permutation.from_one_line([self.image(k) for k in range(1, self.d + 1)])


def block_profile_of(p):
    """Recover the block profile of a standard permutation, or raise."""
    if not p.is_standard():
        raise ValueError(f"{p} is not standard")
    sizes = []
    for j, letters in block_decomposition(p):
        n = len(letters)
        rev = all(p.pos(1, a) == 2 * j + n - 1 - p.pos(0, a) for a in letters)
        if not rev or n > 5:
            raise ValueError(f"{p} is not a row of reversed runs of size at most 5")
        sizes.append(n)
    prof = BlockProfile.from_sizes(sizes)
    if prof.permutation() != p:
        raise AssertionError("profile does not rebuild the permutation")
    return prof


def subpath_runs(d, j, n, a=1, b=1):
    """Runs of the loop piece that acts on the run starting at ``j``."""
    lead = (1, d - j - n + 1)
    if n == 1:
        return (lead, (0, 1))
    if n == 2:
        return (lead, (0, a), (1, 1), (0, 2))
    if n == 3:
        return (lead, (0, 1), (1, a), (0, 1), (1, 2), (0, 3))
    if n == 4:
        return (lead, (0, 2), (1, b), (0, 1), (1, 2), (0, a), (1, 1), (0, 4))
    if n == 5:
        return (lead, (0, 2), (1, 2 * b), (0, 1), (1, 1), (0, 1), (1, 3), (0, a), (1, 1), (0, 5))
    raise ValueError("run sizes must lie between 1 and 5")


def build_gamma_cycle(profile, a, b, c):
    """The loop ``0 gamma_m ... gamma_1 1^(c(d-1))`` at the profile permutation."""
    if min(a, b, c) < 1:
        raise ValueError("loop parameters must be positive")
    runs = [(0, 1)]
    for j, n in reversed(list(zip(profile.starts, profile.sizes))):
        runs.extend(subpath_runs(profile.d, j, n, a, b))
    runs.append((1, c * (profile.d - 1)))
    return RauzyPath(profile.permutation(), tuple(runs))


def round_path(profile, a, b, c):
    """Loop used in one round: runs of size 4 or 5 take ``ceil(a/2)``."""
    runs = [(0, 1)]
    for j, n in reversed(list(zip(profile.starts, profile.sizes))):
        aa = ceil(a / 2) if n >= 4 else a
        runs.extend(subpath_runs(profile.d, j, n, aa, b))
    runs.append((1, c * (profile.d - 1)))
    return RauzyPath(profile.permutation(), tuple(runs))


def block_matrix(n, a=1, b=1):
    """The diagonal block a loop piece leaves on its run."""
    if n == 1:
        return [[2]]
    if n == 2:
        return [[2, 2], [a, a + 1]]
    if n == 3:
        return [[2, 2, 2], [0, a + 1, a], [1, 2, 2]]
    if n == 4:
        return [[2, 2, 2, 2], [a, a + 1, 0, 0], [0, 0, b + 1, b], [a + 1, a + 2, 2, 2]]
    if n == 5:
        return [
            [2, 2, 2, 2, 2],
            [a, a + 1, 0, 0, 0],
            [0, 0, b + 1, 3 * b, 2 * b],
            [0, 0, 0, 2, 1],
            [a + 1, a + 2, 2, 2, 2],
        ]
    raise ValueError("run sizes must lie between 1 and 5")


def expected_theta(profile, a, b, c):
    """The matrix of :func:`build_gamma_cycle`, assembled directly.

    Row 1 is ``(1, c, ..., c)`` and row d is ``(1, c+1, ..., c+1)``.  The
    first row of every run has a 1 in every interior column outside its
    run and in column d.  All other off-block entries vanish.
    """
    d = profile.d
    m = [[0] * d for _ in range(d)]
    m[0] = [1] + [c] * (d - 1)
    m[d - 1] = [1] + [c + 1] * (d - 1)
    for j, n in zip(profile.starts, profile.sizes):
        blk = block_matrix(n, a, b)
        for r in range(n):
            for s in range(n):
                m[j - 1 + r][j - 1 + s] = blk[r][s]
        for s in range(1, d):
            if not j - 1 <= s < j - 1 + n:
                m[j - 1][s] = 1
    return m


# sequence regimes

def rho_sequences(rho, count, a0=1):
    """``c_i = ceil(rho a_(i-1))``, ``b_i = ceil(rho c_i)``, ``a_i = ceil(rho b_i)``."""
    rho = Fraction(rho)
    out, a = [], a0
    for _ in range(count):
        c = ceil(rho * a)
        b = ceil(rho * c)
        a = ceil(rho * b)
        out.append((a, b, c))
    return out


def ratio_sequences(count, ratio=3, a0=1):
    """``c_i = ratio a_(i-1)`` and ``a_i = ratio c_i``, with ``b_i = a_i``."""
    out, a = [], a0
    for _ in range(count):
        c = ratio * a
        a = ratio * c
        out.append((a, a, c))
    return out


# projective iteration

@dataclass(frozen=True)
class MeasureConfig:
    tol: float = 1e-6
    separation_factor: float = 10.0
    # a round whose separation collapsed by more than this factor since the
    # previous round is still converging and stays unresolved
    stability_factor: float = 2.0


@dataclass(frozen=True)
class RoundReport:
    round: int
    clusters: tuple
    diameter: float
    separation: float
    resolved: bool

    @property
    def count(self):
        return len(self.clusters)

    def to_json(self):
        return {
            "round": self.round,
            "count": self.count,
            "clusters": [list(c) for c in self.clusters],
            "diameter": self.diameter,
            "separation": None if self.separation == float("inf") else self.separation,
            "resolved": self.resolved,
        }


@dataclass(frozen=True)
class MeasureRun:
    profile: BlockProfile
    sequences: tuple
    reports: tuple
    product: object = field(repr=False)

    @property
    def final(self):
        return self.reports[-1]

    @property
    def clusters(self):
        return self.final.clusters

    def columns(self):
        """Columns of the last product, scaled to sum 1, as exact rationals."""
        m = self.product
        out = []
        for k in range(m.shape[1]):
            s = sum(int(x) for x in m[:, k])
            out.append(tuple(Fraction(int(x), s) for x in m[:, k]))
        return out


def column_distances(m):
    """L1 distances between the simplex projections of the columns."""
    d = m.shape[1]
    cols = [[int(x) for x in m[:, k]] for k in range(d)]
    sums = [sum(c) for c in cols]
    dist = {}
    for i in range(d):
        for j in range(i + 1, d):
            num = sum(abs(x * sums[j] - y * sums[i]) for x, y in zip(cols[i], cols[j]))
            dist[i, j] = Fraction(num, sums[i] * sums[j])
    return dist


def cluster_columns(dist, d, tol):
    """Single-linkage clusters of columns closer than ``tol``.

    Returns (clusters as tuples of 1-based indices, diameter, separation,
    closest pair of columns lying in different clusters).
    """
    tol = Fraction(tol)
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), v in dist.items():
        if v < tol:
            parent[find(j)] = find(i)
    groups = {}
    for k in range(d):
        groups.setdefault(find(k), []).append(k + 1)
    clusters = tuple(sorted(tuple(g) for g in groups.values()))
    diam, sep, closest = Fraction(0), None, None
    for (i, j), v in dist.items():
        if find(i) == find(j):
            diam = max(diam, v)
        elif sep is None or v < sep:
            sep, closest = v, (i, j)
    return clusters, float(diam), float("inf") if sep is None else float(sep), closest


def iterate_measure_run(profile, sequences, rounds, config=MeasureConfig()):
    """Multiply the round loops together and cluster the columns each round.

    A round is resolved when the clusters are separated by at least
    ``separation_factor * tol`` and the closest pair of columns in different
    clusters has not moved together by more than ``stability_factor`` since
    the previous round.  The identity (round 0) is never resolved.
    """
    sequences = tuple(sequences)[:rounds]
    if len(sequences) < rounds:
        raise ValueError("not enough sequence terms for the requested rounds")
    d = profile.d
    m = identity(d)
    dist = column_distances(m)
    clusters, diam, sep, _ = cluster_columns(dist, d, config.tol)
    reports = [RoundReport(0, clusters, diam, sep, False)]
    for r, (a, b, c) in enumerate(sequences, start=1):
        m = m.dot(round_path(profile, a, b, c).theta())
        prev, dist = dist, column_distances(m)
        clusters, diam, sep, closest = cluster_columns(dist, d, config.tol)
        stable = closest is None or sep * config.stability_factor >= float(prev[closest])
        ok = sep >= config.separation_factor * config.tol and stable
        reports.append(RoundReport(r, clusters, diam, sep, bool(ok)))
    return MeasureRun(profile, sequences, tuple(reports), m)


# the rho bound

@dataclass(frozen=True)
class RhoBoundReport:
    start: int
    m_values: tuple
    bound: Fraction
    satisfied: bool


def rho_bound_report(profile, sequences, rho, start=1):
    """Column sums of each round matrix scaled by ``1/a_i`` against the bound.

    ``m_values[k]`` is the largest scaled column sum over rounds
    ``start + k`` onward (within the given sequences).
    """
    rho = Fraction(rho)
    seq = list(sequences)
    m = len(profile.sizes)
    a0 = seq[start - 1][0]
    bound = max(
        1 + 2 / rho**2 + Fraction(m + 7, a0),
        3 / rho + 2 / rho**2 + Fraction(m + 6, a0),
    )
    per_round = []
    for a, b, c in seq[start - 1:]:
        th = round_path(profile, a, b, c).theta()
        best = max(sum(int(x) for x in th[:, k]) for k in range(profile.d))
        per_round.append(Fraction(best, a))
    tails = []
    for k in range(len(per_round)):
        tails.append(max(per_round[k:]))
    ok = bound < 2 and all(v <= bound for v in tails)
    return RhoBoundReport(start, tuple(tails), bound, ok)

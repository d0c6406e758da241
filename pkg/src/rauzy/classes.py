"""
Rauzy classes as explicit directed graphs.

Vertices are canonical permutations (top row ``1..d``) in breadth-first
order, with the type 0 successor explored before the type 1 successor.
Each vertex has exactly two outgoing edges, possibly self-loops.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .paths import RauzyPath
from .perm import Permutation, ReducibleError, is_irreducible_one_line, move

DEFAULT_CAP = 10**7


class ClassCapExceeded(RuntimeError):
    """The breadth-first search met more vertices than allowed."""

    def __init__(self, cap, frontier):
        super().__init__(f"Rauzy class has more than {cap} vertices")
        self.cap = cap
        self.frontier = frontier


@dataclass(frozen=True)
class RauzyClass:
    vertices: tuple
    edges: tuple

    def __len__(self):
        return len(self.vertices)

    def permutations(self):
        return [Permutation.from_one_line(w) for w in self.vertices]

    def __contains__(self, p):
        if isinstance(p, Permutation):
            p = p.one_line()
        return tuple(p) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {w: i for i, w in enumerate(self.vertices)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def to_json(self):
        return {
            "vertices": ["(" + ",".join(map(str, w)) + ")" for w in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self, name="rauzy_class"):
        return "".join(_dot_lines(self, name))


def _dot_lines(cls, name):
    yield f"digraph {name} {{\n"
    for i, w in enumerate(cls.vertices):
        yield f'  n{i} [label="({",".join(map(str, w))})"];\n'
    for i, eps, j in cls.edges:
        style = "solid" if eps == 0 else "dashed"
        yield f'  n{i} -> n{j} [label="{eps}", style={style}];\n'
    yield "}\n"


def rauzy_class(p, cap=DEFAULT_CAP):
    """Enumerate the Rauzy class of ``p``."""
    start = p.one_line() if isinstance(p, Permutation) else tuple(p)
    if not is_irreducible_one_line(start):
        raise ReducibleError(f"{start} is reducible")
    index = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        w = queue.popleft()
        i = index[w]
        for eps in (0, 1):
            v = move(w, eps)
            j = index.get(v)
            if j is None:
                if len(order) >= cap:
                    raise ClassCapExceeded(cap, [w, *queue])
                j = index[v] = len(order)
                order.append(v)
                queue.append(v)
            edges.append((i, eps, j))
    return RauzyClass(tuple(order), tuple(edges))


def standardize(p):
    """A path from ``p`` to a standard permutation of its class.

    Follows the constructive argument: while the permutation is not
    standard, a block of moves of one type strictly shrinks the smaller of
    the positions of the two last letters in the opposite rows.
    """
    if not p.is_irreducible():
        raise ReducibleError(f"{p} is reducible")
    d = p.d
    q = p
    runs = []
    while not q.is_standard():
        a = (q.last(0), q.last(1))
        # n_eps is the position of the last letter of row eps in the other row
        n0, n1 = q.pos(1, a[0]), q.pos(0, a[1])
        if min(n0, n1) == 1:
            eps = 0 if n0 == 1 else 1
            first = q.row(eps)[0]
            m = d - q.pos(1 - eps, first)
        else:
            eps = 0 if n0 <= n1 else 1
            n = min(n0, n1)
            cands = [g for g in q.alphabet if q.pos(eps, g) < n < q.pos(1 - eps, g)]
            gamma = max(cands, key=lambda g: q.pos(1 - eps, g))
            m = d - q.pos(1 - eps, gamma)
        step = RauzyPath(q, ((eps, m),))
        q = step.end
        runs.append((eps, m))
    return q, RauzyPath(p, tuple(runs))


def same_class(p, q, mode=None):
    """Whether ``p`` and ``q`` lie in the same Rauzy class.

    ``mode`` is ``"bfs"`` (explicit search) or ``"invariant"`` (compare
    class keys).  By default search is used up to 9 letters.
    """
    if p.d != q.d:
        return False
    if mode is None:
        mode = "bfs" if p.d <= 9 else "invariant"
    if mode == "bfs":
        return q in rauzy_class(p)
    if mode == "invariant":
        from .invariants import class_key

        return class_key(p) == class_key(q)
    raise ValueError(f"unknown mode {mode!r}")

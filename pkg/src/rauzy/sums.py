"""
Nested sums that give closed forms for products of triangular operators.

The three-sequence sum is

    S_i^j(a, b, c) = sum over l in [i, j] of
                     (a_i ... a_(l-1)) * b_l * (c_(l+1) ... c_j)

and the five- and seven-sequence sums nest it, peeling off one more
(a, b) pair each time with the summation stopping one and two terms
earlier respectively.  Sequences are any integer-indexable objects.
"""
from __future__ import annotations

from math import prod

import numpy as np


def _p(seq, lo, hi):
    return prod(seq[r] for r in range(lo, hi + 1))


def s_sum(i, j, *seqs):
    """Nested sum over 3, 5 or 7 sequences."""
    if len(seqs) == 3:
        a, b, c = seqs
        return sum(_p(a, i, l - 1) * b[l] * _p(c, l + 1, j) for l in range(i, j + 1))
    if len(seqs) == 5:
        a, b = seqs[:2]
        return sum(_p(a, i, l - 1) * b[l] * s_sum(l + 1, j, *seqs[2:]) for l in range(i, j))
    if len(seqs) == 7:
        a, b = seqs[:2]
        return sum(_p(a, i, l - 1) * b[l] * s_sum(l + 1, j, *seqs[2:]) for l in range(i, j - 1))
    raise ValueError("s_sum takes 3, 5 or 7 sequences")


FIELDS = "a b c d e f u v x y".split()


def operator_matrix(coeffs, i):
    """Matrix of F_i on the ordered basis (A, B, C, D).

    F_i A = a A, F_i B = b B + c A, F_i C = d C + e B + f A,
    F_i D = u D + v C + x B + y A.
    """
    g = {k: coeffs[k][i] for k in FIELDS}
    return np.array(
        [
            [g["a"], g["c"], g["f"], g["y"]],
            [0, g["b"], g["e"], g["x"]],
            [0, 0, g["d"], g["v"]],
            [0, 0, 0, g["u"]],
        ],
        dtype=object,
    )


def composed_brute(coeffs, i, k):
    """F_i composed with F_(i+1) ... F_(i+k), multiplied out."""
    m = operator_matrix(coeffs, i)
    for r in range(i + 1, i + k + 1):
        m = m.dot(operator_matrix(coeffs, r))
    return m


def composed_closed(coeffs, i, k):
    """The same composition from the nested-sum formulas."""
    a, b, c, d, e, f, u, v, x, y = (coeffs[n] for n in FIELDS)
    j = i + k
    m = np.zeros((4, 4), dtype=object)
    m[0, 0] = _p(a, i, j)
    m[1, 1] = _p(b, i, j)
    m[2, 2] = _p(d, i, j)
    m[3, 3] = _p(u, i, j)
    m[0, 1] = s_sum(i, j, a, c, b)
    m[1, 2] = s_sum(i, j, b, e, d)
    m[0, 2] = s_sum(i, j, a, f, d) + s_sum(i, j, a, c, b, e, d)
    m[2, 3] = s_sum(i, j, d, v, u)
    m[1, 3] = s_sum(i, j, b, x, u) + s_sum(i, j, b, e, d, v, u)
    m[0, 3] = (
        s_sum(i, j, a, y, u)
        + s_sum(i, j, a, f, d, v, u)
        + s_sum(i, j, a, c, b, x, u)
        + s_sum(i, j, a, c, b, e, d, v, u)
    )
    return m


def linear_ops_oracle(coeffs, i, k):
    """(brute-force product, closed form) for the composition of k+1 operators."""
    return composed_brute(coeffs, i, k), composed_closed(coeffs, i, k)

"""Geodesic-cycle counting via a Chebyshev double-and-add matrix ladder.

A geodesic cycle of length k is a closed walk of k oriented edges whose
every cyclic shift is backtrack-free.  For a connected (q+1)-regular
simple graph, the number of such cycles can be read off the normalized
Chebyshev value of the adjacency matrix A: with T defined by T(0,x) = 2,
T(1,x) = x, T(j+1,x) = x*T(j,x) - T(j-1,x), the count for length k equals

    q**(k/2) * trace(T(k, A/sqrt(q)))            (k odd)
    n*(q-1) + q**(k/2) * trace(T(k, A/sqrt(q)))  (k even)

and the scaled matrix q**(k/2) * T(k, A/sqrt(q)) has integer entries.

This module computes those scaled matrices exactly with O(log k) matrix
products, driven by a halving schedule: the product identities

    T(2j)   = T(j)**2 - T(0)
    T(i+j)  = T(i)*T(j) - T(j-i)

let each new index be built from one or two previously computed indices,
so the schedule only ever needs the last few entries, kept in a 4-slot
register file.  Power-of-q scalars ride along as plain exponents.

The same ladder, with a different final step, yields the exact slack of
the deviation bound |count - expected| <= 2(n-1) * q**(k/2): nonnegative
slack for every k >= 1 is equivalent to the graph's normalized nontrivial
spectral radius being at most 2, and for odd k the slack lives in the
quadratic field Q[sqrt(q)].
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import MultCounter, Quadratic
from .graphs import RegularGraph


def ladder_indices(k):
    """The halving schedule for target index k.

    Starts at k, halves while even, then repeatedly appends the pair
    (ceil(k/2), ceil(k/2) - 1) until reaching 1.  The first entry is k,
    the last is 1, and the length is 2*floor(log2 k) - h + 1 where h is
    the index of the lowest set bit of k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = [k]
    while k % 2 == 0:
        k //= 2
        out.append(k)
    while k != 1:
        k = (k + 1) // 2
        out.append(k)
        out.append(k - 1)
        if k % 2 == 0:
            k -= 1
    return out


def _scaled_cheb(adj_data, q, j, ident):
    """q**(j/2) * T(j, A/sqrt(q)) by the plain three-term recurrence.

    Scaled form: M(0) = 2I, M(1) = A, M(j+1) = A @ M(j) - q * M(j-1).
    O(j) products on raw arrays; used only by checked mode.
    """
    if j == 0:
        return ident * 2
    prev = ident * 2
    cur = adj_data
    for _ in range(j - 1):
        prev, cur = cur, adj_data @ cur - q * prev
    return cur


class LadderInvariantError(AssertionError):
    """Checked-mode verification of the ladder state failed."""


def _run_ladder(graph, k, counter, checked=False):
    """Drive the register ladder; returns (trace, exponent).

    On return, trace is the trace of the scaled Chebyshev matrix for
    index k and the accompanying scalar is q**exponent with
    exponent = floor(k/2).  Exactly len(ladder_indices(k)) - 1 matrix
    products are performed on ``counter``.

    With checked=True, every iteration re-derives the leading register
    from scratch via the linear three-term recurrence and verifies the
    scalar exponent; this costs O(k) extra uncounted matrix work.
    """
    q = graph.q
    n = graph.n
    schedule = ladder_indices(k)
    steps = len(schedule)
    adj = graph.adjacency.with_counter(counter)
    ident = None
    if checked:
        ident = np.zeros((n, n), dtype=object)
        for i in range(n):
            ident[i, i] = 1
    # registers: mats[r] is the scaled Chebyshev matrix for schedule[i + r - 1]
    # during iteration i (after the shift); exps[r] is its scalar's q-exponent
    mats = [adj, None, None, None]
    exps = [0, 0, 0, 0]
    for i in range(steps - 1, 0, -1):
        if checked:
            _check_state(schedule[i], mats[0], exps[0], adj.data, q, ident)
        mats[3], mats[2], mats[1] = mats[2], mats[1], mats[0]
        exps[3], exps[2], exps[1] = exps[2], exps[1], exps[0]
        target = schedule[i - 1]
        if target % 2 == 0:
            j = 1 if target == 2 * schedule[i] else 2
            e = 2 * exps[j] + (schedule[i + j - 1] % 2)
            mats[0] = (mats[j] @ mats[j]).add_diag(-2 * q**e)
            exps[0] = e
        else:
            # odd target: schedule ends ..., 2, 1, so i <= steps-3 here and
            # registers j, j+1 hold the half pair (target+1)/2, (target-1)/2
            j = 2 if target == 2 * schedule[i + 1] - 1 else 1
            e = exps[j] + exps[j + 1]
            mats[0] = (mats[j] @ mats[j + 1]).sub_scaled(adj, q**e)
            exps[0] = e
    if checked:
        _check_state(schedule[0], mats[0], exps[0], adj.data, q, ident)
    return mats[0].trace(), exps[0]


def _check_state(index, mat, exp, adj_data, q, ident):
    if exp != index // 2:
        raise LadderInvariantError(
            f"scalar exponent {exp} at index {index}, expected {index // 2}"
        )
    expect = _scaled_cheb(adj_data, q, index, ident)
    if not np.array_equal(mat.data, expect):
        raise LadderInvariantError(f"register mismatch at index {index}")


def geodesic_count(graph, k, checked=False):
    """Exact number of geodesic cycles of length k in the graph."""
    if not isinstance(graph, RegularGraph):
        raise TypeError("expected a validated RegularGraph")
    trace, _ = _run_ladder(graph, k, MultCounter(), checked=checked)
    if k % 2 == 1:
        return trace
    return graph.n * (graph.q - 1) + trace


@dataclass(frozen=True)
class SlackValue:
    """Exact slack of the length-k deviation bound, as an element of Q[sqrt(q)].

    For even k the value is rational (the sqrt coefficient is zero); for
    odd k it is 2(n-1) + c*sqrt(q) with rational c.  The sign is exact.
    """

    k: int
    value: Quadratic

    def sign(self):
        return self.value.sign()

    def as_fraction(self):
        """Rational value; only valid for even k."""
        if self.value.coeff != 0:
            raise ValueError(f"slack at odd k={self.k} is irrational")
        return self.value.rational

    def to_float(self):
        return self.value.to_float()


def expansion_slack(graph, k, checked=False):
    """Exact slack of the geodesic-count deviation bound at length k.

    With s = q**(k/2) and c = n(q-1) for even k (0 for odd k), the value
    is 2(n-1) + s + 1/s - (count_k - c)/s, computed from the ladder's
    final trace without ever forming count_k in floating point.
    """
    if not isinstance(graph, RegularGraph):
        raise TypeError("expected a validated RegularGraph")
    trace, e = _run_ladder(graph, k, MultCounter(), checked=checked)
    n, q = graph.n, graph.q
    base = Fraction(2 * (n - 1))
    if k % 2 == 0:
        rat = base + q**e + Fraction(1 - trace, q**e)
        return SlackValue(k, Quadratic(rat, 0, q))
    coeff = Fraction(q**e) + Fraction(1 - trace, q ** (e + 1))
    return SlackValue(k, Quadratic(base, coeff, q))


def ladder_mult_count(graph, k):
    """Matrix products consumed by one ladder run for index k.

    Always equals len(ladder_indices(k)) - 1, which is
    2*floor(log2 k) - h where h indexes the lowest set bit of k.
    """
    counter = MultCounter()
    _run_ladder(graph, k, counter)
    return counter.count

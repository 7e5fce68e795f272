"""Brute-force column-tableau enumeration oracle.

A tableau here is just its list of column lengths, drawn from {0..universe_max},
kept in decreasing order; the `distinct` flag says whether lengths must be
strictly decreasing (sets) or only weakly (multisets).  Column geometry and
fillings carry no extra information for the weight sums and are omitted.

Weighting a column of length L by m [L]_q + r and summing the products over
a whole enumeration reproduces Whitney numbers:

* distinct lengths from {0..n-1}, n-k columns  ->  (-1)^(n-k) q^C(n,2) w(n,k)
* weak lengths from {0..k}, n-k columns        ->  q^-C(k,2) W(n,k)

These sums are exponential-time on purpose; they are the independent oracle
for the triangle recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .modes import Scalar
from .whitney import WhitneyParams


@dataclass(frozen=True)
class ATableau:
    """Column lengths in decreasing order, with their enumeration context."""

    lengths: tuple[int, ...]
    distinct: bool
    universe_max: int

    def __post_init__(self):
        if any(c < 0 or c > self.universe_max for c in self.lengths):
            raise ValueError("column lengths must lie in 0..universe_max")
        pairs = zip(self.lengths, self.lengths[1:])
        if self.distinct:
            if not all(a > b for a, b in pairs):
                raise ValueError("distinct tableau lengths must strictly decrease")
        elif not all(a >= b for a, b in pairs):
            raise ValueError("tableau lengths must weakly decrease")


def enumerate_distinct(universe_max: int, count: int) -> Iterator[ATableau]:
    """All tableaux with `count` distinct column lengths from {0..universe_max}.

    Yields exactly C(universe_max + 1, count) tableaux, in lexicographic
    order of the increasing length vector.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    for combo in combinations(range(universe_max + 1), count):
        yield ATableau(combo[::-1], True, universe_max)


def enumerate_weak(universe_max: int, count: int) -> Iterator[ATableau]:
    """All tableaux with `count` weakly decreasing lengths from {0..universe_max}.

    Yields exactly C(universe_max + count, count) tableaux (multisets), in
    lexicographic order of the increasing length vector.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    for combo in combinations_with_replacement(range(universe_max + 1), count):
        yield ATableau(combo[::-1], False, universe_max)


def tableau_weight(params: WhitneyParams, tableau: ATableau) -> Scalar:
    """Product over columns of m [length]_q + r; empty tableau weighs 1."""
    acc = 1
    for length in tableau.lengths:
        acc = params.weight(length) * acc
    return acc


def _weight_sum(params: WhitneyParams, universe_max: int, tuples) -> Scalar:
    # One weight poly per length, computed once; every tableau still visited.
    weights = [params.weight(length) for length in range(universe_max + 1)]
    total = 0
    for combo in tuples:
        acc = 1
        for length in combo:
            acc = weights[length] * acc
        total = total + acc
    return total


def tableau_sum_first(params: WhitneyParams, n: int, k: int) -> Scalar:
    """Raw weight sum over distinct tableaux: {0..n-1} lengths, n-k columns.

    Equals (-1)^(n-k) q^C(n,2) w(n,k) exactly.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return _weight_sum(params, n - 1, combinations(range(n), n - k))


def tableau_sum_second(params: WhitneyParams, n: int, k: int) -> Scalar:
    """Raw weight sum over weak tableaux: {0..k} lengths, n-k columns.

    Equals q^-C(k,2) W(n,k) exactly.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return _weight_sum(params, k, combinations_with_replacement(range(k + 1), n - k))

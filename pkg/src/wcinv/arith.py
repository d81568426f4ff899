"""Exact integer arithmetic on weight sequences.

Everything here is plain gcd/lcm work, but kept honest in two ways: results
are range-checked against a signed 127-bit ceiling (iterated lcm grows
multiplicatively, and a wrapped value would corrupt every downstream
inequality), and the subset conventions are applied in exactly one place.
``lcm_list`` rejects the empty list; folds over possibly-empty index ranges
use :func:`fold_lcm` with identity 1 instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import EmptySubsetError, IndexOutOfRangeError, OverflowLimitError

INT127_MAX = (1 << 126) - 1


def checked_lcm(a: int, b: int) -> int:
    """lcm of two positive integers, raising if the exact result exceeds the working range.

    >>> checked_lcm(4, 6)
    12
    """
    result = a // math.gcd(a, b) * b
    if result > INT127_MAX:
        raise OverflowLimitError(f"lcm({a}, {b}) exceeds the 127-bit working range")
    return result


def fold_lcm(values: Iterable[int], start: int = 1) -> int:
    """Fold ``checked_lcm`` over ``values``; an empty fold yields ``start``.

    The identity element 1 implements the empty-range convention expected by
    the split-profile folds.
    """
    return reduce(checked_lcm, values, start)


@dataclass(frozen=True)
class WeightSequence:
    """An ordered sequence of positive integer weights (a_0, ..., a_n).

    ``n`` is the index of the last entry, so the length is n + 1.  Instances
    are immutable and hashable; all operations on them are pure.
    """

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]) -> None:
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise ValueError("a weight sequence needs at least one entry")
        for w in ws:
            if w < 1:
                raise ValueError(f"weights must be positive, got {w}")
        object.__setattr__(self, "weights", ws)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def total(self) -> int:
        return sum(self.weights)

    def reversed(self) -> "WeightSequence":
        return WeightSequence(self.weights[::-1])

    def permuted(self, order: Iterable[int]) -> "WeightSequence":
        return WeightSequence(self.weights[i] for i in order)


def gcd_subset(a: WeightSequence, indices: Iterable[int]) -> int:
    """gcd of the weights selected by ``indices`` (a nonempty subset of [0, n]).

    >>> gcd_subset(WeightSequence([4, 6, 10, 15]), {0, 1})
    2
    """
    idx = set(indices)
    if not idx:
        raise EmptySubsetError("subset gcd is undefined for the empty index set")
    for i in idx:
        if not 0 <= i <= a.n:
            raise IndexOutOfRangeError(f"index {i} out of range [0, {a.n}]")
    return math.gcd(*(a[i] for i in idx))


def lcm_list(xs: Iterable[int]) -> int:
    """lcm of a nonempty list of positive integers.

    >>> lcm_list([4, 6, 5])
    60
    """
    values = list(xs)
    if not values:
        raise ValueError("lcm_list requires a nonempty list; empty folds use fold_lcm")
    for v in values:
        if v < 1:
            raise ValueError(f"entries must be positive, got {v}")
    return fold_lcm(values)


def gcd_of_lcms(left: Iterable[int], right: Iterable[int]) -> int:
    """gcd(lcm(left), lcm(right)) for nonempty lists of positive integers.

    Distributivity of gcd over lcm makes this equal to
    :func:`lcm_of_pair_gcds`; the two routes are kept separate so they can
    be checked against each other.
    """
    return math.gcd(lcm_list(left), lcm_list(right))


def lcm_of_pair_gcds(left: Iterable[int], right: Iterable[int]) -> int:
    """lcm over all pairs (x, y) in left x right of gcd(x, y).

    The independent evaluation route for :func:`gcd_of_lcms`.
    """
    ls = list(left)
    rs = list(right)
    if not ls or not rs:
        raise ValueError("both lists must be nonempty")
    return fold_lcm(math.gcd(x, y) for x in ls for y in rs)

"""Split profiles and the couple/triple certificate search.

Fix weights a = (a_0, ..., a_n), a target degree h with a_i not dividing h
for any i while every 3-subset gcd divides h, and a split position s in
[-1, n].  The split profile collects:

    sigma1 = pairs {i, j}, s < i < j <= n, whose gcd does not divide h
    sigma2 = pairs {i, j}, 0 <= i < j <= s, whose gcd does not divide h
    h1, h2 = lcm of the pair gcds over sigma1 / sigma2 (1 when empty)
    f1     = lcm of {a_j : 0 <= j <= s} together with h1 (h1 when s = -1)
    f2     = lcm of {a_j : s < j <= n} together with h2 (h2 when s = n)

A certificate is a couple {u, v} with gcd(a_u, a_v) | h and

    f1 + f2 - sum(a)  >=  lcm(a_u, a_v) - a_u - a_v,

or a triple {u, v, w} (no divisibility required) with

    f1 + f2 - sum(a)  >=  lcm(a_u, a_v) + lcm(gcd(a_u, a_v), a_w)
                          - a_u - a_v - a_w.

Either inequality hands the coin-problem sufficiency bound a winning
generator set, which is how the section-witness pipeline uses it.  The
search is exhaustive and deterministic: couples in lexicographic index
order first, then triples, and inside a triple the third-slot role w is
tried from the largest index down.  Exhaustion without a certificate
raises :class:`~wcinv.errors.CounterexampleFound` carrying the profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .arith import WeightSequence, checked_lcm, fold_lcm
from .errors import (
    CounterexampleFound,
    HypothesesViolatedError,
    SequenceTooShortError,
    SplitOutOfRangeError,
)

COUPLE = "couple"
TRIPLE = "triple"


@dataclass(frozen=True)
class SplitProfile:
    s: int
    sigma1: tuple[tuple[int, int], ...]
    sigma2: tuple[tuple[int, int], ...]
    h1: int
    h2: int
    f1: int
    f2: int

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "sigma1": [list(p) for p in self.sigma1],
            "sigma2": [list(p) for p in self.sigma2],
            "h1": self.h1,
            "h2": self.h2,
            "f1": self.f1,
            "f2": self.f2,
        }


@dataclass(frozen=True)
class NonvanishingCertificate:
    """A couple or triple of indices whose bound the profile dominates.

    ``indices`` is (u, v) for a couple and (u, v, w) for a triple, with w in
    the asymmetric third slot of the triple bound.  ``lhs`` is
    f1 + f2 - sum(a); ``bound`` is the realised right-hand side.
    """

    kind: str
    indices: tuple[int, ...]
    bound: int
    lhs: int

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "indices": list(self.indices),
            "bound": self.bound,
            "lhs": self.lhs,
        }


def _hypotheses_ok(a: WeightSequence, h: int) -> bool:
    """Divisibility hypotheses without the length gate (any n >= 1)."""
    if any(h % w == 0 for w in a):
        return False
    for triple in combinations(range(a.n + 1), 3):
        if h % math.gcd(a[triple[0]], a[triple[1]], a[triple[2]]) != 0:
            return False
    return True


def hypotheses_hold(a: WeightSequence, h: int) -> bool:
    """True iff no single weight divides h while every 3-subset gcd does.

    >>> hypotheses_hold(WeightSequence([4, 6, 10, 15]), 2)
    True
    """
    if a.n < 3:
        raise SequenceTooShortError(f"need n >= 3, got n = {a.n}")
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    return _hypotheses_ok(a, h)


def compute_profile(a: WeightSequence, s: int, h: int) -> SplitProfile:
    """The split profile of (a, s, h); raises if the hypotheses fail.

    Accepts any length >= 2 so the n = 2 failure-characterisation suite can
    reuse it; the public certificate API gates on n >= 3 itself.
    """
    if not -1 <= s <= a.n:
        raise SplitOutOfRangeError(f"s = {s} outside [-1, {a.n}]")
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    if not _hypotheses_ok(a, h):
        raise HypothesesViolatedError(
            f"hypotheses fail for weights {a.weights}, h = {h}")
    sigma1 = tuple(
        (i, j)
        for i, j in combinations(range(s + 1, a.n + 1), 2)
        if h % math.gcd(a[i], a[j]) != 0
    )
    sigma2 = tuple(
        (i, j)
        for i, j in combinations(range(0, s + 1), 2)
        if h % math.gcd(a[i], a[j]) != 0
    )
    h1 = fold_lcm(math.gcd(a[i], a[j]) for i, j in sigma1)
    h2 = fold_lcm(math.gcd(a[i], a[j]) for i, j in sigma2)
    f1 = fold_lcm(a.weights[: s + 1], start=h1)
    f2 = fold_lcm(a.weights[s + 1 :], start=h2)
    return SplitProfile(s=s, sigma1=sigma1, sigma2=sigma2, h1=h1, h2=h2, f1=f1, f2=f2)


def _search_certificate(
    a: WeightSequence, lhs: int, h: int
) -> NonvanishingCertificate | None:
    """Deterministic exhaustive search; None when no couple or triple works."""
    top = a.n + 1
    for u, v in combinations(range(top), 2):
        if h % math.gcd(a[u], a[v]) == 0:
            bound = checked_lcm(a[u], a[v]) - a[u] - a[v]
            if bound <= lhs:
                return NonvanishingCertificate(COUPLE, (u, v), bound, lhs)
    for i, j, k in combinations(range(top), 3):
        for u, v, w in ((i, j, k), (i, k, j), (j, k, i)):
            bound = (
                checked_lcm(a[u], a[v])
                + checked_lcm(math.gcd(a[u], a[v]), a[w])
                - a[u] - a[v] - a[w]
            )
            if bound <= lhs:
                return NonvanishingCertificate(TRIPLE, (u, v, w), bound, lhs)
    return None


def certificate_or_none(
    a: WeightSequence, s: int, h: int
) -> tuple[SplitProfile, NonvanishingCertificate | None]:
    """Profile plus search result without raising on failure (any n >= 2)."""
    profile = compute_profile(a, s, h)
    lhs = profile.f1 + profile.f2 - a.total()
    return profile, _search_certificate(a, lhs, h)


def find_certificate(a: WeightSequence, s: int, h: int) -> NonvanishingCertificate:
    """First certificate in the committed order for a cell with n >= 3.

    >>> find_certificate(WeightSequence([4, 6, 10, 15]), 1, 2).indices
    (0, 1)
    """
    if a.n < 3:
        raise SequenceTooShortError(f"need n >= 3, got n = {a.n}")
    profile, cert = certificate_or_none(a, s, h)
    if cert is None:
        raise CounterexampleFound({
            "weights": list(a.weights),
            "s": s,
            "h": h,
            "profile": profile.as_dict(),
            "lhs": profile.f1 + profile.f2 - a.total(),
        })
    return cert


def star_condition(a: WeightSequence, s: int) -> bool:
    """True iff no divisibility relation holds within either side of the split.

    Checks all index pairs with 0 <= i < j <= s and with s < i < j <= n.
    """
    if not -1 <= s <= a.n:
        raise SplitOutOfRangeError(f"s = {s} outside [-1, {a.n}]")
    for lo, hi in ((0, s), (s + 1, a.n)):
        for i, j in combinations(range(lo, hi + 1), 2):
            if a[j] % a[i] == 0 or a[i] % a[j] == 0:
                return False
    return True

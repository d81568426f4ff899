"""Numerical-semigroup membership for up to three generators.

Membership h = sum k_i * a_i with k_i >= 0 is decided by exact dynamic
programming: the reachable set over [0, h] is materialised as a bitmap and
the bit at h is read off.  No closed-form shortcut is used here; the
closed-form sufficiency bounds live in :func:`frobenius_bound_two` and
:func:`frobenius_bound_three` and are *checked against* the DP, never
substituted for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .arith import checked_lcm
from .errors import WrongArityError


@dataclass(frozen=True)
class CoinSystem:
    """One to three positive integer generators, in a fixed role order.

    The order matters only for the three-generator sufficiency bound, which
    treats the last generator asymmetrically.
    """

    generators: tuple[int, ...]

    def __init__(self, generators: Iterable[int]) -> None:
        gens = tuple(int(g) for g in generators)
        if not 1 <= len(gens) <= 3:
            raise WrongArityError(f"expected 1-3 generators, got {len(gens)}")
        for g in gens:
            if g < 1:
                raise ValueError(f"generators must be positive, got {g}")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class Representation:
    """Exponents k_i, aligned with the generator order of the producing system."""

    exponents: tuple[int, ...]

    def total(self, sys: CoinSystem) -> int:
        return sum(k * g for k, g in zip(self.exponents, sys.generators))


def reachable_bits(generators: Iterable[int], limit: int) -> int:
    """Bitmap of all values in [0, limit] representable from the generators.

    Bit v is set iff v is a nonnegative integer combination.  Built by
    closing {0} under +g for each generator in turn, using shift doubling so
    the cost is O(limit * log(limit) / wordsize) per generator.
    """
    if limit < 0:
        return 0
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in generators:
        shift = g
        while shift <= limit:
            bits |= (bits << shift) & mask
            shift <<= 1
    return bits


def reachable_bytes(generators: Iterable[int], limit: int) -> bytes:
    """Little-endian byte form of :func:`reachable_bits` for O(1) bit tests."""
    bits = reachable_bits(generators, limit)
    return bits.to_bytes(limit // 8 + 1, "little")


def bit_at(bitmap: bytes, v: int) -> bool:
    return bool(bitmap[v >> 3] >> (v & 7) & 1)


def is_representable(sys: CoinSystem, h: int) -> bool:
    """True iff h lies in the numerical semigroup generated by the coin system.

    >>> is_representable(CoinSystem([4, 6]), 58)
    True
    >>> is_representable(CoinSystem([4, 6, 9]), 11)
    False
    """
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    return bool(reachable_bits(sys.generators, h) >> h & 1)


def find_representation(sys: CoinSystem, h: int) -> Representation | None:
    """One exact representation of h, or None if there is none.

    Tie-break: the lexicographically smallest exponent vector in generator
    order (k_0 minimised first, then k_1, ...), so outputs are reproducible.

    >>> find_representation(CoinSystem([4, 6, 9]), 13).exponents
    (1, 0, 1)
    """
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    gens = sys.generators
    # suffix[j] = reachability bitmap for generators[j:]; suffix[m] = {0}
    suffix: list[bytes] = [b""] * (len(gens) + 1)
    suffix[len(gens)] = reachable_bytes((), h)
    for j in range(len(gens) - 1, -1, -1):
        suffix[j] = reachable_bytes(gens[j:], h)
    if not bit_at(suffix[0], h):
        return None
    exponents = []
    rem = h
    for j, g in enumerate(gens):
        k = 0
        while k * g <= rem and not bit_at(suffix[j + 1], rem - k * g):
            k += 1
        if k * g > rem:
            return None  # unreachable: suffix[0] membership guarantees a valid k
        exponents.append(k)
        rem -= k * g
    return Representation(tuple(exponents))


def frobenius_bound_two(a0: int, a1: int) -> int:
    """Sufficiency threshold for two generators: lcm(a0, a1) - a0 - a1.

    May be negative; callers compare with strict inequality.
    """
    return checked_lcm(a0, a1) - a0 - a1


def frobenius_bound_three(a0: int, a1: int, a2: int) -> int:
    """Sufficiency threshold for three generators.

    lcm(a0, a1) + lcm(gcd(a0, a1), a2) - a0 - a1 - a2, signed.
    """
    return checked_lcm(a0, a1) + checked_lcm(math.gcd(a0, a1), a2) - a0 - a1 - a2


def guaranteed_representable(sys: CoinSystem, h: int) -> bool:
    """True iff the divisibility-plus-threshold sufficiency test passes.

    Two generators: gcd(a0, a1) | h and h > frobenius_bound_two.  Three:
    gcd(a0, a1, a2) | h and h > frobenius_bound_three.  Sound but not
    complete: a False only means the shortcut gives no guarantee.
    """
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    gens = sys.generators
    if len(gens) == 2:
        return h % math.gcd(*gens) == 0 and h > frobenius_bound_two(*gens)
    if len(gens) == 3:
        return h % math.gcd(*gens) == 0 and h > frobenius_bound_three(*gens)
    raise WrongArityError("the sufficiency test needs 2 or 3 generators; "
                          "for one generator use divisibility directly")

"""Witness pipeline for codimension-2 weight/degree systems.

A :class:`WCIInstance` is the arithmetic shadow of a codimension-2 weighted
complete intersection: the ambient weights plus the two defining degrees.
Given a Cartier degree h with h strictly above the canonical degree
d1 + d2 - sum(a), the pipeline produces an explicit monomial of weighted
degree h in at most three variables:

  (a) if some a_i divides h the witness is a single variable power;
  (b) otherwise the weights are split between the degrees they divide, the
      certificate search runs on the split, and the certified couple or
      triple is handed to the coin-problem solver;
  (c) a defensive exhaustive scan over all <= 3-variable subsets backs the
      certified path; only if that also fails is the instance reported as a
      :class:`~wcinv.errors.TheoremCounterexample`.

Geometry (quasismoothness, well-formedness, Picard generation) is an input
hypothesis; only its arithmetic consequences are checked here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .arith import INT127_MAX, WeightSequence
from .errors import (
    OverflowLimitError,
    PreconditionViolatedError,
    SplitImpossibleError,
    TheoremCounterexample,
)
from .nonvanish import NonvanishingCertificate, SplitProfile, certificate_or_none
from .semigroup import CoinSystem, find_representation


@dataclass(frozen=True)
class WCIInstance:
    """Ambient weights (n >= 3) and the two defining degrees."""

    weights: WeightSequence
    d1: int
    d2: int

    def __init__(self, weights: WeightSequence | Iterable[int], d1: int, d2: int) -> None:
        if not isinstance(weights, WeightSequence):
            weights = WeightSequence(weights)
        if weights.n < 3:
            raise ValueError(f"need n >= 3 ambient weights, got n = {weights.n}")
        if d1 < 1 or d2 < 1:
            raise ValueError(f"degrees must be positive, got ({d1}, {d2})")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "d1", int(d1))
        object.__setattr__(self, "d2", int(d2))

    @property
    def linear_cone(self) -> bool:
        """True when some defining degree equals a weight (arithmetic proxy)."""
        return any(d == w for d in (self.d1, self.d2) for w in self.weights)


@dataclass(frozen=True)
class SectionWitness:
    """A monomial witness: variable index -> positive exponent, <= 3 variables.

    ``sum(exponent * weight) == degree`` exactly; the producing functions
    guarantee it and the verifier re-checks it on every sweep output.
    """

    terms: tuple[tuple[int, int], ...]
    degree: int

    def as_dict(self) -> dict:
        return {"terms": {str(i): k for i, k in self.terms}, "degree": self.degree}

    def evaluate(self, weights: WeightSequence) -> int:
        return sum(k * weights[i] for i, k in self.terms)


@dataclass(frozen=True)
class SplitChoice:
    """A reordering of the variable indices and the split position.

    ``order`` lists original indices, d1 side first; ``s`` is the index of
    the last d1-side entry in the new order (-1 for an empty d1 side).
    """

    order: tuple[int, ...]
    s: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    advisory: bool = False

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "advisory": self.advisory,
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passes(self) -> bool:
        return all(c.passed for c in self.checks if not c.advisory)

    def as_dict(self) -> dict:
        return {"passes": self.passes, "checks": [c.as_dict() for c in self.checks]}


def canonical_degree(inst: WCIInstance) -> int:
    """d1 + d2 - sum of weights; negative for Fano-type instances."""
    result = inst.d1 + inst.d2 - inst.weights.total()
    if abs(result) > INT127_MAX:
        raise OverflowLimitError("canonical degree exceeds the working range")
    return result


def cartier_conditions(inst: WCIInstance, h: int) -> bool:
    """The two subset-gcd divisibility conditions a Cartier degree must satisfy.

    (i) every 3-subset gcd divides h; (ii) every 2-subset gcd that does not
    divide h divides both degrees.
    """
    a = inst.weights
    for i, j, k in combinations(range(a.n + 1), 3):
        if h % math.gcd(a[i], a[j], a[k]) != 0:
            return False
    for i, j in combinations(range(a.n + 1), 2):
        g = math.gcd(a[i], a[j])
        if h % g != 0 and (inst.d1 % g != 0 or inst.d2 % g != 0):
            return False
    return True


def choose_split(inst: WCIInstance, h: int) -> SplitChoice:
    """Deterministic assignment of each variable to the d1 or d2 side.

    Greedy rule: anything dividing d1 goes to the d1 side; what remains must
    divide d2 or (failing both) divide h, where the side is irrelevant to
    the argument.  Each side is then sorted by (weight, original index) so
    reports are canonical.  Raises :class:`SplitImpossibleError` with the
    offending index when a weight divides neither degree nor h.
    """
    d1_side: list[int] = []
    d2_side: list[int] = []
    for i, w in enumerate(inst.weights):
        if inst.d1 % w == 0:
            d1_side.append(i)
        elif inst.d2 % w == 0 or h % w == 0:
            d2_side.append(i)
        else:
            raise SplitImpossibleError(i, w)
    key = lambda i: (inst.weights[i], i)
    order = tuple(sorted(d1_side, key=key) + sorted(d2_side, key=key))
    return SplitChoice(order=order, s=len(d1_side) - 1)


@dataclass(frozen=True)
class WitnessOutcome:
    """Witness plus the route that produced it, for verification reporting."""

    witness: SectionWitness
    route: str  # "single" | "certificate" | "fallback"
    split: SplitChoice | None = None
    certificate: NonvanishingCertificate | None = None
    profile: SplitProfile | None = None


def _witness_from_subset(
    weights: WeightSequence, subset: tuple[int, ...], h: int
) -> SectionWitness | None:
    rep = find_representation(CoinSystem(tuple(weights[i] for i in subset)), h)
    if rep is None:
        return None
    terms = tuple(sorted((i, k) for i, k in zip(subset, rep.exponents) if k > 0))
    return SectionWitness(terms=terms, degree=h)


def find_section_witness_detailed(inst: WCIInstance, h: int) -> WitnessOutcome:
    """Full pipeline; see module docstring for the route order."""
    if h < 1:
        raise PreconditionViolatedError("h_positive", f"h = {h} must be >= 1")
    if not cartier_conditions(inst, h):
        raise PreconditionViolatedError(
            "cartier", f"subset-gcd conditions fail for h = {h}")
    k_degree = canonical_degree(inst)
    if h <= k_degree:
        raise PreconditionViolatedError(
            "amplitude", f"h = {h} must strictly exceed the canonical degree {k_degree}")

    a = inst.weights
    for i, w in enumerate(a):
        if h % w == 0:
            return WitnessOutcome(
                SectionWitness(terms=((i, h // w),), degree=h), route="single")

    split = choose_split(inst, h)
    permuted = a.permuted(split.order)
    profile, cert = certificate_or_none(permuted, split.s, h)
    if cert is not None:
        original = tuple(split.order[p] for p in cert.indices)
        witness = _witness_from_subset(a, original, h)
        if witness is not None:
            return WitnessOutcome(
                witness, route="certificate",
                split=split, certificate=cert, profile=profile)

    # Defensive: the certified path is guaranteed on hypothesis-passing
    # instances, but the verifier wants an independent escape hatch.
    for size in (1, 2, 3):
        for subset in combinations(range(a.n + 1), size):
            witness = _witness_from_subset(a, subset, h)
            if witness is not None:
                return WitnessOutcome(
                    witness, route="fallback",
                    split=split, certificate=cert, profile=profile)
    raise TheoremCounterexample({
        "weights": list(a.weights),
        "d1": inst.d1,
        "d2": inst.d2,
        "h": h,
        "split_order": list(split.order),
        "s": split.s,
        "profile": profile.as_dict(),
        "certificate": cert.as_dict() if cert is not None else None,
    })


def find_section_witness(inst: WCIInstance, h: int) -> SectionWitness:
    """A monomial of weighted degree h in at most three variables.

    >>> w = find_section_witness(WCIInstance([2, 3, 5, 7, 11], 30, 385), 10)
    >>> w.as_dict()["terms"]
    {'0': 5}
    """
    return find_section_witness_detailed(inst, h).witness


def validate_instance(inst: WCIInstance, h: int) -> ValidationReport:
    """All input hypotheses as one pass/fail report; never raises.

    Gating checks: the weight/degree divisibility split, both subset-gcd
    conditions, and the amplitude inequality.  The linear-cone flag and the
    ambient-gcd heuristic are advisory only.
    """
    a = inst.weights
    checks: list[CheckResult] = []

    offenders = [
        i for i, w in enumerate(a)
        if h % w != 0 and inst.d1 % w != 0 and inst.d2 % w != 0
    ]
    checks.append(CheckResult(
        "split_divisibility", not offenders,
        "each weight not dividing h divides a degree" if not offenders
        else f"indices {offenders} divide neither degree nor h"))

    bad_triples = [
        [i, j, k] for i, j, k in combinations(range(a.n + 1), 3)
        if h % math.gcd(a[i], a[j], a[k]) != 0
    ]
    checks.append(CheckResult(
        "cartier_triples", not bad_triples,
        "every 3-subset gcd divides h" if not bad_triples
        else f"3-subset gcd does not divide h for I = {bad_triples[0]}"))

    bad_pairs = [
        [i, j] for i, j in combinations(range(a.n + 1), 2)
        if h % math.gcd(a[i], a[j]) != 0
        and (inst.d1 % math.gcd(a[i], a[j]) != 0 or inst.d2 % math.gcd(a[i], a[j]) != 0)
    ]
    checks.append(CheckResult(
        "cartier_pairs", not bad_pairs,
        "pair gcds not dividing h divide both degrees" if not bad_pairs
        else f"pair gcd divides neither h nor both degrees for I = {bad_pairs[0]}"))

    k_degree = canonical_degree(inst)
    checks.append(CheckResult(
        "amplitude", h > k_degree,
        f"h = {h} > canonical degree {k_degree}" if h > k_degree
        else f"h = {h} does not exceed canonical degree {k_degree}"))

    checks.append(CheckResult(
        "not_linear_cone", not inst.linear_cone,
        "no defining degree equals a weight" if not inst.linear_cone
        else "a defining degree equals a weight (reported, not enforced)",
        advisory=True))

    loo_bad = [
        i for i in range(a.n + 1)
        if math.gcd(*(w for j, w in enumerate(a) if j != i)) != 1
    ]
    checks.append(CheckResult(
        "ambient_gcd", not loo_bad,
        "every n of the n+1 weights are coprime" if not loo_bad
        else f"weights excluding index {loo_bad[0]} share a common factor",
        advisory=True))

    return ValidationReport(checks=tuple(checks))

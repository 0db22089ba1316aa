"""Descent calculus for U(r, s) -> U(r-1, s) restriction.

A Harish-Chandra parameter (a; b) descends to the (r-1, s) parameter
(a_1 - 1/2, ..., a_{r-1} - 1/2 ; b_1 + 1/2, ..., b_s + 1/2) together with
a U(1) weight, the last entry of the coherent a-block. Over a set of
places (one parameter per place, equal rank), the restriction map is an
isomorphism onto the descended data exactly when, at every place, the
last a-block entry is the global minimum of the parameter; otherwise the
map is zero. That dichotomy is stated under a spacing hypothesis
(consecutive gaps of the sorted parameter at least 2); outside it the
equivalent root-theoretic criterion can genuinely diverge, so the
classifier cross-checks both routes and warns when the hypothesis fails.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .branching import restrict_ktype
from .cartan import Weight, rho
from .packets import (
    HCParameter,
    InfinitesimalCharacter,
    coherent_parameter,
    dual_parameter,
    enumerate_packet,
)
from .roots import Signature

__all__ = [
    "PlacedParameter",
    "RestrictedParameter",
    "RestrictionClass",
    "ChainStep",
    "well_spaced",
    "well_spaced_everywhere",
    "restrict_parameter",
    "restriction_is_discrete_series",
    "min_entry_in_a",
    "min_entry_in_a_everywhere",
    "noncompact_support_matches",
    "classify_restriction",
    "isomorphism_fraction",
    "expected_fraction",
    "descent_chain",
]


class RestrictionClass(enum.Enum):
    ISOMORPHISM = "iso"
    ZERO = "zero"


class PlacedParameter:
    """One Harish-Chandra parameter per place, all of equal rank."""

    __slots__ = ("places",)

    def __init__(self, places: Iterable[tuple[Signature, HCParameter]]):
        entries = tuple(places)
        if not entries:
            raise ValueError("at least one place is required")
        for sig, hc in entries:
            if (sig.r, sig.s) != (hc.r, hc.s):
                raise ValueError(f"parameter {hc!r} does not match signature {sig}")
        ranks = {sig.n for sig, _ in entries}
        if len(ranks) > 1:
            raise ValueError("places have unequal rank")
        object.__setattr__(self, "places", entries)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PlacedParameter is immutable")

    @property
    def n(self) -> int:
        return self.places[0][0].n

    def dual(self) -> "PlacedParameter":
        return PlacedParameter((sig, dual_parameter(hc)) for sig, hc in self.places)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlacedParameter):
            return NotImplemented
        return self.places == other.places

    def __repr__(self) -> str:
        return f"PlacedParameter({list(self.places)!r})"


@dataclass(frozen=True)
class RestrictedParameter:
    """Descended blocks plus the split-off U(1) weight.

    The blocks are stored raw: off the spacing hypothesis they can collide,
    and promoting them to an HCParameter is only possible (and only done)
    when they are jointly regular.
    """

    prime_a: tuple[Fraction, ...]
    prime_b: tuple[Fraction, ...]
    u1_weight: Fraction

    def prime_weight(self) -> Weight:
        return Weight(self.prime_a + self.prime_b)

    def prime_hc(self) -> HCParameter:
        return HCParameter(self.prime_a, self.prime_b)


def well_spaced(entries: Sequence[Fraction], gap: int = 2) -> bool:
    """Consecutive gaps of a decreasing sequence are all >= gap."""
    return all(x - y >= gap for x, y in zip(entries, entries[1:]))


def _sorted_entries(hc: HCParameter) -> tuple[Fraction, ...]:
    return tuple(sorted(hc.a + hc.b, reverse=True))


def well_spaced_everywhere(p: PlacedParameter, gap: int = 2) -> bool:
    return all(well_spaced(_sorted_entries(hc), gap) for _, hc in p.places)


def restrict_parameter(sig: Signature, hc: HCParameter) -> RestrictedParameter:
    """Descend one place: shift the a-block down and the b-block up by 1/2,
    dropping the last a-entry to U(1) as the coherent a-block tail."""
    if sig.r < 1:
        raise ValueError("signature needs r >= 1 to restrict")
    if (sig.r, sig.s) != (hc.r, hc.s):
        raise ValueError(f"parameter {hc!r} does not match signature {sig}")
    half = Fraction(1, 2)
    prime_a = tuple(x - half for x in hc.a[:-1])
    prime_b = tuple(x + half for x in hc.b)
    u1 = hc.a[-1] - rho(hc.n)[sig.r - 1]

    # The same data two other ways; both must agree by construction.
    split = restrict_ktype(coherent_parameter(hc), sig)
    if split.u1 != u1:
        raise AssertionError("U(1) weight mismatch between construction routes")
    if hc.n > 1:
        alt = Weight(split.head.entries + split.tail.entries) + rho(hc.n - 1)
        if alt.entries != prime_a + prime_b:
            raise AssertionError("descended parameter mismatch between routes")
    return RestrictedParameter(prime_a=prime_a, prime_b=prime_b, u1_weight=u1)


def restriction_is_discrete_series(rp: RestrictedParameter, n: int) -> bool:
    """True iff the descended blocks are jointly regular and live on the
    coset (n-2)/2 + Z, i.e. name a discrete series of U(r-1, s)."""
    entries = rp.prime_a + rp.prime_b
    if len(set(entries)) != len(entries):
        return False
    anchor = Fraction(n - 2, 2)
    return all((x - anchor).denominator == 1 for x in entries)


def min_entry_in_a(hc: HCParameter) -> bool:
    """Last a-block entry is the global minimum. False when the a-block is
    empty (no witness exists)."""
    if hc.r == 0:
        return False
    return hc.a[-1] == min(hc.a + hc.b)


def min_entry_in_a_everywhere(p: PlacedParameter) -> bool:
    return all(min_entry_in_a(hc) for _, hc in p.places)


def _noncompact_support(a: Sequence[Fraction], b: Sequence[Fraction]) -> set[tuple[int, int]]:
    return {(i, j) for i, ai in enumerate(a, start=1)
            for j, bj in enumerate(b, start=1) if ai > bj}


def noncompact_support_matches(sig: Signature, hc: HCParameter,
                               rp: RestrictedParameter) -> bool:
    """True iff the descended parameter's noncompact positive pairs, read
    through the block-index embedding, are exactly the original ones."""
    if (sig.r, sig.s) != (hc.r, hc.s):
        raise ValueError(f"parameter {hc!r} does not match signature {sig}")
    original = _noncompact_support(hc.a, hc.b)
    descended = _noncompact_support(rp.prime_a, rp.prime_b)
    return descended == original


def classify_restriction(p: PlacedParameter, warn: bool = True) -> RestrictionClass:
    """Isomorphism iff the minimum-entry condition holds at every place.

    The root-theoretic route is always computed as a cross-check; under the
    spacing hypothesis the two cannot disagree. Off the hypothesis a
    warning is emitted and the minimum-entry dichotomy is returned.
    """
    if any(sig.r < 1 for sig, _ in p.places):
        raise ValueError("classification needs r >= 1 at every place")
    spaced = well_spaced_everywhere(p)
    by_minimum = min_entry_in_a_everywhere(p)
    by_support = all(
        noncompact_support_matches(sig, hc, restrict_parameter(sig, hc))
        for sig, hc in p.places)
    if spaced and by_minimum != by_support:
        raise AssertionError("classification routes disagree under the hypothesis")
    if not spaced and warn:
        warnings.warn(
            "parameter is outside the spacing hypothesis (a consecutive gap "
            "is below 2); classification follows the minimum-entry condition",
            stacklevel=2)
    return RestrictionClass.ISOMORPHISM if by_minimum else RestrictionClass.ZERO


def isomorphism_fraction(places: Sequence[tuple[Signature, InfinitesimalCharacter]]) -> Fraction:
    """Fraction of the product packet classified as isomorphism, by full
    enumeration of every combination of members across the places."""
    if not places:
        raise ValueError("at least one place is required")
    ranks = {sig.n for sig, _ in places}
    if len(ranks) > 1 or {ic.n for _, ic in places} != ranks:
        raise ValueError("places have unequal rank")
    member_flags = []
    for sig, ic in places:
        packet = enumerate_packet(ic, sig)
        member_flags.append([min_entry_in_a(m.hc) for m in packet])
    total = 0
    count = 0
    for combo in itertools.product(*member_flags):
        total += 1
        if all(combo):
            count += 1
    return Fraction(count, total)


def expected_fraction(sigs: Sequence[Signature]) -> Fraction:
    """The closed form prod_v r_v / n for comparison with the enumeration."""
    if not sigs:
        raise ValueError("at least one place is required")
    value = Fraction(1)
    for sig in sigs:
        value *= Fraction(sig.r, sig.n)
    return value


@dataclass(frozen=True)
class ChainStep:
    """One descent step: the parameter after restriction, the class of the
    parameter that was restricted, its dual's minimum-entry flag, and the
    U(1) weights split off at each place."""

    level: int
    parameter: PlacedParameter
    u1_weights: tuple[Fraction, ...]
    classification: RestrictionClass
    dual_min_in_a: bool


def descent_chain(p: PlacedParameter, depth: int, warn: bool = True) -> list[ChainStep]:
    """Iterate restriction depth times (clamped to n-1 steps).

    Each step classifies the current parameter, records whether its dual
    satisfies the minimum-entry condition, then descends every place.
    Raises if a pending step would restrict a place with r = 0.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    steps = min(depth, p.n - 1)
    chain: list[ChainStep] = []
    current = p
    for _ in range(steps):
        if any(sig.r < 1 for sig, _ in current.places):
            raise ValueError("cannot descend a place with r = 0")
        classification = classify_restriction(current, warn=warn)
        dual_flag = min_entry_in_a_everywhere(current.dual())
        restricted = [(sig, restrict_parameter(sig, hc))
                      for sig, hc in current.places]
        current = PlacedParameter(
            (Signature(sig.r - 1, sig.s), rp.prime_hc())
            for sig, rp in restricted)
        chain.append(ChainStep(
            level=current.n,
            parameter=current,
            u1_weights=tuple(rp.u1_weight for _, rp in restricted),
            classification=classification,
            dual_min_in_a=dual_flag,
        ))
    return chain

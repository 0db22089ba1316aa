"""Discrete-series parameter packets for U(r, s).

A regular, strictly decreasing infinitesimal character lambda splits into
an ordered pair of blocks (a; b) in C(n, r) ways, one per r-subset of its
entries; those shuffles are the packet. Each member carries a degree (the
count of noncompact positive roots on it), a shuffle word, its coherent
parameter, and its Blattner parameter (lowest K-type highest weight).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cartan import EntryLike, Weight, entry_to_str, rho
from .roots import Signature

__all__ = [
    "HCParameter",
    "InfinitesimalCharacter",
    "PacketMember",
    "infinitesimal_character",
    "enumerate_packet",
    "degree",
    "shuffle_length",
    "coherent_parameter",
    "blattner",
    "extremes",
    "dual_parameter",
]


def _strictly_decreasing(values: Sequence[Fraction]) -> bool:
    return all(x > y for x, y in zip(values, values[1:]))


class HCParameter:
    """Harish-Chandra parameter (a; b): two strictly decreasing blocks,
    jointly regular, with uniform half-integrality."""

    __slots__ = ("a", "b")

    def __init__(self, a: Iterable[EntryLike], b: Iterable[EntryLike]):
        a_tuple = tuple(Fraction(x) for x in a)
        b_tuple = tuple(Fraction(x) for x in b)
        joint = Weight(a_tuple + b_tuple)
        if not _strictly_decreasing(a_tuple):
            raise ValueError(f"a-block {a_tuple} is not strictly decreasing")
        if not _strictly_decreasing(b_tuple):
            raise ValueError(f"b-block {b_tuple} is not strictly decreasing")
        if not joint.is_regular():
            raise ValueError(f"parameter {a_tuple} ; {b_tuple} is singular")
        object.__setattr__(self, "a", a_tuple)
        object.__setattr__(self, "b", b_tuple)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("HCParameter is immutable")

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def s(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return len(self.a) + len(self.b)

    @property
    def sig(self) -> Signature:
        return Signature(self.r, self.s)

    @property
    def weight(self) -> Weight:
        """Concatenated (a, b) as a plain weight."""
        return Weight(self.a + self.b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HCParameter):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        a_text = ",".join(entry_to_str(e) for e in self.a)
        b_text = ",".join(entry_to_str(e) for e in self.b)
        return f"HCParameter(({a_text};{b_text}))"


class InfinitesimalCharacter:
    """Strictly decreasing regular weight; the packet-defining datum."""

    __slots__ = ("weight",)

    def __init__(self, entries: Iterable[EntryLike]):
        weight = entries if isinstance(entries, Weight) else Weight(entries)
        if not _strictly_decreasing(weight.entries):
            raise ValueError(
                f"infinitesimal character {weight.entries} is not strictly "
                "decreasing (singular or misordered)")
        object.__setattr__(self, "weight", weight)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("InfinitesimalCharacter is immutable")

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self.weight.entries

    @property
    def n(self) -> int:
        return len(self.weight)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InfinitesimalCharacter):
            return NotImplemented
        return self.weight == other.weight

    def __hash__(self) -> int:
        return hash(self.weight)

    def __repr__(self) -> str:
        return f"InfinitesimalCharacter({self.weight.entries})"


@dataclass(frozen=True)
class PacketMember:
    """One shuffle of the infinitesimal character, with derived data."""

    hc: HCParameter
    degree: int
    shuffle_word: tuple[int, ...]
    blattner: Weight
    coherent: Weight

    @property
    def length(self) -> int:
        """Inversion count of the shuffle word."""
        word = self.shuffle_word
        return sum(1 for k in range(len(word)) for l in range(k + 1, len(word))
                   if word[k] > word[l])


def infinitesimal_character(a_sigma: Iterable[EntryLike]) -> InfinitesimalCharacter:
    """Shift a non-increasing highest weight by rho.

    The result is strictly decreasing, hence regular.
    """
    weight = a_sigma if isinstance(a_sigma, Weight) else Weight(a_sigma)
    if any(x < y for x, y in zip(weight.entries, weight.entries[1:])):
        raise ValueError(f"highest weight {weight.entries} is not non-increasing")
    return InfinitesimalCharacter(weight + rho(len(weight)))


def degree(hc: HCParameter) -> int:
    """Number of pairs a_i > b_j; equals the count of noncompact positive
    roots pairing strictly positively with the parameter."""
    return sum(1 for ai in hc.a for bj in hc.b if ai > bj)


def shuffle_length(hc: HCParameter, ic: InfinitesimalCharacter) -> int:
    """Inversion count of the permutation taking ic to the concatenation."""
    word = _shuffle_word(hc, ic)
    return sum(1 for k in range(len(word)) for l in range(k + 1, len(word))
               if word[k] > word[l])


def _shuffle_word(hc: HCParameter, ic: InfinitesimalCharacter) -> tuple[int, ...]:
    entries = ic.entries
    concat = hc.a + hc.b
    if sorted(concat, reverse=True) != list(entries):
        raise ValueError("parameter is not a shuffle of the infinitesimal character")
    position = {value: k + 1 for k, value in enumerate(entries)}
    return tuple(position[value] for value in concat)


def coherent_parameter(hc: HCParameter) -> Weight:
    """The rho-shift of the concatenated parameter."""
    return hc.weight - rho(hc.n)


def blattner(hc: HCParameter) -> Weight:
    """Lowest K-type highest weight: the coherent parameter plus the sum of
    noncompact positive roots pairing strictly positively with hc."""
    coords = list(coherent_parameter(hc).entries)
    for i, ai in enumerate(hc.a):
        for j, bj in enumerate(hc.b):
            if ai > bj:
                coords[i] += 1
                coords[hc.r + j] -= 1
    return Weight(coords)


def enumerate_packet(ic: InfinitesimalCharacter, sig: Signature) -> list[PacketMember]:
    """All C(n, r) shuffles, in colexicographic order of the a-block index set."""
    n = ic.n
    if sig.n != n:
        raise ValueError("dimension mismatch")
    entries = ic.entries
    subsets = sorted(itertools.combinations(range(n), sig.r),
                     key=lambda c: tuple(reversed(c)))
    members = []
    for subset in subsets:
        chosen = set(subset)
        a = tuple(entries[k] for k in subset)
        b = tuple(entries[k] for k in range(n) if k not in chosen)
        hc = HCParameter(a, b)
        word = tuple(k + 1 for k in subset) + tuple(
            k + 1 for k in range(n) if k not in chosen)
        members.append(PacketMember(
            hc=hc,
            degree=degree(hc),
            shuffle_word=word,
            blattner=blattner(hc),
            coherent=coherent_parameter(hc),
        ))
    return members


def extremes(packet: Sequence[PacketMember]) -> tuple[PacketMember, PacketMember]:
    """(holomorphic, antiholomorphic): the degree-0 and degree-rs members."""
    if not packet:
        raise ValueError("empty packet")
    rs = packet[0].hc.r * packet[0].hc.s
    lows = [m for m in packet if m.degree == 0]
    highs = [m for m in packet if m.degree == rs]
    if len(lows) != 1 or len(highs) != 1:
        raise ValueError("inconsistent packet: extreme members not unique")
    return lows[0], highs[0]


def dual_parameter(hc: HCParameter) -> HCParameter:
    """Contragredient parameter: negate and reverse each block."""
    return HCParameter(tuple(-x for x in reversed(hc.a)),
                       tuple(-x for x in reversed(hc.b)))

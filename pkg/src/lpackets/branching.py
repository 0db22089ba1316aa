"""Classical branching from U(m) to U(m-1) x U(1).

A dominant (non-increasing) highest weight restricts multiplicity-free to
the dominant weights interlacing it; the U(1) weight is the trace
difference. Half-integral weights interlace the same way. Weyl's
dimension formula provides an independent count for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cartan import Weight
from .roots import Signature

__all__ = [
    "BranchConstituent",
    "KRestriction",
    "interlaces",
    "branch",
    "weyl_dim",
    "restrict_ktype",
    "restriction_contains",
]


def _require_dominant(weight: Weight, label: str) -> None:
    if any(x < y for x, y in zip(weight.entries, weight.entries[1:])):
        raise ValueError(f"{label} {weight.entries} is not non-increasing")


@dataclass(frozen=True)
class BranchConstituent:
    """One U(m-1) x U(1) constituent of a restricted representation."""

    lower: Weight
    u1: Fraction


@dataclass(frozen=True)
class KRestriction:
    """K-type split for U(r-1) x U(1) x U(s): head, pivot, tail."""

    head: Weight
    u1: Fraction
    tail: Weight


def interlaces(upper: Weight, lower: Weight) -> bool:
    """upper_1 >= lower_1 >= upper_2 >= ... >= lower_{m-1} >= upper_m."""
    if len(lower) != len(upper) - 1:
        raise ValueError("dimension mismatch")
    return all(upper[k] >= lower[k] >= upper[k + 1] for k in range(len(lower)))


def branch(upper: Weight) -> list[BranchConstituent]:
    """All interlacing lower weights, lexicographically descending.

    Entries step by 1 inside [upper_{k+1}, upper_k], so every constituent
    stays on the coset of the input. Multiplicities are all 1.
    """
    _require_dominant(upper, "highest weight")
    if len(upper) < 1:
        raise ValueError("empty highest weight")
    total = sum(upper.entries)
    if len(upper) == 1:
        return [BranchConstituent(lower=Weight(()), u1=total)]

    def descend(prefix: list[Fraction], k: int, out: list[BranchConstituent]) -> None:
        if k == len(upper) - 1:
            lower = Weight(tuple(prefix))
            out.append(BranchConstituent(lower=lower, u1=total - sum(prefix)))
            return
        top, bottom = upper[k], upper[k + 1]
        steps = int(top - bottom)
        for offset in range(steps + 1):
            prefix.append(top - offset)
            descend(prefix, k + 1, out)
            prefix.pop()

    constituents: list[BranchConstituent] = []
    descend([], 0, constituents)
    return constituents


def weyl_dim(weight: Weight) -> int:
    """Dimension of the irreducible U(m) representation with this highest
    weight: product over i < j of (w_i - w_j + j - i) / (j - i)."""
    _require_dominant(weight, "highest weight")
    m = len(weight)
    value = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(weight[i] - weight[j] + j - i, j - i)
    if value.denominator != 1:
        raise ValueError("dimension formula did not produce an integer")
    return value.numerator


def restrict_ktype(lam: Weight, sig: Signature) -> KRestriction:
    """Split a K-highest weight by peeling the last a-block entry to U(1)."""
    if sig.r < 1:
        raise ValueError("signature needs r >= 1 to restrict")
    if len(lam) != sig.n:
        raise ValueError("dimension mismatch")
    a, b = lam.entries[: sig.r], lam.entries[sig.r:]
    _require_dominant(Weight(a), "a-block")
    _require_dominant(Weight(b), "b-block")
    return KRestriction(head=Weight(a[:-1]), u1=a[-1], tail=Weight(b))


def restriction_contains(lam: Weight, sig: Signature, candidate: KRestriction) -> bool:
    """True iff candidate occurs in lam restricted along the a-block:
    the head interlaces the a-block with the forced U(1) weight, and the
    tail equals the b-block."""
    if sig.r < 1:
        raise ValueError("signature needs r >= 1 to restrict")
    if len(lam) != sig.n:
        raise ValueError("dimension mismatch")
    a, b = Weight(lam.entries[: sig.r]), Weight(lam.entries[sig.r:])
    if len(candidate.head) != sig.r - 1:
        return False
    return (interlaces(a, candidate.head)
            and candidate.u1 == sum(a.entries) - sum(candidate.head.entries)
            and candidate.tail == b)

"""Exact weight arithmetic on the diagonal torus of u(n).

Weights are tuples of rationals lying in (1/2)Z, with all entries of one
weight in a single coset of Z (all integral or all half-odd). Arithmetic
is exact throughout; no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

EntryLike = Union[int, Fraction]

__all__ = [
    "Weight",
    "pairing",
    "rho",
    "rho_tilde",
    "hodge_parameter",
    "entry_to_str",
    "entry_from_str",
    "weight_to_strings",
    "weight_from_strings",
]


def _to_entry(value: EntryLike) -> Fraction:
    entry = Fraction(value)
    if entry.denominator not in (1, 2):
        raise ValueError(f"weight entry {entry} is not a half-integer")
    return entry


class Weight:
    """Immutable n-tuple in (1/2)Z^n with uniform half-integrality."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[EntryLike]):
        values = tuple(_to_entry(v) for v in entries)
        # 2*e is an integer; its parity identifies the coset of Z.
        parities = {(2 * e).numerator % 2 for e in values}
        if len(parities) > 1:
            raise ValueError(f"mixed half-integrality in weight {values}")
        object.__setattr__(self, "entries", values)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Weight is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Weight(x + y for x, y in zip(self.entries, other.entries))

    def __sub__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Weight(x - y for x, y in zip(self.entries, other.entries))

    def __neg__(self) -> "Weight":
        return Weight(-x for x in self.entries)

    def __repr__(self) -> str:
        return f"Weight(({', '.join(entry_to_str(e) for e in self.entries)}))"

    def is_regular(self) -> bool:
        """True iff all entries are pairwise distinct."""
        return len(set(self.entries)) == len(self.entries)


def pairing(x: Weight, y: Weight) -> Fraction:
    """Standard dot product; the bilinear form used everywhere here."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def rho(n: int) -> Weight:
    """Half-sum of the standard positive roots: ((n-1)/2, (n-3)/2, ..., (1-n)/2)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Weight(Fraction(n - 1 - 2 * k, 2) for k in range(n))


def rho_tilde(n: int) -> Weight:
    """Integral shift of rho: (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Weight(n - 1 - k for k in range(n))


def hodge_parameter(weight: Weight) -> Weight:
    """Shift every entry by (n-1)/2, moving rho-shifted data onto rho_tilde."""
    n = len(weight)
    shift = Fraction(n - 1, 2)
    return Weight(e + shift for e in weight)


# Serialization: each entry renders as "p" (integral) or "p/2" (odd p).

def entry_to_str(entry: Fraction) -> str:
    if entry.denominator == 1:
        return str(entry.numerator)
    return f"{entry.numerator}/2"


def entry_from_str(text: str) -> Fraction:
    """Parse "p" or "p/2" with odd p; any other denominator is rejected."""
    token = text.strip()
    if "/" in token:
        num_text, _, den_text = token.partition("/")
        try:
            num = int(num_text)
            den = int(den_text)
        except ValueError:
            raise ValueError(f"bad weight entry {token!r}") from None
        if den == 1:
            return Fraction(num)
        if den != 2:
            raise ValueError(f"bad weight entry {token!r}: denominator must be 1 or 2")
        if num % 2 == 0:
            raise ValueError(f"bad weight entry {token!r}: not in lowest terms")
        return Fraction(num, 2)
    try:
        return Fraction(int(token))
    except ValueError:
        raise ValueError(f"bad weight entry {token!r}") from None


def weight_to_strings(weight: Weight) -> list[str]:
    return [entry_to_str(e) for e in weight]


def weight_from_strings(items: Iterable[str]) -> Weight:
    return Weight(entry_from_str(s) for s in items)

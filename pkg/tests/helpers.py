"""Shared generators for randomized sweeps; all seeded by the caller."""

from __future__ import annotations

import random

from lpackets import (
    InfinitesimalCharacter,
    Signature,
    Weight,
    infinitesimal_character,
)


def all_signatures(n: int) -> list[Signature]:
    return [Signature(r, n - r) for r in range(n + 1)]


def random_dominant(rng: random.Random, n: int, strict: bool = False,
                    max_gap: int = 3) -> Weight:
    """Non-increasing integer tuple; strictly decreasing when strict."""
    low = 1 if strict else 0
    entries = [rng.randint(-4, 8)]
    for _ in range(n - 1):
        entries.append(entries[-1] - rng.randint(low, max_gap))
    return Weight(entries)


def random_ic(rng: random.Random, n: int, strict: bool = False) -> InfinitesimalCharacter:
    """Regular infinitesimal character; consecutive gaps >= 2 when strict."""
    return infinitesimal_character(random_dominant(rng, n, strict=strict))


def random_kdominant(rng: random.Random, sig: Signature,
                     max_gap: int = 3) -> Weight:
    """Non-increasing within each block of the signature."""
    blocks: list[int] = []
    for size in (sig.r, sig.s):
        for k in range(size):
            top = rng.randint(-4, 8)
            blocks.append(top if k == 0 else blocks[-1] - rng.randint(0, max_gap))
    return Weight(blocks)

"""Minimal K-type test for U(r, s).

Given a K-dominant weight mu, decide whether it is the lowest K-type of a
discrete series and, if so, recover the Harish-Chandra parameter. The test
shifts mu by the compact roots pairing strictly positively with it, reads
off the theta-stable parabolic that shift determines, and demands three
things: the parabolic is a Borel (the shifted weight is regular), mu stays
weakly above the parabolic's root sum, and the recovered parameter
(shifted weight minus the half root sum) is regular.

The full-shift variant (shifted weight minus the whole root sum) is kept
as a diagnostic; it is singular in general and never drives acceptance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cartan import Weight
from .packets import HCParameter, _strictly_decreasing
from .roots import RootSet, Signature, compact_roots, positive_on, roots_g, sum_of_roots

__all__ = [
    "ThetaParabolic",
    "MinimalKTypeVerdict",
    "shifted_weight",
    "theta_parabolic",
    "minimal_ktype_test",
    "regularity_margin",
]


@dataclass(frozen=True)
class ThetaParabolic:
    """Nilradical root set of the parabolic a regular weight determines."""

    delta_u: RootSet
    is_borel: bool
    two_rho_u: Weight


def shifted_weight(mu: Weight, sig: Signature) -> Weight:
    """mu plus the sum of compact roots pairing strictly positively with mu.

    Requires mu K-dominant: non-increasing within each block of sig.
    """
    if len(mu) != sig.n:
        raise ValueError("dimension mismatch")
    blocks = (mu.entries[: sig.r], mu.entries[sig.r:])
    for block in blocks:
        if any(x < y for x, y in zip(block, block[1:])):
            raise ValueError(f"weight {mu.entries} is not K-dominant for {sig}")
    shift = sum_of_roots(positive_on(compact_roots(sig), mu))
    return mu + shift


def theta_parabolic(weight: Weight) -> ThetaParabolic:
    """Roots pairing strictly positively with the weight; Borel iff the
    weight is regular (all n(n-1)/2 positive pairs appear)."""
    n = len(weight)
    delta_u = positive_on(roots_g(n), weight)
    return ThetaParabolic(
        delta_u=delta_u,
        is_borel=len(delta_u) == n * (n - 1) // 2,
        two_rho_u=sum_of_roots(delta_u),
    )


@dataclass(frozen=True)
class MinimalKTypeVerdict:
    """Outcome of the test; hc is present exactly when accepted."""

    accepted: bool
    borel_ok: bool
    positivity_ok: bool
    hc: Optional[HCParameter]
    hc_double_shift: Weight
    mu_shifted: Weight


def minimal_ktype_test(mu: Weight, sig: Signature) -> MinimalKTypeVerdict:
    """Decide lowest-K-type status of mu and recover its parameter."""
    shifted = shifted_weight(mu, sig)
    parabolic = theta_parabolic(shifted)
    borel_ok = parabolic.is_borel
    positivity_ok = all(
        root.pair(shifted) >= root.pair(parabolic.two_rho_u)
        for root in parabolic.delta_u)
    double_shift = shifted - parabolic.two_rho_u

    hc: Optional[HCParameter] = None
    accepted = False
    if borel_ok and positivity_ok:
        # Borel case: the half root sum is a permuted rho, so the shift
        # keeps uniform half-integrality.
        half = Weight(Fraction(e, 2) for e in parabolic.two_rho_u)
        candidate = shifted - half
        a, b = candidate.entries[: sig.r], candidate.entries[sig.r:]
        if candidate.is_regular() and _strictly_decreasing(a) and _strictly_decreasing(b):
            hc = HCParameter(a, b)
            accepted = True
    return MinimalKTypeVerdict(
        accepted=accepted,
        borel_ok=borel_ok,
        positivity_ok=positivity_ok,
        hc=hc,
        hc_double_shift=double_shift,
        mu_shifted=shifted,
    )


def regularity_margin(weight: Weight) -> Optional[Fraction]:
    """Smallest |pairing| against any root: the minimal entry gap.

    None for weights of length < 2 (no roots to pair against).
    """
    if len(weight) < 2:
        return None
    return min(abs(x - y) for k, x in enumerate(weight)
               for y in weight.entries[k + 1:])

"""Poincaré polynomial of the upper motive R_p(G) and twist decompositions.

For a generically split variety X the motive splits as a sum of Tate twists
of R_p(G); the twists are read off from the quotient P(X, t) / P(R_p(G), t).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import InvalidInput, NegativeMultiplicity, NotDivisible
from .jprofile import JInvariant, JProfile
from .polyring import IntPoly, exact_div, geom_quotient, prod

__all__ = [
    "TwistMultiset",
    "Admissible",
    "motive_poincare",
    "decompose",
    "admissible_J",
    "ADMISSIBLE_CAP",
]

ADMISSIBLE_CAP = 10**6


@dataclass(frozen=True)
class TwistMultiset:
    """Multiplicity of each twist ``R_p(G)(i)`` in a motivic decomposition."""

    counts: Mapping[int, int]

    def __post_init__(self):
        clean = {int(i): int(a) for i, a in sorted(self.counts.items())}
        if any(i < 0 for i in clean):
            raise InvalidInput("twists must be nonnegative")
        if any(a <= 0 for a in clean.values()):
            raise InvalidInput("multiplicities must be positive")
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_poly(cls, Q: IntPoly) -> TwistMultiset:
        return cls({i: a for i, a in enumerate(Q.coeffs) if a})

    def to_poly(self) -> IntPoly:
        return IntPoly.from_terms(dict(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def twists(self) -> list[int]:
        """Twists with repetition, in increasing order."""
        return [i for i, a in self.counts.items() for _ in range(a)]

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return dict(self.counts) == dict(other)
        if isinstance(other, TwistMultiset):
            return dict(self.counts) == dict(other.counts)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))


def motive_poincare(J: JInvariant) -> IntPoly:
    """prod_i (1 - t^(d_i p^j_i)) / (1 - t^d_i)."""
    p = J.profile.p
    return prod(geom_quotient(d * p**j, d) for d, j in zip(J.profile.degrees, J.components))


def decompose(P_X: IntPoly, J: JInvariant) -> TwistMultiset:
    R = motive_poincare(J)
    try:
        Q = exact_div(P_X, R)
    except NotDivisible as exc:
        raise NotDivisible(
            f"P(X) is not divisible by P(R_p(G)) for J = {list(J.components)}",
            {"P_X": P_X, "motive": R, **exc.witness},
        ) from None
    neg = [i for i, a in enumerate(Q.coeffs) if a < 0]
    if neg:
        raise NegativeMultiplicity(
            f"quotient has negative coefficients at degrees {neg}",
            {"P_X": P_X, "motive": R, "quotient": Q},
        )
    return TwistMultiset.from_poly(Q)


@dataclass(frozen=True)
class Admissible:
    invariants: tuple[JInvariant, ...]
    truncated: bool
    scanned: int
    candidates: int

    def __iter__(self) -> Iterator[JInvariant]:
        return iter(self.invariants)

    def __len__(self) -> int:
        return len(self.invariants)

    def components(self) -> list[tuple[int, ...]]:
        return [J.components for J in self.invariants]


def admissible_J(P_X: IntPoly, profile: JProfile, cap: int = ADMISSIBLE_CAP) -> Admissible:
    """Every J within the profile bounds for which ``decompose(P_X, J)`` succeeds.

    Candidates are scanned in lexicographic order; at most ``cap`` are tried.
    """
    if profile.bounds is None:
        raise InvalidInput("admissible_J needs a profile with bounds")
    total = math.prod(k + 1 for k in profile.bounds)
    found = []
    scanned = 0
    for comps in itertools.product(*(range(k + 1) for k in profile.bounds)):
        if scanned >= cap:
            break
        scanned += 1
        J = JInvariant(profile, comps)
        try:
            decompose(P_X, J)
        except (NotDivisible, NegativeMultiplicity):
            continue
        found.append(J)
    return Admissible(tuple(found), scanned < total, scanned, total)

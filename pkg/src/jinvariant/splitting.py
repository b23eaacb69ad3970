"""Behaviour of the J-invariant over the function field of SB(A) for a Tits algebra A.

Degree > 1 components are unchanged; on degree-1 components the multisets
satisfy ``J1(G) + {0} = J1(G_FA) + {j_GA}``.  Everything is cross-checked
against the polynomial identity

    (t^q - 1) prod (t^(d_i p^j'_i) - 1) = (t - 1) prod (t^(d_i p^j_i) - 1),
    q = p^j_GA,

and its divided form ``(t^n - 1)/(t - 1) = prod (..)/(..) * F(t)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistentInput, InvalidInput, LengthMismatch, NotDivisible
from .jprofile import JInvariant, valuation
from .polyring import IntPoly, geom_quotient, prod

__all__ = [
    "SplittingInput",
    "SplittingResult",
    "IdentityCheck",
    "p_primary_part",
    "F_polynomial",
    "split_transform",
    "verify_identity",
    "degree_one_multiset_rule",
]


def p_primary_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    return p ** valuation(n, p)


def _p_exponent(n: int, p: int) -> int:
    """``s`` with ``n == p**s``; InvalidInput otherwise."""
    if n < 1:
        raise InvalidInput(f"degree n = {n} must be positive")
    s = valuation(n, p)
    if p**s != n:
        raise InvalidInput(f"degree n = {n} is not a power of p = {p}")
    return s


@dataclass(frozen=True)
class SplittingInput:
    J: JInvariant
    n: int
    jGA: int

    def __post_init__(self):
        p = self.J.profile.p
        s = _p_exponent(self.n, p)
        if self.jGA < 0:
            raise InvalidInput("j_GA must be nonnegative")
        if self.jGA > s:
            raise InvalidInput(f"p^j_GA = {p}^{self.jGA} does not divide n = {self.n}")

    @property
    def p(self) -> int:
        return self.J.profile.p


@dataclass(frozen=True)
class SplittingResult:
    components: tuple[int, ...]
    """J(G_FA) as an indexed tuple (canonical slot assignment)."""
    J1_after: tuple[int, ...]
    """Degree-1 components over F_A as a multiset, sorted decreasingly."""
    higher_after: tuple[int, ...]
    F: IntPoly
    changed_slot: int | None
    """0-based slot that became 0, or None when nothing changed."""


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: IntPoly
    rhs: IntPoly
    divided_holds: bool | None
    """Divided form; None when some j'_i > j_i makes a factor non-polynomial."""
    divided_lhs: IntPoly
    divided_rhs: IntPoly | None

    def __bool__(self) -> bool:
        return self.holds and self.divided_holds is not False


def F_polynomial(n: int, jGA: int, p: int) -> IntPoly:
    """``(t^n - 1) / (t^q - 1)`` with ``q = p^jGA``."""
    s = _p_exponent(n, p)
    if jGA < 0 or jGA > s:
        raise InvalidInput(f"p^jGA = {p}^{jGA} does not divide n = {n}")
    return geom_quotient(n, p**jGA)


def split_transform(inp: SplittingInput) -> SplittingResult:
    J = inp.J
    degrees = J.profile.degrees
    ones = [i for i, d in enumerate(degrees) if d == 1]
    comps = list(J.components)
    j1 = [comps[i] for i in ones]
    if inp.jGA != 0 and inp.jGA not in j1:
        raise InconsistentInput(
            f"j_GA = {inp.jGA} is not among the degree-1 components {j1} or 0",
            {"degree_one_components": j1, "jGA": inp.jGA},
        )
    changed = None
    if inp.jGA != 0:
        changed = next(i for i in ones if comps[i] == inp.jGA)
        comps[changed] = 0
    after = tuple(comps)
    return SplittingResult(
        components=after,
        J1_after=tuple(sorted((after[i] for i in ones), reverse=True)),
        higher_after=tuple(after[i] for i, d in enumerate(degrees) if d > 1),
        F=F_polynomial(inp.n, inp.jGA, inp.p),
        changed_slot=changed,
    )


def verify_identity(
    J_before: JInvariant, J_after: Sequence[int], n: int, jGA: int
) -> IdentityCheck:
    profile = J_before.profile
    if len(J_after) != profile.r:
        raise LengthMismatch(f"J_after has {len(J_after)} components, expected {profile.r}")
    p = profile.p
    q = p**jGA
    tm1 = IntPoly.t_power_minus_one
    before = [d * p**j for d, j in zip(profile.degrees, J_before.components)]
    after = [d * p**j for d, j in zip(profile.degrees, J_after)]
    lhs = prod([tm1(q)] + [tm1(a) for a in after])
    rhs = prod([tm1(1)] + [tm1(b) for b in before])

    divided_lhs = geom_quotient(n, 1)
    try:
        factors = [geom_quotient(b, a) for a, b in zip(after, before)]
        divided_rhs = prod(factors) * F_polynomial(n, jGA, p)
    except (NotDivisible, InvalidInput):
        divided_rhs = None
    divided_holds = None if divided_rhs is None else divided_lhs == divided_rhs
    return IdentityCheck(lhs == rhs, lhs, rhs, divided_holds, divided_lhs, divided_rhs)


def degree_one_multiset_rule(before: Sequence[int], after: Sequence[int], jGA: int) -> bool:
    """Check ``before + {0} == after + {jGA}`` as multisets."""
    return Counter(before) + Counter([0]) == Counter(after) + Counter([jGA])


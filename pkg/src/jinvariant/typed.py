"""Type D_n: algebras of degree 2n with orthogonal involution of trivial discriminant.

All indices are stored as 2-adic valuations: ``iA`` for A, ``iplus`` and
``iminus`` for the two components C+ and C- of the Clifford algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InconsistentInput, InvalidData, InvalidInput, NotHalfSpin
from .jprofile import JInvariant, d_series_shape, valuation
from .splitting import SplittingInput, split_transform

__all__ = [
    "InvolutionData",
    "Component",
    "Indeterminate",
    "k1",
    "j1",
    "j1_halfspin",
    "j2",
    "index_reduction_exponent",
    "validate",
    "split_over_FA",
]


class Component(enum.Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class InvolutionData:
    n: int
    iA: int
    iplus: int
    iminus: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("n must be positive")
        if min(self.iA, self.iplus, self.iminus) < 0:
            raise InvalidInput("index valuations must be nonnegative")

    def swapped(self) -> InvolutionData:
        return InvolutionData(self.n, self.iA, self.iminus, self.iplus)


@dataclass(frozen=True)
class Indeterminate:
    """No closed formula applies; only ``value <= upper_bound`` is known."""

    upper_bound: int


def k1(data: InvolutionData) -> int:
    return valuation(data.n, 2)


def validate(data: InvolutionData) -> list[str]:
    """Index-level consequences of the fundamental relations; empty list means ok."""
    out = []
    deg_val = valuation(2 * data.n, 2)
    if data.iA > deg_val:
        out.append(
            f"ind A = 2^{data.iA} does not divide deg A = {2 * data.n} (needs iA <= {deg_val})"
        )
    a, p, m = data.iA, data.iplus, data.iminus
    if data.n % 2 == 0:
        # [A] = [C+] + [C-] (all of exponent 2) and ind(B (x) C) | ind B * ind C;
        # in particular one split algebra forces the other two to agree
        for name, x, y, z in (("A", a, p, m), ("C+", p, a, m), ("C-", m, a, p)):
            if x > y + z:
                out.append(
                    f"[A] + [C+] + [C-] = 0 needs v2(ind {name}) <= sum of the other two"
                    f" ({x} > {y} + {z})"
                )
    else:
        # [A] = 2[C+] = 2[C-], and ind(C^2) | ind C
        if a > min(p, m):
            out.append(f"[A] = 2[C+] = 2[C-] needs iA <= min(i+, i-) ({a} > {min(p, m)})")
    return out


def _checked(data: InvolutionData) -> None:
    bad = validate(data)
    if bad:
        raise InvalidData(bad)


def j1(data: InvolutionData) -> int:
    """min{v2(n), iA, max{i+, i-}}."""
    _checked(data)
    return min(k1(data), data.iA, max(data.iplus, data.iminus))


def j1_halfspin(data: InvolutionData) -> int:
    if data.iplus != 0 and data.iminus != 0:
        raise NotHalfSpin("neither Clifford component is split")
    return min(k1(data), data.iA)


def j2(data: InvolutionData) -> int | Indeterminate:
    low = min(data.iplus, data.iminus)
    if low < min(k1(data), data.iA):
        return low
    return Indeterminate(low)


def index_reduction_exponent(data: InvolutionData, component: Component | str) -> int:
    """v2 of ind A over the function field of X+ (or X-)."""
    component = Component(component)
    other = data.iminus if component is Component.PLUS else data.iplus
    return min(k1(data), data.iA, other)


def split_over_FA(data: InvolutionData, J: JInvariant) -> JInvariant:
    """J-invariant over the generic splitting field of A: the first component becomes 0."""
    prof = J.profile
    if prof.p != 2 or prof.type is None or prof.type.series != "D":
        raise InvalidInput("split_over_FA needs a type D profile at p = 2")
    if prof.type.rank != data.n:
        raise InconsistentInput(
            f"profile is {prof.type} but the involution data has n = {data.n}",
            {"profile_rank": prof.type.rank, "n": data.n},
        )
    _, degrees, _ = d_series_shape(data.n)
    if prof.degrees != degrees:
        raise InvalidInput(f"profile degrees {list(prof.degrees)} are not those of {prof.type}")
    expected = j1(data)
    if J.components[0] != expected:
        raise InconsistentInput(
            f"first component {J.components[0]} differs from j1 = {expected}",
            {"J": list(J.components), "j1": expected},
        )
    out = JInvariant(prof, (0,) + J.components[1:])
    # degree 2n reduced to its 2-primary part
    n_primary = 2 ** valuation(2 * data.n, 2)
    res = split_transform(SplittingInput(J, n_primary, expected))
    if res.components != out.components:
        raise AssertionError(
            f"split_transform gave {res.components}, expected {out.components}"
        )
    return out

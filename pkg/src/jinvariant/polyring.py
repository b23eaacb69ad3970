"""Dense univariate polynomials over the integers.

Coefficients are Python ints (arbitrary precision), stored low degree first
with trailing zeros trimmed, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotDivisible

__all__ = [
    "IntPoly",
    "add",
    "sub",
    "mul",
    "exact_div",
    "geom_quotient",
    "evaluate",
    "prod",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial in ``t`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, a in terms.items():
            c[k] += a
        return cls(c)

    @classmethod
    def t_power_minus_one(cls, k: int) -> IntPoly:
        """``t**k - 1``."""
        if k == 0:
            return cls()
        return cls([-1] + [0] * (k - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other) -> IntPoly:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return sub(self, _coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return sub(_coerce(other), self)

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __mul__(self, other) -> IntPoly:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                body = str(abs(a))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if abs(a) == 1 else f"{abs(a)}{mono}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")


def add(P: IntPoly, Q: IntPoly) -> IntPoly:
    a, b = P.coeffs, Q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def sub(P: IntPoly, Q: IntPoly) -> IntPoly:
    return add(P, -Q)


def mul(P: IntPoly, Q: IntPoly) -> IntPoly:
    a, b = P.coeffs, Q.coeffs
    if not a or not b:
        return IntPoly()
    # iterate over the sparser factor; Poincaré-type factors are mostly zeros
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    nz_b = [(j, c) for j, c in enumerate(b) if c]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in nz_b:
            out[i + j] += x * y
    return IntPoly(out)


def prod(factors: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly([1])
    for f in factors:
        out = mul(out, f)
    return out


def exact_div(P: IntPoly, Q: IntPoly) -> IntPoly:
    """Return ``R`` with ``Q * R == P``.

    Raises :class:`NotDivisible` as soon as a quotient coefficient is not an
    integer or when the final remainder is nonzero.
    """
    if Q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if P.is_zero():
        return IntPoly()
    witness = {"dividend": P, "divisor": Q}
    dq = Q.degree
    if P.degree < dq:
        raise NotDivisible(f"{P} is not divisible by {Q}", witness)
    rem = list(P.coeffs)
    lead = Q.coeffs[-1]
    nz_q = [(j, c) for j, c in enumerate(Q.coeffs[:-1]) if c]
    quot = [0] * (P.degree - dq + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + dq]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NotDivisible(
                f"{P} is not divisible by {Q}: fractional coefficient at t^{k}",
                witness,
            )
        quot[k] = c
        rem[k + dq] = 0
        for j, b in nz_q:
            rem[k + j] -= c * b
    if any(rem[:dq]):
        witness["remainder"] = IntPoly(rem[:dq])
        raise NotDivisible(f"{P} is not divisible by {Q}: nonzero remainder", witness)
    return IntPoly(quot)


def geom_quotient(a: int, b: int) -> IntPoly:
    """``(t**a - 1) / (t**b - 1) = 1 + t**b + ... + t**(a - b)``."""
    if a <= 0 or b <= 0:
        raise ValueError("geom_quotient needs positive arguments")
    if a % b:
        raise NotDivisible(
            f"t^{b} - 1 does not divide t^{a} - 1",
            {"dividend": IntPoly.t_power_minus_one(a), "divisor": IntPoly.t_power_minus_one(b)},
        )
    c = [0] * (a - b + 1)
    c[::b] = [1] * (a // b)
    return IntPoly(c)


def evaluate(P: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


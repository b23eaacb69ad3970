"""J-invariant profiles: generator degrees and truncation bounds per (type, prime).

A profile records the data of the mod-p Chow ring of the split group,
``F_p[e_1..e_r] / (e_i^(p^k_i))`` with ``deg e_i = d_i``.  Profiles are loaded
from a JSON document; only the type D_n / p = 2 entries are checked against
hard-wired formulas, everything else is taken as supplied.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import ConsistencyError, InvalidInput, LengthMismatch, SchemaError
from .polyring import IntPoly, geom_quotient, prod
from .rootdata import DynkinType

__all__ = [
    "JProfile",
    "JInvariant",
    "Order",
    "ProfileRegistry",
    "PROFILES_ENV",
    "is_prime",
    "valuation",
    "load_profiles",
    "load_default_profiles",
    "resolve_profiles",
    "d_series_shape",
    "truncated_ring_poincare",
    "monomial_codim",
    "monomial_compare",
    "monomial_key",
]

PROFILES_ENV = "JINV_PROFILES"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a positive integer."""
    if n <= 0:
        raise ValueError("valuation of a non-positive integer")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class JProfile:
    """Generator degrees ``d_1 <= ... <= d_r`` and bounds ``k_1..k_r`` at prime ``p``.

    ``type`` is ``None`` for ad hoc profiles built from a degree list alone;
    ``bounds`` is ``None`` when the truncation exponents are unknown.
    """

    type: DynkinType | None
    p: int
    degrees: tuple[int, ...]
    bounds: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.bounds is not None:
            object.__setattr__(self, "bounds", tuple(int(k) for k in self.bounds))
        if not is_prime(self.p):
            raise InvalidInput(f"p = {self.p} is not prime")
        if any(d < 1 for d in self.degrees):
            raise InvalidInput("degrees must be positive")
        if list(self.degrees) != sorted(self.degrees):
            raise InvalidInput(f"degrees {list(self.degrees)} are not nondecreasing")
        bad = [d for d in self.degrees if d % self.p == 0]
        if bad:
            raise InvalidInput(f"degrees {bad} are not coprime to p = {self.p}")
        if self.bounds is not None:
            if len(self.bounds) != len(self.degrees):
                raise LengthMismatch("bounds and degrees differ in length")
            if any(k < 0 for k in self.bounds):
                raise InvalidInput("bounds must be nonnegative")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def num_degree_one(self) -> int:
        return sum(1 for d in self.degrees if d == 1)

    def key(self) -> tuple[str, int, int] | None:
        if self.type is None:
            return None
        return (self.type.series, self.type.rank, self.p)

    def invariant(self, components: Iterable[int]) -> JInvariant:
        return JInvariant(self, tuple(components))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        if self.type is not None:
            out["series"] = self.type.series
            out["rank"] = self.type.rank
        out["p"] = self.p
        out["r"] = self.r
        out["degrees"] = list(self.degrees)
        out["bounds"] = None if self.bounds is None else list(self.bounds)
        return out


@dataclass(frozen=True)
class JInvariant:
    profile: JProfile
    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(int(j) for j in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.profile.r:
            raise LengthMismatch(
                f"J-invariant has {len(comps)} components, profile has r = {self.profile.r}"
            )
        if any(j < 0 for j in comps):
            raise InvalidInput("J-invariant components must be nonnegative")
        if self.profile.bounds is not None:
            over = [
                i + 1 for i, (j, k) in enumerate(zip(comps, self.profile.bounds)) if j > k
            ]
            if over:
                raise InvalidInput(
                    f"components {over} exceed their bounds {list(self.profile.bounds)}"
                )

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> int:
        return self.components[i]


def d_series_shape(n: int) -> tuple[int, tuple[int, ...], int]:
    """``(r, degrees, k_1)`` forced for adjoint D_n at p = 2."""
    r = n // 2 + 1
    degrees = (1,) + tuple(2 * i - 3 for i in range(2, r + 1))
    return r, degrees, valuation(n, 2)


_ENTRY_FIELDS = {"series", "rank", "p", "r", "degrees", "bounds", "source"}


def _int_field(entry: Mapping, name: str, where: str) -> int:
    v = entry.get(name)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"{where}: field {name!r} must be an integer")
    return v


def _int_list(entry: Mapping, name: str, where: str, allow_null_first: bool = False) -> list:
    v = entry.get(name)
    if not isinstance(v, list):
        raise SchemaError(f"{where}: field {name!r} must be a list of integers")
    for i, x in enumerate(v):
        if x is None and allow_null_first and i == 0:
            continue
        if not isinstance(x, int) or isinstance(x, bool):
            raise SchemaError(f"{where}: field {name!r} must be a list of integers")
    return v


def _parse_entry(entry: Any, pos: int) -> JProfile:
    where = f"entry {pos}"
    if not isinstance(entry, dict):
        raise SchemaError(f"{where}: expected an object")
    extra = set(entry) - _ENTRY_FIELDS
    if extra:
        raise SchemaError(f"{where}: unknown fields {sorted(extra)}")
    series = entry.get("series")
    if not isinstance(series, str):
        raise SchemaError(f"{where}: field 'series' must be a string")
    rank = _int_field(entry, "rank", where)
    p = _int_field(entry, "p", where)
    try:
        dtype = DynkinType(series.upper(), rank)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc

    if series.upper() == "D" and p == 2:
        return _parse_d_entry(entry, dtype, where)

    for name in ("r", "degrees", "bounds"):
        if name not in entry:
            raise SchemaError(f"{where}: missing field {name!r}")
    r = _int_field(entry, "r", where)
    degrees = _int_list(entry, "degrees", where)
    bounds = _int_list(entry, "bounds", where)
    if len(degrees) != r or len(bounds) != r:
        raise SchemaError(f"{where}: degrees and bounds must have length r = {r}")
    try:
        return JProfile(dtype, p, tuple(degrees), tuple(bounds))
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _parse_d_entry(entry: Mapping, dtype: DynkinType, where: str) -> JProfile:
    r, degrees, k1 = d_series_shape(dtype.rank)
    if "r" in entry and _int_field(entry, "r", where) != r:
        raise ConsistencyError(f"{where}: {dtype} at p=2 needs r = {r}, got {entry['r']}")
    if "degrees" in entry:
        given = _int_list(entry, "degrees", where)
        if tuple(given) != degrees:
            raise ConsistencyError(
                f"{where}: {dtype} at p=2 needs degrees {list(degrees)}, got {given}"
            )
    if "bounds" not in entry:
        raise SchemaError(f"{where}: missing field 'bounds'")
    bounds = _int_list(entry, "bounds", where, allow_null_first=True)
    if len(bounds) == r - 1:
        bounds = [None] + bounds
    if len(bounds) != r:
        raise ConsistencyError(f"{where}: {dtype} at p=2 needs {r} bounds, got {len(bounds)}")
    if bounds[0] is None:
        bounds[0] = k1
    elif bounds[0] != k1:
        raise ConsistencyError(f"{where}: {dtype} at p=2 needs k_1 = v_2(n) = {k1}")
    try:
        return JProfile(dtype, 2, degrees, tuple(bounds))
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


@dataclass(frozen=True)
class ProfileRegistry:
    entries: Mapping[tuple[str, int, int], JProfile] = field(default_factory=dict)
    origin: str = ""

    def get(self, dtype: DynkinType, p: int) -> JProfile:
        try:
            return self.entries[(dtype.series, dtype.rank, p)]
        except KeyError:
            raise InvalidInput(f"no profile for {dtype} at p = {p}") from None

    def __contains__(self, key) -> bool:
        dtype, p = key
        return (dtype.series, dtype.rank, p) in self.entries

    def __iter__(self):
        return iter(self.entries[k] for k in sorted(self.entries))

    def __len__(self) -> int:
        return len(self.entries)


def load_profiles(source: str | Path | Sequence | Mapping, origin: str = "") -> ProfileRegistry:
    """Build a registry from a JSON file path, JSON text, or an already parsed list."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("[")):
        path = Path(source)
        origin = origin or str(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise SchemaError(f"cannot read profile document {path}: {exc}") from exc
        source = text
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"profile document is not valid JSON: {exc}") from exc
    else:
        doc = source
    if not isinstance(doc, list):
        raise SchemaError("profile document must be a top-level list of entries")
    entries: dict[tuple[str, int, int], JProfile] = {}
    for pos, raw in enumerate(doc):
        prof = _parse_entry(raw, pos)
        key = prof.key()
        if key in entries:
            raise SchemaError(f"entry {pos}: duplicate profile for {prof.type} at p = {prof.p}")
        entries[key] = prof
    return ProfileRegistry(entries, origin)


def load_default_profiles() -> ProfileRegistry:
    text = resources.files("jinvariant").joinpath("data/profiles.json").read_text("utf-8")
    return load_profiles(text, origin="<bundled>")


def resolve_profiles(path: str | Path | None = None) -> ProfileRegistry:
    """Explicit path, then the ``JINV_PROFILES`` environment variable, then the bundled table."""
    if path:
        return load_profiles(Path(path))
    env = os.environ.get(PROFILES_ENV)
    if env:
        return load_profiles(Path(env))
    return load_default_profiles()


def truncated_ring_poincare(profile: JProfile, exponents: Sequence[int]) -> IntPoly:
    """Hilbert series of ``F_p[e_1..e_r] / (e_i^(p^j_i))`` with ``deg e_i = d_i``."""
    if len(exponents) != profile.r:
        raise LengthMismatch(f"expected {profile.r} exponents, got {len(exponents)}")
    if any(j < 0 for j in exponents):
        raise InvalidInput("exponents must be nonnegative")
    p = profile.p
    return prod(geom_quotient(d * p**j, d) for d, j in zip(profile.degrees, exponents))


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def monomial_codim(M: Sequence[int], degrees: Sequence[int]) -> int:
    if len(M) != len(degrees):
        raise LengthMismatch(f"monomial of length {len(M)} for r = {len(degrees)}")
    return sum(d * m for d, m in zip(degrees, M))


def monomial_key(M: Sequence[int], degrees: Sequence[int]) -> tuple:
    """Sort key realising the monomial order: codimension, then the last differing exponent."""
    return (monomial_codim(M, degrees), tuple(reversed(M)))


def monomial_compare(M: Sequence[int], N: Sequence[int], profile: JProfile | Sequence[int]) -> Order:
    degrees = profile.degrees if isinstance(profile, JProfile) else tuple(profile)
    if len(M) != len(N):
        raise LengthMismatch("monomials of different lengths")
    cm, cn = monomial_codim(M, degrees), monomial_codim(N, degrees)
    if cm != cn:
        return Order.LESS if cm < cn else Order.GREATER
    for m, n in zip(reversed(M), reversed(N)):
        if m != n:
            return Order.LESS if m < n else Order.GREATER
    return Order.EQUAL

"""Dynkin types, Weyl group exponents and Poincaré polynomials of flag varieties.

Simple roots are numbered as in Bourbaki.  The Cartan matrix convention is
``a[i][j] = 2 (a_i, a_j) / (a_i, a_i)``, so the simple reflection ``s_i`` acts
on a root written in the simple-root basis by ``b -> b - (sum_j a[i][j] b_j) a_i``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import GroupTooLarge, InvalidSubset, InvalidType, NotDivisible
from .polyring import IntPoly, exact_div, geom_quotient, prod

__all__ = [
    "DynkinType",
    "WeylData",
    "cartan_matrix",
    "weyl_data",
    "flag_poincare",
    "parabolic_poincare",
    "severi_brauer_poincare",
    "coxeter_length_oracle",
    "positive_roots",
    "classify_diagram",
    "levi_components",
    "exponents",
    "DEFAULT_ORACLE_CAP",
]

DEFAULT_ORACLE_CAP = 10**6

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


@dataclass(frozen=True, order=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise InvalidType(f"unknown Dynkin series {self.series!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidType("rank must be an integer")
        if self.series in _MIN_RANK:
            if self.rank < _MIN_RANK[self.series]:
                raise InvalidType(
                    f"{self.series}_n needs n >= {_MIN_RANK[self.series]}, got {self.rank}"
                )
        elif self.rank not in _FIXED_RANKS[self.series]:
            raise InvalidType(f"{self.series}_{self.rank} does not exist")

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        m = re.fullmatch(r"\s*([A-Ga-g])[_ ]?(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class WeylData:
    type: DynkinType
    exponents: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(e + 1 for e in self.exponents)

    @property
    def num_positive_roots(self) -> int:
        return sum(self.exponents)


def exponents(dtype: DynkinType) -> tuple[int, ...]:
    s, n = dtype.series, dtype.rank
    if s == "A":
        return tuple(range(1, n + 1))
    if s in "BC":
        return tuple(range(1, 2 * n, 2))
    if s == "D":
        return tuple(sorted((*range(1, 2 * n - 2, 2), n - 1)))
    return _EXCEPTIONAL_EXPONENTS[(s, n)]


def weyl_data(dtype: DynkinType) -> WeylData:
    return WeylData(dtype, exponents(dtype))


def _edges(dtype: DynkinType) -> list[tuple[int, int]]:
    s, n = dtype.series, dtype.rank
    if s in "ABC":
        return [(i, i + 1) for i in range(1, n)]
    if s == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if s == "E":
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]
    if s == "F":
        return [(1, 2), (2, 3), (3, 4)]
    return [(1, 2)]


def cartan_matrix(dtype: DynkinType) -> tuple[tuple[int, ...], ...]:
    n = dtype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(dtype):
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    s = dtype.series
    # multiple bonds: the long root of the pair carries the -1 entry
    if s == "B":
        a[n - 1][n - 2] = -2
    elif s == "C":
        a[n - 2][n - 1] = -2
    elif s == "F":
        a[2][1] = -2
    elif s == "G":
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def classify_diagram(cartan: list[list[int]] | tuple[tuple[int, ...], ...]) -> DynkinType:
    """Identify a connected finite-type Cartan matrix up to isomorphism.

    B2 and C2 coincide; the result is reported as B2.
    """
    n = len(cartan)
    if n == 0:
        raise InvalidSubset("empty diagram")
    nbrs = {i: [j for j in range(n) if j != i and cartan[i][j]] for i in range(n)}
    if n == 1:
        return DynkinType("A", 1)
    bonds = {
        (i, j): cartan[i][j] * cartan[j][i] for i in range(n) for j in nbrs[i] if i < j
    }
    if 3 in bonds.values():
        return DynkinType("G", 2)
    if 2 in bonds.values():
        if n == 2:
            return DynkinType("B", 2)
        (u, v), = [e for e, m in bonds.items() if m == 2]
        ends = [x for x in (u, v) if len(nbrs[x]) == 1]
        if not ends:
            return DynkinType("F", 4)
        end = ends[0]
        other = v if end == u else u
        # the end node is short exactly when a[other][end] == -1
        end_is_short = cartan[other][end] == -1
        return DynkinType("B" if end_is_short else "C", n)
    branch = [i for i in range(n) if len(nbrs[i]) == 3]
    if not branch:
        return DynkinType("A", n)
    center = branch[0]
    arms = []
    for start in nbrs[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [x for x in nbrs[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return DynkinType("E", n)
    raise InvalidSubset(f"diagram with arms {arms} is not of finite type")


def flag_poincare(dtype: DynkinType) -> IntPoly:
    """Solomon's product over exponents: P(G/B, t) = prod (t^(e+1) - 1)/(t - 1)."""
    return prod(geom_quotient(e + 1, 1) for e in exponents(dtype))


def _components(indices: list[int], cartan) -> list[list[int]]:
    remaining = set(indices)
    comps = []
    while remaining:
        seed = min(remaining)
        stack, comp = [seed], {seed}
        while stack:
            i = stack.pop()
            for j in remaining:
                if j not in comp and cartan[i - 1][j - 1]:
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        comps.append(sorted(comp))
    return comps


def levi_components(dtype: DynkinType, theta: Iterable[int]) -> list[DynkinType]:
    """Dynkin types of the connected components of the sub-diagram on ``theta``."""
    theta = sorted(set(theta))
    bad = [i for i in theta if not (1 <= i <= dtype.rank)]
    if bad:
        raise InvalidSubset(f"simple root indices {bad} out of range for {dtype}")
    cartan = cartan_matrix(dtype)
    out = []
    for comp in _components(theta, cartan):
        sub = [[cartan[i - 1][j - 1] for j in comp] for i in comp]
        out.append(classify_diagram(sub))
    return out


def parabolic_poincare(dtype: DynkinType, theta: Iterable[int]) -> IntPoly:
    """Poincaré polynomial of G/P_theta, where theta spans the Levi subgroup."""
    levi = prod(flag_poincare(c) for c in levi_components(dtype, theta))
    try:
        return exact_div(flag_poincare(dtype), levi)
    except NotDivisible as exc:  # pragma: no cover - a parabolic Weyl group always divides
        raise AssertionError(f"Weyl polynomial of {dtype} not divisible by Levi factor") from exc


def severi_brauer_poincare(n: int) -> IntPoly:
    """P(SB(A), t) for a degree ``n`` algebra, i.e. that of projective (n-1)-space."""
    if n < 1:
        raise ValueError("degree must be positive")
    return geom_quotient(n, 1)


@lru_cache(maxsize=None)
def positive_roots(dtype: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Positive roots in the simple-root basis, sorted by height then lexicographically."""
    roots = _all_roots(dtype)
    pos = [r for r in roots if sum(r) > 0]
    return tuple(sorted(pos, key=lambda r: (sum(r), r)))


def _reflect(cartan, i: int, root: tuple[int, ...]) -> tuple[int, ...]:
    c = sum(cartan[i][j] * root[j] for j in range(len(root)))
    if c == 0:
        return root
    out = list(root)
    out[i] -= c
    return tuple(out)


@lru_cache(maxsize=None)
def _all_roots(dtype: DynkinType) -> tuple[tuple[int, ...], ...]:
    n = dtype.rank
    cartan = cartan_matrix(dtype)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = _reflect(cartan, i, r)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return tuple(sorted(seen))


def coxeter_length_oracle(dtype: DynkinType, cap: int = DEFAULT_ORACLE_CAP) -> IntPoly:
    """Length generating function of W by breadth-first search.

    Each element w is stored as the tuple of indices (into the root list) of
    w(a_1), ..., w(a_n); this determines w.  Left multiplication by s_i is a
    table lookup on every entry.  BFS depth equals Coxeter length, and since
    the Cayley graph is bipartite by length parity, the next level is the set
    of neighbours of the current level minus the previous level.
    """
    n = dtype.rank
    cartan = cartan_matrix(dtype)
    roots = _all_roots(dtype)
    index = {r: k for k, r in enumerate(roots)}
    table = np.array(
        [[index[_reflect(cartan, i, r)] for r in roots] for i in range(n)],
        dtype=np.int64,
    )
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    start = np.array([[index[r] for r in simple]], dtype=np.int64)

    bits = max(1, (len(roots) - 1).bit_length())
    if bits * n <= 63:
        shifts = np.arange(n, dtype=np.int64) * bits

        def keys_of(rows: np.ndarray) -> np.ndarray:
            return np.bitwise_or.reduce(rows << shifts, axis=1)

    else:
        width = 1 if len(roots) <= 256 else 2
        dtype_ = np.uint8 if width == 1 else np.uint16

        def keys_of(rows: np.ndarray) -> np.ndarray:
            packed = np.ascontiguousarray(rows.astype(dtype_))
            return packed.view(np.dtype((np.void, packed.itemsize * n))).ravel()

    counts = [1]
    total = 1
    prev_keys = keys_of(start[:0])
    cur, cur_keys = start, keys_of(start)
    while True:
        cand = np.concatenate([table[i][cur] for i in range(n)], axis=0)
        cand_keys = keys_of(cand)
        uniq_keys, first = np.unique(cand_keys, return_index=True)
        fresh = ~np.isin(uniq_keys, prev_keys, assume_unique=True)
        nxt = cand[first[fresh]]
        if len(nxt) == 0:
            break
        total += len(nxt)
        if total > cap:
            raise GroupTooLarge(f"|W({dtype})| exceeds the oracle cap {cap}")
        counts.append(len(nxt))
        prev_keys, cur, cur_keys = cur_keys, nxt, uniq_keys[fresh]
    return IntPoly(counts)

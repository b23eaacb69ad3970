"""Oracle-versus-formula verification suites.

Each suite returns a :class:`CheckResult`; the CLI ``selfcheck`` command and
the acceptance tests both run them.  Random suites take an explicit seed so
that reports are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .jprofile import (
    JInvariant,
    JProfile,
    ProfileRegistry,
    load_default_profiles,
    truncated_ring_poincare,
    valuation,
)
from .motives import decompose, motive_poincare
from .polyring import IntPoly, evaluate
from .rootdata import (
    DEFAULT_ORACLE_CAP,
    DynkinType,
    coxeter_length_oracle,
    flag_poincare,
    severi_brauer_poincare,
    weyl_data,
)
from .splitting import (
    SplittingInput,
    degree_one_multiset_rule,
    split_transform,
    verify_identity,
)
from .typed import (
    Component,
    InvolutionData,
    index_reduction_exponent,
    j1,
    j1_halfspin,
    j2,
    split_over_FA,
    validate,
)

__all__ = [
    "CheckResult",
    "weyl_oracle_suite",
    "truncated_ring_suite",
    "split_roundtrip_suite",
    "type_d_suite",
    "conjecture_suite",
    "conic_golden_suite",
    "run_all",
    "brute_force_monomial_count",
    "types_within",
]

MAX_RECORDED_FAILURES = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    examples: list[str] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0

    def record(self, ok: bool, what: Callable[[], str] | str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < MAX_RECORDED_FAILURES:
                self.examples.append(what() if callable(what) else what)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "failure_examples": list(self.examples),
            "info": dict(self.info),
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.cases} cases, {self.failures} failures"


# -- Weyl groups ------------------------------------------------------------


def types_within(cap: int) -> Iterator[DynkinType]:
    """Every Dynkin type whose Weyl group has at most ``cap`` elements."""
    for series, first in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        n = first
        while weyl_data(DynkinType(series, n)).order <= cap:
            yield DynkinType(series, n)
            n += 1
    for series, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        t = DynkinType(series, n)
        if weyl_data(t).order <= cap:
            yield t


def weyl_oracle_suite(cap: int = DEFAULT_ORACLE_CAP) -> CheckResult:
    res = CheckResult("weyl_oracle_equivalence")
    covered = []
    for t in types_within(cap):
        covered.append(str(t))
        flag = flag_poincare(t)
        bfs = coxeter_length_oracle(t, cap=cap)
        order = math.prod(e + 1 for e in weyl_data(t).exponents)
        res.record(bfs == flag, lambda: f"{t}: BFS {list(bfs)} != Solomon {list(flag)}")
        res.record(evaluate(flag, 1) == order, lambda: f"{t}: P(1) != |W| = {order}")
        res.record(flag.is_palindromic(), lambda: f"{t}: not palindromic")
    res.info["types"] = covered
    return res


# -- truncated polynomial rings ----------------------------------------------


def brute_force_monomial_count(degrees, p: int, exponents) -> IntPoly:
    """Count monomials with 0 <= m_i < p^j_i by codimension, by enumeration."""
    counts: Counter[int] = Counter()
    for M in itertools.product(*(range(p**j) for j in exponents)):
        counts[sum(d * m for d, m in zip(degrees, M))] += 1
    return IntPoly.from_terms(dict(counts))


def _random_degrees(rng: random.Random, p: int, r: int, max_degree: int) -> tuple[int, ...]:
    pool = [d for d in range(1, max_degree + 1) if d % p]
    return tuple(sorted(rng.choice(pool) for _ in range(r)))


def _random_bounded_profile(rng: random.Random, max_size: int) -> JProfile:
    p = rng.choice((2, 3, 5, 7))
    r = rng.randint(1, 5)
    degrees = _random_degrees(rng, p, r, 9)
    bounds = []
    size = 1
    for _ in range(r):
        k = 0
        limit = rng.randint(0, 4)
        while k < limit and size * p ** (k + 1) <= max_size:
            k += 1
        bounds.append(k)
        size *= p**k
    return JProfile(None, p, degrees, tuple(bounds))


def truncated_ring_suite(count: int = 60, max_size: int = 10**5, seed: int = 20240) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("truncated_ring_oracle")
    sizes = []
    for _ in range(count):
        prof = _random_bounded_profile(rng, max_size)
        sizes.append(math.prod(prof.p**k for k in prof.bounds))
        formula = truncated_ring_poincare(prof, prof.bounds)
        oracle = brute_force_monomial_count(prof.degrees, prof.p, prof.bounds)
        res.record(formula == oracle, lambda: f"{prof.to_dict()}: {formula} != {oracle}")
        res.record(
            evaluate(formula, 1) == sizes[-1], lambda: f"{prof.to_dict()}: P(1) != prod p^k"
        )
    res.info["profiles"] = count
    res.info["max_ring_dimension"] = max(sizes)
    return res


# -- generic splitting of a Tits algebra ---------------------------------------


def _random_splitting_input(rng: random.Random) -> SplittingInput:
    p = rng.choice((2, 3))
    s = rng.randint(0, 6)
    n = p**s
    r = rng.randint(1, 5)
    ones = rng.randint(0, r)
    higher = _random_degrees(rng, p, r - ones, 8)
    higher = tuple(d for d in higher if d > 1) or ()
    degrees = (1,) * (r - len(higher)) + higher
    kmax = 3 if p == 2 else 2
    bounds = tuple(rng.randint(0, kmax) for _ in degrees)
    prof = JProfile(None, p, degrees, bounds)
    comps = [rng.randint(0, k) for k in bounds]
    J = JInvariant(prof, comps)
    choices = [0] + [comps[i] for i, d in enumerate(degrees) if d == 1 and comps[i] <= s]
    return SplittingInput(J, n, rng.choice(choices))


def split_roundtrip_suite(count: int = 10**4, seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("split_roundtrip")
    changed = 0
    for _ in range(count):
        inp = _random_splitting_input(rng)
        out = split_transform(inp)
        J = inp.J
        degrees = J.profile.degrees
        check = verify_identity(J, out.components, inp.n, inp.jGA)
        tag = lambda: f"J={list(J.components)} d={list(degrees)} p={inp.p} n={inp.n} jGA={inp.jGA}"
        res.record(check.holds and check.divided_holds is True, lambda: f"identity fails: {tag()}")
        before_higher = tuple(j for j, d in zip(J.components, degrees) if d > 1)
        res.record(out.higher_after == before_higher, lambda: f"higher changed: {tag()}")
        before_one = [j for j, d in zip(J.components, degrees) if d == 1]
        res.record(
            degree_one_multiset_rule(before_one, out.J1_after, inp.jGA)
            and len(out.J1_after) == len(before_one),
            lambda: f"multiset rule fails: {tag()}",
        )
        res.record(
            evaluate(out.F, 1) * inp.p**inp.jGA == inp.n
            and out.F == IntPoly.from_terms({k: 1 for k in range(0, inp.n, inp.p**inp.jGA)}),
            lambda: f"F has wrong shape: {tag()}",
        )
        if out.components != J.components:
            changed += 1
            res.record(
                any(
                    d == 1 and a != b and b == 0
                    for a, b, d in zip(J.components, out.components, degrees)
                ),
                lambda: f"no degree-1 component dropped to 0: {tag()}",
            )
    res.info["inputs"] = count
    res.info["changed"] = changed
    return res


# -- type D formulas -------------------------------------------------------------


def type_d_suite(n_range=range(2, 65), i_max: int = 6) -> CheckResult:
    res = CheckResult("type_d_formulas")
    skipped = guarded = halfspin = 0
    rng = range(i_max + 1)
    for n in n_range:
        kk = valuation(n, 2)
        for iA, ip, im in itertools.product(rng, rng, rng):
            data = InvolutionData(n, iA, ip, im)
            if validate(data):
                skipped += 1
                continue
            tag = lambda: f"n={n} iA={iA} i+={ip} i-={im}"
            v = j1(data)
            res.record(v == min(kk, iA, max(ip, im)), lambda: f"j1 formula: {tag()}")
            res.record(v <= kk and v <= iA and v <= max(ip, im), lambda: f"upper bound: {tag()}")
            lo_p = index_reduction_exponent(data, Component.PLUS)
            lo_m = index_reduction_exponent(data, Component.MINUS)
            res.record(v >= lo_p and v >= lo_m, lambda: f"lower bound: {tag()}")
            res.record(v == max(lo_p, lo_m), lambda: f"max of lower bounds: {tag()}")
            if n % 2:
                res.record(v == 0, lambda: f"odd n with j1 != 0: {tag()}")
            if ip == 0 or im == 0:
                halfspin += 1
                res.record(j1_halfspin(data) == v, lambda: f"half-spin: {tag()}")
            sw = data.swapped()
            res.record(j1(sw) == v and j2(sw) == j2(data), lambda: f"symmetry: {tag()}")
            w = j2(data)
            if min(ip, im) < min(kk, iA):
                guarded += 1
                res.record(w == min(ip, im), lambda: f"j2 guard case: {tag()}")
            else:
                res.record(
                    getattr(w, "upper_bound", None) == min(ip, im),
                    lambda: f"j2 indeterminate bound: {tag()}",
                )
    res.info.update(skipped_invalid=skipped, j2_guard_cases=guarded, halfspin_cases=halfspin)
    return res


def conjecture_suite(
    registry: ProfileRegistry | None = None, max_rank: int = 12, i_max: int = 6
) -> CheckResult:
    """split_over_FA on every J-invariant of every D_n profile up to ``max_rank``.

    Each J is paired with every valid involution datum (indices up to
    ``i_max``) whose j1 equals the first component of J.
    """
    registry = registry or load_default_profiles()
    res = CheckResult("conjecture_reduction")
    profiles = [
        prof
        for prof in registry
        if prof.type.series == "D" and prof.p == 2 and prof.type.rank <= max_rank
    ]
    pairs = 0
    unmatched = 0
    rng = range(i_max + 1)
    for prof in profiles:
        n = prof.type.rank
        by_j1: dict[int, list[InvolutionData]] = {}
        for iA, ip, im in itertools.product(rng, rng, rng):
            data = InvolutionData(n, iA, ip, im)
            if not validate(data):
                by_j1.setdefault(j1(data), []).append(data)
        for comps in itertools.product(*(range(k + 1) for k in prof.bounds)):
            J = JInvariant(prof, comps)
            matches = by_j1.get(comps[0], [])
            if not matches:
                unmatched += 1
            for data in matches:
                pairs += 1
                out = split_over_FA(data, J)
                res.record(
                    out.components == (0,) + comps[1:],
                    lambda: f"{prof.type} J={list(comps)} data={data}: got {list(out.components)}",
                )
    res.info.update(profiles=[str(p.type) for p in profiles], pairs=pairs, unmatched_J=unmatched)
    return res


def conic_golden_suite(registry: ProfileRegistry | None = None) -> CheckResult:
    registry = registry or load_default_profiles()
    res = CheckResult("conic_golden")
    a1 = registry.get(DynkinType("A", 1), 2)
    J = JInvariant(a1, (1,))
    res.record(motive_poincare(J) == IntPoly([1, 1]), "A1, J=(1): motive is not 1+t")
    conic = severi_brauer_poincare(2)
    res.record(conic == flag_poincare(DynkinType("A", 1)), "P(P^1) != P(A1 flag)")
    res.record(dict(decompose(conic, J).counts) == {0: 1}, "conic does not decompose as {0: 1}")
    a3 = registry.get(DynkinType("A", 3), 2)
    J3 = JInvariant(a3, (1,))
    res.record(motive_poincare(J3) == IntPoly([1, 1]), "A3, J=(1): motive is not 1+t")
    res.record(
        dict(decompose(severi_brauer_poincare(4), J3).counts) == {0: 1, 2: 1},
        "SB of degree 4 does not decompose as {0: 1, 2: 1}",
    )
    return res


def run_all(registry: ProfileRegistry | None = None, quick: bool = False) -> list[CheckResult]:
    registry = registry or load_default_profiles()
    return [
        weyl_oracle_suite(10**5 if quick else DEFAULT_ORACLE_CAP),
        truncated_ring_suite(count=20 if quick else 60),
        split_roundtrip_suite(count=10**3 if quick else 10**4),
        type_d_suite(),
        conjecture_suite(registry, max_rank=8 if quick else 12),
        conic_golden_suite(registry),
    ]

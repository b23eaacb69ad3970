import itertools

import pytest
from hypothesis import strategies as st

from jinvariant.jprofile import JProfile, load_default_profiles
from jinvariant.polyring import IntPoly


@pytest.fixture(scope="session")
def registry():
    return load_default_profiles()


def enumerate_monomials(degrees, p, exponents):
    """Count monomials prod e_i^m_i with 0 <= m_i < p^j_i by codimension."""
    counts = {}
    for ms in itertools.product(*(range(p**j) for j in exponents)):
        c = sum(d * m for d, m in zip(degrees, ms))
        counts[c] = counts.get(c, 0) + 1
    top = max(counts)
    return IntPoly([counts.get(i, 0) for i in range(top + 1)])


@st.composite
def profiles(draw, primes=(2, 3, 5), max_r=4, max_bound=3):
    p = draw(st.sampled_from(primes))
    r = draw(st.integers(1, max_r))
    pool = [d for d in range(1, 16) if d % p]
    degrees = sorted(draw(st.lists(st.sampled_from(pool), min_size=r, max_size=r)))
    bounds = draw(st.lists(st.integers(0, max_bound), min_size=r, max_size=r))
    return JProfile(None, p, degrees, bounds)


@st.composite
def invariants(draw, **kw):
    prof = draw(profiles(**kw))
    comps = [draw(st.integers(0, k)) for k in prof.bounds]
    return prof.invariant(comps)


# -- acceptance summary: one line per criterion ---------------------------------

_criteria: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    status = "PASS" if report.passed else "FAIL"
    detail = props.get("detail", "")
    _criteria.append(f"[{status}] criterion {props['criterion']}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)

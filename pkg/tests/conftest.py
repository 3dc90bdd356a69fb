import itertools
import random

import pytest

from cartoonsim.clifford import Multivector
from cartoonsim.combs import CombIndex, comb_encode

TOL = 1e-12


def max_diff(x: Multivector, y: Multivector) -> float:
    keys = set(x.terms) | set(y.terms)
    return max((abs(x.coeff(k) - y.coeff(k)) for k in keys), default=0.0)


def assert_mv_close(x: Multivector, y: Multivector, tol: float = TOL):
    assert x.width == y.width
    d = max_diff(x, y)
    assert d <= tol, f"max coefficient difference {d:g}\n  got      {x}\n  expected {y}"


def all_comb_indices(n):
    for zeroth in (0, 1):
        for bits in itertools.product("01", repeat=n):
            yield CombIndex(zeroth, "".join(bits))


def comb_mv(idx: CombIndex, coeff: float = 1.0) -> Multivector:
    return Multivector.from_blade(idx.width, comb_encode(idx), coeff)


def random_multivector(rng: random.Random, width: int, n_terms: int = 6, gens=None) -> Multivector:
    gens = width + 2 if gens is None else gens
    terms = {rng.randrange(1 << gens): rng.uniform(-2, 2) for _ in range(n_terms)}
    return Multivector(width, terms)


def random_comb_mv(rng: random.Random, width: int, n_terms: int = 8) -> Multivector:
    terms = {rng.randrange(1 << (width + 1)): rng.uniform(-2, 2) for _ in range(n_terms)}
    return Multivector(width, terms)


@pytest.fixture
def rng():
    return random.Random(20260101)


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_ac" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    import test_acceptance

    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _ACCEPTANCE:
        doc = (getattr(test_acceptance, name).__doc__ or name).strip()
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {doc}  ({duration:.2f}s)")

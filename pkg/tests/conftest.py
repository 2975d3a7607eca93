from pathlib import Path

import pytest

from hopfact.factorization import verify_exact_factorization
from hopfact.hopf import build_bicrossproduct
from hopfact.m24 import certify
from hopfact.permcore import alternating_group, build_bsgs, parse_cycles, symmetric_group

DATA = Path(__file__).parent / "data"

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict = {}


def closure(gens, degree):
    """All elements generated by ``gens``, by breadth-first multiplication."""
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def cyc(text, degree):
    return parse_cycles(text, degree)


def s3_triple():
    G = symmetric_group(3)
    return G, build_bsgs([cyc("(1 2 3)", 3)]), build_bsgs([cyc("(1 2)", 3)])


def s4_triple():
    G = symmetric_group(4)
    return G, build_bsgs([cyc("(1 2)", 4), cyc("(1 2 3)", 4)]), build_bsgs([cyc("(1 2 3 4)", 4)])


def a5_triple():
    G = alternating_group(5)
    return G, build_bsgs([cyc("(1 2 3)", 5), cyc("(2 3 4)", 5)]), build_bsgs([cyc("(1 2 3 4 5)", 5)])


@pytest.fixture(scope="session")
def s3_fact():
    return verify_exact_factorization(*s3_triple())


@pytest.fixture(scope="session")
def s4_fact():
    return verify_exact_factorization(*s4_triple())


@pytest.fixture(scope="session")
def a5_fact():
    return verify_exact_factorization(*a5_triple())


@pytest.fixture(scope="session")
def m24_report():
    return certify(census=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")


@pytest.fixture(scope="session")
def h_s3(s3_fact):
    return build_bicrossproduct(s3_fact)


@pytest.fixture(scope="session")
def h_s4(s4_fact):
    return build_bicrossproduct(s4_fact)


@pytest.fixture(scope="session")
def h_a5(a5_fact):
    return build_bicrossproduct(a5_fact)

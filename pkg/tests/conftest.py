import random

import pytest

from tcurves import from_lifting, lattice_points


def random_lifting(d, rng, base=4):
    """Random strictly convex quadratic base plus bounded jitter."""
    a, c = rng.randint(1, 3), rng.randint(1, 3)
    b = rng.randint(0, min(a, c))
    jitter = 2 * base
    return {
        (i, j): base * (a * i * i + b * i * j + c * j * j) + rng.randint(0, jitter)
        for i, j in lattice_points(d)
    }


def random_unimodular(d, rng, max_tries=2000):
    """Rejection-sample liftings until the projection keeps every point."""
    for _ in range(max_tries):
        T = from_lifting(d, random_lifting(d, rng))
        if T.is_unimodular:
            return T
    raise AssertionError(f"could not draw a unimodular degree-{d} triangulation")


def random_bits(d, rng):
    n = len(lattice_points(d))
    return "".join(rng.choice("01") for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(rep, "when", "call") in (
                "call",
                "setup",
            ):
                name = nodeid.split("::")[-1]
                if status != "passed" or name not in results:
                    results[name] = status.upper()
    if results:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(results):
            terminalreporter.write_line(f"{name}: {results[name]}")

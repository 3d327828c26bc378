import functools

import pytest

from qtrace.surface import P4, build_lattice, build_polygon, triangulate_polygon


@functools.lru_cache(maxsize=None)
def p4_lattice(tri, n):
    return build_lattice(P4(tri), n)


@functools.lru_cache(maxsize=None)
def p3_lattice(n):
    return build_lattice(triangulate_polygon(build_polygon(3), []), n)


@pytest.fixture
def lam3():
    return p4_lattice("lambda", 3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

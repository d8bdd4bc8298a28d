import functools

import pytest

from a4perfect.bgg import ClassifyingTriple, realize
from a4perfect.exactfield import F2
from a4perfect.polys import GradedIdeal, enumerate_parameter_ideals

CORPUS_MAX = 8


def degree_pairs(total: int):
    return [(d1, d2) for d1 in range(1, total) for d2 in range(d1, total - d1 + 1)]


@functools.lru_cache(maxsize=None)
def invariant_corpus(field=F2, total=CORPUS_MAX) -> tuple[GradedIdeal, ...]:
    out = []
    for d1, d2 in degree_pairs(total):
        out.extend(enumerate_parameter_ideals(d1, d2, field, invariant=True))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def realized(J: GradedIdeal, L: str = "triv", l: int = 0):
    return realize(ClassifyingTriple(l, L, J))


@pytest.fixture(scope="session")
def corpus():
    return invariant_corpus()


def ideal(*gens, field=F2) -> GradedIdeal:
    return GradedIdeal.parse(list(gens), field)


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::", 1)[1]
    if report.failed:
        _CRITERIA[name] = "FAIL"
    elif report.when == "call":
        _CRITERIA.setdefault(name, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        num = name.split("_")[2]
        terminalreporter.write_line(f"criterion {int(num):2d}: {_CRITERIA[name]}  ({name})")

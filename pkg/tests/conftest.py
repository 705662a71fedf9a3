import functools

import pytest

from khcube.corpus import corpus
from khcube.diagram import parse_pd
from khcube.homology import bigraded_homology
from khcube.khovanov import khovanov_complex

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"

ACCEPTANCE = {}


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@functools.lru_cache(maxsize=None)
def corpus_items():
    return tuple(corpus(seed=0, n_braids=20))


@functools.lru_cache(maxsize=None)
def complex_of(name):
    d = dict((n, d) for n, d, _ in corpus_items())[name]
    return khovanov_complex(d)


@functools.lru_cache(maxsize=None)
def homology_of(name, p=0):
    return bigraded_homology(complex_of(name), p)


def record(number, title, ok, note=""):
    ACCEPTANCE[number] = (title, ok, note)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, note = ACCEPTANCE[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)

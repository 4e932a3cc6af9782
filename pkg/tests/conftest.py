"""Shared contexts, built once per session.

Default working parameters: F_5 with q = 2 (so q^2 = -1) and Q = (1, 2);
the semisimple runs use the rationals with q = 2, Q = (1, 100).
"""

import pytest

from cycloschur import modified_ak as mod
from cycloschur import parabolic as par
from cycloschur.ariki_koike import HeckeContext
from cycloschur.combinatorics import ParabolicShape
from cycloschur.exact_linear import PrimeField, Rationals
from cycloschur.schur import SchurContext


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


def factory_over(dom, qv=2):
    return lambda n, r, Q: HeckeContext(n, r, dom, qv, Q)


@pytest.fixture(scope="session")
def stack22(f5):
    h = HeckeContext(2, 2, f5, 2, (1, 2))
    return h, SchurContext(h, (2, 2))


@pytest.fixture(scope="session")
def stack32(f5):
    h = HeckeContext(3, 2, f5, 2, (1, 2))
    return h, SchurContext(h, (3, 3))


@pytest.fixture(scope="session")
def pc22(stack22):
    return par.ParabolicContext(stack22[1], ParabolicShape((1, 1)))


@pytest.fixture(scope="session")
def pc22_full(stack22):
    return par.ParabolicContext(stack22[1], ParabolicShape((2,)))


@pytest.fixture(scope="session")
def pc32(stack32):
    return par.ParabolicContext(stack32[1], ParabolicShape((1, 1)))


@pytest.fixture(scope="session")
def mc22(pc22, f5):
    return mod.ModifiedContext(pc22, hecke_factory=factory_over(f5))


@pytest.fixture(scope="session")
def mc22_full(pc22_full, f5):
    return mod.ModifiedContext(pc22_full, hecke_factory=factory_over(f5))


@pytest.fixture(scope="session")
def mc32(pc32, f5):
    return mod.ModifiedContext(pc32, hecke_factory=factory_over(f5))


@pytest.fixture(scope="session")
def rat22():
    dom = Rationals()
    h = HeckeContext(2, 2, dom, 2, (1, 100))
    return dom, h, SchurContext(h, (2, 2))

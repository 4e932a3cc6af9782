import random

import numpy as np
import pytest

from cycloschur.ariki_koike import HeckeContext
from cycloschur.combinatorics import (
    MultiComposition,
    pinv,
    std_tableaux,
)
from cycloschur.exact_linear import GenericRing, PrimeField, rank


@pytest.fixture(scope="module")
def generic22():
    ring = GenericRing(2)
    return HeckeContext(2, 2, ring, ring.q(), (ring.Q(1), ring.Q(2)))


def test_free_rank(stack22, stack32):
    assert stack22[0].N == 8
    assert stack32[0].N == 48


def test_defining_relations_generic(generic22):
    rep = generic22.relations_report()
    assert all(rep.values()), rep


def test_defining_relations_specialized(stack32):
    rep = stack32[0].relations_report()
    assert all(rep.values()), rep


def _annihilating_poly_vanishes(h, k):
    ring = h.ring
    eye = ring.eye(h.N)
    acc = eye
    for i in range(h.r):
        for s in range(-(k - 1), k):
            acc = ring.reduce(acc @ ring.reduce(eye * h.q_power(2 * s) * h.Q[i] - h.RL[k]))
    return ring.equal(acc, ring.zeros((h.N, h.N)))


def test_jm_annihilating_polynomials(generic22, stack32):
    for h in (generic22, stack32[0]):
        for k in range(1, h.n + 1):
            assert _annihilating_poly_vanishes(h, k), k


def test_first_jm_polynomial_is_minimal_generically(generic22):
    h = generic22
    ring = h.ring
    eye = ring.eye(h.N)
    for skip in range(h.r):
        acc = eye
        for i in range(h.r):
            if i != skip:
                acc = ring.reduce(acc @ ring.reduce(h.RL[1] - h.Q[i] * eye))
        assert not ring.equal(acc, ring.zeros((h.N, h.N)))


def test_associativity_sampled(stack32):
    h = stack32[0]
    rng = random.Random(5)
    for _ in range(40):
        a, b, c = (h.basis_vec(rng.randrange(h.N)) for _ in range(3))
        lhs = h.mult(h.mult(a, b), c)
        rhs = h.mult(a, h.mult(b, c))
        assert h.ring.equal(lhs, rhs)


def test_star_is_an_antiautomorphism(stack32):
    h = stack32[0]
    rng = random.Random(7)
    for w in [(2, 1, 3), (3, 1, 2), (2, 3, 1)]:
        assert h.ring.equal(h.star(h.T_vec(w)), h.T_vec(pinv(w)))
    for _ in range(25):
        a = h.basis_vec(rng.randrange(h.N))
        b = h.basis_vec(rng.randrange(h.N))
        assert h.ring.equal(h.star(h.star(a)), a)
        assert h.ring.equal(h.star(h.mult(a, b)), h.mult(h.star(b), h.star(a)))


def test_jm_elements_commute(stack32):
    h = stack32[0]
    for i in range(1, h.n + 1):
        for j in range(i + 1, h.n + 1):
            assert h.ring.equal(
                h.ring.reduce(h.RL[i] @ h.RL[j]),
                h.ring.reduce(h.RL[j] @ h.RL[i]),
            )


def test_young_subgroup_sum_small():
    h = HeckeContext(2, 1, PrimeField(5), 2, (1,))
    x = h.x_vec(MultiComposition(((2,),)))
    expect = h.ring.reduce(h.unit() + 2 * h.T_vec((2, 1)))
    assert h.ring.equal(x, expect)


@pytest.mark.parametrize("n,r,Q", [(2, 2, (1, 2)), (2, 3, (1, 2, 3))])
def test_cellular_basis_is_a_basis(n, r, Q):
    dom = PrimeField(5)
    h = HeckeContext(n, r, dom, 2, Q)
    from cycloschur.schur import SchurContext

    s = SchurContext(h, (n,) * r)
    rows = []
    for lam in s.lam_plus:
        m_lam = s.murphy.m_mu(lam)
        for a in std_tableaux(lam):
            for b in std_tableaux(lam):
                rows.append(h.std_pair_vec(m_lam, a, b))
    M = np.stack(rows)
    assert M.shape == (h.N, h.N)
    assert rank(dom, M) == h.N


def test_module_bases_are_independent(stack22):
    h, s = stack22
    for mu in s.lam_all:
        vecs = []
        for lam in s.lam_plus:
            for S in s.murphy.fibers(lam, mu):
                for t in std_tableaux(lam):
                    vecs.append(s.murphy.m_St(lam, mu, S, t))
        if vecs:
            M = np.stack(vecs)
            assert rank(h.ring, M) == len(vecs)

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycloschur.combinatorics import (
    BoundsTooSmall,
    MultiComposition,
    OmegaElement,
    ParabolicShape,
    all_perms,
    alpha_and_a,
    dominance,
    dominates,
    generate_lambda,
    omega_set,
    perm_identity,
    pinv,
    plen,
    pmul,
    reduced_word,
    std_tableaux,
    transposition,
)


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_multicomposition_size_and_bounds():
    mu = MultiComposition(((2, 0), (1, 1)))
    assert mu.n == 4 and mu.r == 2 and mu.bounds == (2, 2)
    assert not MultiComposition(((1, 2), (0, 0))).is_partition()
    assert MultiComposition(((2, 1), (0, 0))).is_partition()


@pytest.mark.parametrize(
    "n,r,total,plus",
    [(2, 2, 10, 5), (3, 2, 56, 10), (2, 3, 21, 9)],
)
def test_weight_poset_counts(n, r, total, plus):
    lam_all, lam_plus = generate_lambda(n, r, (n,) * r)
    assert len(lam_all) == total
    assert len(lam_plus) == plus
    assert all(lam.is_partition() for lam in lam_plus)


def test_dominance_is_a_partial_order():
    lam_all, _ = generate_lambda(2, 2, (2, 2))
    for a in lam_all:
        assert dominates(a, a)
    for a, b in itertools.permutations(lam_all, 2):
        if dominates(a, b) and dominates(b, a):
            assert a == b
    for a, b, c in itertools.permutations(lam_all, 3):
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)
    assert dominance(
        MultiComposition(((2,), (0,))), MultiComposition(((1, 1), (0, 0)))
    ) == "gt"


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3)])
def test_standard_tableau_count_matches_free_rank(n, r):
    _, lam_plus = generate_lambda(n, r, (n,) * r)
    assert sum(len(std_tableaux(lam)) ** 2 for lam in lam_plus) == _fact(n) * r ** n


def test_standard_tableaux_row_reading_comes_first():
    lam = MultiComposition(((2,), (1,)))
    tabs = std_tableaux(lam)
    assert tabs[0].d_perm() == perm_identity(3)
    assert len({t.d_perm() for t in tabs}) == len(tabs)


perm_strategy = st.permutations(tuple(range(1, 5)))


@settings(max_examples=50, deadline=None)
@given(perm_strategy, perm_strategy)
def test_permutation_arithmetic(wa, wb):
    w1, w2 = tuple(wa), tuple(wb)
    assert pmul(w1, pinv(w1)) == perm_identity(4)
    assert plen(pmul(w1, w2)) <= plen(w1) + plen(w2)
    word = reduced_word(w1)
    assert len(word) == plen(w1)
    acc = perm_identity(4)
    for i in word:
        acc = pmul(acc, transposition(4, i))
    assert acc == w1


def test_all_perms_enumeration():
    perms, lengths = all_perms(3)
    assert len(perms) == 6
    assert [plen(w) for w in perms] == lengths


def test_parabolic_shape_blocks_and_refinement():
    p = ParabolicShape((2, 2, 1))
    assert p.g == 3 and p.r == 5 and p.offsets == (0, 2, 4)
    assert [p.block_of_component(c) for c in (1, 2, 3, 4, 5)] == [1, 1, 2, 2, 3]
    assert ParabolicShape((1, 1)).refines(ParabolicShape((2,)))
    assert not ParabolicShape((2,)).refines(ParabolicShape((1, 1)))


def test_block_size_and_height_vectors():
    mu = MultiComposition(((2, 1), (1, 2, 1), (3, 2), (1, 1, 1), (4, 1)))
    alpha, a = alpha_and_a(mu, ParabolicShape((2, 2, 1)))
    assert alpha == (7, 8, 5)
    assert a == (0, 7, 15)


def test_omega_set_counts_and_bounds_guard():
    p = ParabolicShape((1, 1))
    assert len(omega_set(2, p, (2, 2))) == 4
    assert len(omega_set(3, p, (3, 3))) == 8
    with pytest.raises(BoundsTooSmall):
        omega_set(3, p, (2, 3))


def test_omega_letters_live_in_the_last_component_of_each_block():
    p = ParabolicShape((2, 1))
    for w in omega_set(2, p, (2, 2, 2)):
        for c, comp in enumerate(w.comp.comps):
            if sum(comp):
                assert c in (1, 2)  # last component of block 1, resp. block 2
        assert sorted(w.d) == [1, 2]
        assert len(w.b) == 2 and set(w.b) <= {1, 2}

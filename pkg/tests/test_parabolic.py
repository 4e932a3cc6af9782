import random
from collections import Counter

import pytest

from cycloschur import parabolic as par
from cycloschur.combinatorics import ParabolicShape
from tests.conftest import factory_over


def test_full_shape_keeps_everything(pc22_full, stack22):
    h, s = stack22
    assert len(pc22_full.cp) == s.size
    assert all(len(pc22_full.t0p[lam]) == s.dims[lam] for lam in s.lam_plus)


def test_subalgebra_closure_exhaustive(pc22, pc22_full):
    for pc in (pc22, pc22_full):
        pairs = [(g1, g2) for g1 in pc.cp for g2 in pc.cp]
        assert not pc.closure_check(pairs)
        assert not pc.support_check(pairs)


def test_standardly_based_expansions_exhaustive(pc22, pc22_full):
    for pc in (pc22, pc22_full):
        assert not pc.standardly_based_check()


def test_bilinear_forms_are_scalar_with_unit_top_entry(pc22, f5):
    s = pc22.s
    for eps in pc22.sigma:
        beta, residue = pc22.beta_form(eps)
        assert not residue
        if eps[1] == 0:
            lam = eps[0]
            i0 = s.top_pos[lam]
            assert beta[(i0, i0)] == f5.one


def test_sampled_closure_at_larger_size(pc32):
    rng = random.Random(11)
    pairs = [(rng.choice(pc32.cp), rng.choice(pc32.cp)) for _ in range(250)]
    assert not pc32.closure_check(pairs)
    assert not pc32.support_check(pairs)
    eps_sample = rng.sample(pc32.sigma, 3)
    phis = rng.sample(pc32.cp, 2)
    assert not pc32.standardly_based_check(eps_list=eps_sample, phis=phis)


def test_product_factorization_spans_everything(pc22, pc32):
    for pc in (pc22, pc32):
        assert not pc.factorization_check()


def test_span_rank_of_two_sided_products(pc22, stack22):
    h, s = stack22
    pairs = [(g1, s.star_index(g2)) for g1 in pc22.cp for g2 in pc22.cp]
    assert pc22.span_rank(pairs) == s.size


def test_quotient_dimensions_and_blocks(pc22, pc32):
    q22 = pc22.quotient()
    assert q22.size == 36
    q32 = pc32.quotient()
    assert q32.size == 1140
    blocks = Counter(q32.block_alpha(qi) for qi in range(q32.size))
    assert sorted(blocks.values()) == [165, 165, 405, 405]


def test_quotient_ideal_and_cross_blocks(pc22):
    q = pc22.quotient()
    ideal = [g for g in pc22.cp if g not in q.q_of]
    assert not q.ideal_check([(g1, g2) for g1 in pc22.cp for g2 in ideal])
    for q1 in range(q.size):
        for q2 in range(q.size):
            if q.block_alpha(q1) != q.block_alpha(q2):
                assert not q.mul(q1, q2)


def test_every_cell_head_survives_in_the_quotient(pc22):
    q = pc22.quotient()
    rows, cols, D = q.decomposition_matrix()
    assert len(cols) == len(pc22.s.lam_plus)


def test_decomposition_transfer(pc22, pc32):
    for pc in (pc22, pc32):
        rep = par.decomposition_transfer_report(pc)
        assert not rep["disagree"]
        assert not rep["nonzero_crossing"]
        assert rep["agree"]


def test_block_structure_matches_tensor_factors(pc22, pc32, f5):
    fac = factory_over(f5)
    for pc in (pc22, pc32):
        rep = par.structure_iso_check(pc, fac)
        assert rep["bijective"] and rep["dims"] and not rep["mismatches"]


def test_product_formula_for_multiplicities(pc22, pc32, f5):
    fac = factory_over(f5)
    for pc in (pc22, pc32):
        rep = par.product_formula_report(pc, fac)
        assert not rep["disagree"] and rep["agree"]


def test_refinement_containment(stack22, pc22, pc22_full):
    assert ParabolicShape((1, 1)).refines(ParabolicShape((2,)))
    assert set(pc22.cp) <= set(pc22_full.cp)

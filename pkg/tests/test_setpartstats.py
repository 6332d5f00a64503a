"""Unit tests for set-partition statistics and weighted enumeration."""

import random

import pytest

from cfenum.mpoly import Monomial, MultiPoly, var
from cfenum.setpartstats import (NotAPartition, SetPartition,
                                 enumerate_sp_polynomial, iter_rgs,
                                 iter_set_partitions, setpart_from_blocks,
                                 setpart_from_rgs, sp_dividers,
                                 sp_index_profile, sp_master_weight,
                                 sp_reverse, sp_stat_totals)

FIG9 = setpart_from_blocks([[1, 3, 6], [2, 4, 5]])


def test_setpart_from_blocks():
    pi = setpart_from_blocks([[1], [2]])
    assert pi.n == 2 and len(pi) == 2 and pi.arcs == ()
    assert set(FIG9.arcs) == {(1, 3), (3, 6), (2, 4), (4, 5)}
    with pytest.raises(NotAPartition):
        setpart_from_blocks([[1, 2], [2, 3]])
    with pytest.raises(NotAPartition):
        setpart_from_blocks([[1], []])
    with pytest.raises(NotAPartition):
        setpart_from_blocks([[1, 3]])


def test_index_profile_examples():
    prof = sp_index_profile(setpart_from_blocks([[1, 2]]))
    assert prof[0].element_class == "opener"
    assert (prof[0].cr, prof[0].ne, prof[0].qne) == (0, 0, 0)
    assert prof[0].erec_flag and prof[0].brec_flag
    assert prof[1].element_class == "closer" and prof[1].qne == 0

    prof = sp_index_profile(setpart_from_blocks([[1, 3], [2, 4]]))
    assert prof[1].element_class == "opener"
    assert (prof[1].cr, prof[1].ne) == (1, 0)

    prof = sp_index_profile(setpart_from_blocks([[1, 4], [2, 3]]))
    assert (prof[1].cr, prof[1].ne) == (0, 1)
    assert prof[2].element_class == "closer" and prof[2].qne == 1


def test_stat_totals_examples():
    t = sp_stat_totals(FIG9)
    assert t.iota == 4 and t.iota_prime == 3

    t = sp_stat_totals(setpart_from_blocks([[1], [2], [3]]))
    assert (t.cr, t.ne, t.ov, t.cov, t.cc, t.blocks) == (0, 0, 0, 0, 3, 3)

    t = sp_stat_totals(setpart_from_blocks([[1, 3], [2, 4]]))
    assert (t.cr, t.ne, t.ov, t.cov, t.cc) == (1, 0, 1, 0, 1)


def test_master_weight_examples():
    singles = setpart_from_blocks([[1], [2], [3]])
    for variant in (1, 2, 3, 4):
        assert sp_master_weight(singles, variant) \
            == Monomial({var("e", 0): 3})
    crossing = setpart_from_blocks([[1, 3], [2, 4]])
    expected = Monomial({var("a", 0, 0): 1, var("a", 1, 0): 1,
                         var("b", 0): 1, var("b", 1): 1})
    assert sp_master_weight(crossing, 1) == expected
    assert sp_master_weight(crossing, 2) == expected
    with pytest.raises(ValueError):
        sp_master_weight(crossing, 5)


def test_reverse():
    assert sp_reverse(setpart_from_blocks([[1], [2]])) \
        == setpart_from_blocks([[1], [2]])
    assert sp_reverse(setpart_from_blocks([[1, 2, 5], [3, 4]])) \
        == setpart_from_blocks([[1, 4, 5], [2, 3]])
    rng = random.Random(0)
    for _ in range(1000):
        n = rng.randrange(1, 9)
        word = [0] * n
        for i in range(1, n):
            word[i] = rng.randrange(max(word[: i]) + 2)
        pi = setpart_from_rgs(word)
        assert sp_reverse(sp_reverse(pi)) == pi


def test_rgs_enumeration():
    assert len(list(iter_rgs(0))) == 1
    counts = [len(list(iter_set_partitions(n))) for n in range(7)]
    assert counts == [1, 1, 2, 5, 15, 52, 203]
    parts = list(iter_set_partitions(4))
    assert len(set(parts)) == 15


def test_enumerate_block_count():
    x = var("x")
    assert enumerate_sp_polynomial(3, weight="block-count") \
        == x ** 3 + 3 * x ** 2 + x
    assert enumerate_sp_polynomial(0) == MultiPoly.one()


def test_enumerate_qlb_stirling():
    q, x = var("q"), var("x")
    p = enumerate_sp_polynomial(4, weight="x-lb")
    two_blocks = MultiPoly(
        {m * Monomial({q: 0}): c for m, c in p.terms.items()
         if dict(m.exps).get(x) == 2})
    expected = (3 + 3 * q + q * q) * x ** 2
    assert two_blocks == expected
    # also reachable through the blocks:k family filter
    p2 = enumerate_sp_polynomial(4, family="blocks:2", weight="x-lb")
    assert p2 == expected


def test_dividers_and_cc():
    pi = setpart_from_blocks([[1, 3], [2], [4, 5]])
    assert sp_dividers(pi) == [3, 5]
    assert sp_stat_totals(pi).cc == 2


def _totals(n):
    for pi in iter_set_partitions(n):
        yield sp_index_profile(pi), sp_stat_totals(pi)


def test_profile_invariants_n7():
    for n in range(8):
        for prof, t in _totals(n):
            for p in prof:
                if p.element_class in ("opener", "insider"):
                    assert p.qne == p.cr + p.ne == p.ov + p.cov
                    assert p.erec_flag == (p.ne == 0)
                    assert p.brec_flag == (p.cov == 0)
            assert t.psne == t.pscov
            assert t.crop + t.neop == t.ov + t.cov
            assert t.crin + t.nein == t.ovin + t.covin
            assert t.iota_prime == t.iota - t.blocks * (t.blocks - 1) // 2
            assert t.iota_prime >= 0
            assert t.m1 + t.mge2 == t.blocks
            assert t.erecop + t.nerecop == t.brecop + t.nbrecop
            assert t.erecin + t.nerecin == t.brecin + t.nbrecin
            # opener sums give the ov/cov totals
            assert t.ov == sum(p.ov for p in prof
                               if p.element_class == "opener")
            assert t.cov == sum(p.cov for p in prof
                                if p.element_class == "opener")


def test_mod2_lemma_n7():
    for n in range(8):
        for _, t in _totals(n):
            assert (t.crin + t.crop - t.ov) % 2 == 0
            assert (t.crin + t.neop - t.cov) % 2 == 0
            assert (t.ne - (t.cov + t.ovin + t.covin)) % 2 == 0


def test_rs_and_iota_propositions_n7():
    for n in range(8):
        for pi in iter_set_partitions(n):
            t = sp_stat_totals(pi)
            tr = sp_stat_totals(sp_reverse(pi))
            assert t.rs == tr.ov + 2 * tr.cov + tr.covin + tr.pscov
            assert t.iota_prime == t.cr + t.ov + t.cov + t.pscov
            assert t.iota_prime == t.crin + 2 * t.crop + t.neop + t.psne


def test_wachs_white_equidistribution_n7():
    for n in range(8):
        assert enumerate_sp_polynomial(n, weight="lb-ls") \
            == enumerate_sp_polynomial(n, weight="rs-rb")


def test_four_master_weights_agree_n7():
    for n in range(8):
        sums = [enumerate_sp_polynomial(n, weight="master%d" % v)
                for v in (1, 2, 3, 4)]
        assert sums[0] == sums[1] == sums[2] == sums[3]

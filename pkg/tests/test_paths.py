"""Unit tests for labeled Motzkin paths and the six bijections."""

import pytest

from cfenum.mpoly import Indeterminate, as_poly
from cfenum.paths import (BIJECTION_PFS, ColoredStep, InvalidPath,
                          LabeledMotzkinPath, PF_FZ, PossibilityFunction,
                          TypeMismatch, decode, encode, path_from_json,
                          path_to_json, path_validate,
                          sp_reversed_index_stats, weighted_path_sum)
from cfenum.paths import _SP_MODES
from cfenum.permstats import (Permutation, enumerate_perm_polynomial,
                              iter_permutations, perm_index_profile,
                              perm_stat_totals)
from cfenum.setpartstats import (SetPartition, iter_set_partitions,
                                 sp_index_profile, sp_reverse)

FIG3 = Permutation([5, 6, 1, 4, 2, 7, 3])
PERM_BIJECTIONS = ("FZ", "Biane")
SP_BIJECTIONS = ("KZ", "Flajolet", "Hybrid3", "Hybrid4")


# ---------------------------------------------------------------------------
# Sized exhaustive checks, shared with the acceptance suite.

def check_round_trips(n_max):
    for n in range(n_max + 1):
        for sg in iter_permutations(n):
            for bj in PERM_BIJECTIONS:
                q = encode(sg, bj)
                assert path_validate(q, BIJECTION_PFS[bj])
                assert decode(q, bj) == sg
        for pp in iter_set_partitions(n):
            for bj in SP_BIJECTIONS:
                q = encode(pp, bj)
                assert path_validate(q, BIJECTION_PFS[bj])
                assert decode(q, bj) == pp


def check_fz_lemmas(n_max):
    for n in range(1, n_max + 1):
        for sg in iter_permutations(n):
            p = encode(sg, "FZ")
            h = p.heights()
            profs = perm_index_profile(sg)
            for i in range(1, n + 1):
                assert h[i - 1] == sum(
                    1 for j in range(1, i) if sg(j) >= i)
                assert h[i - 1] == sum(
                    1 for j in range(1, i) if sg.inverse_at(j) >= i)
                pr = profs[i - 1]
                xi = p.labels[i - 1][0]
                if pr.cycle_class == "cval":
                    assert h[i - 1] + 1 - xi == pr.ucross
                    assert xi - 1 == pr.unest
                elif pr.cycle_class == "cdrise":
                    assert h[i - 1] - xi == pr.ucross
                    assert xi - 1 == pr.unest
                elif pr.cycle_class in ("cpeak", "cdfall"):
                    assert h[i - 1] - xi == pr.lcross
                    assert xi - 1 == pr.lnest
            t = perm_stat_totals(sg, profs)
            inv = sum(h[i - 1] + p.labels[i - 1][0] - 1
                      for i in range(1, n + 1)) \
                + sum(h[i - 1] for i in range(1, n + 1)
                      if profs[i - 1].cycle_class == "fix")
            assert inv == t.inv
            # inverse permutation: same path with level colors 1,2 swapped
            p2 = encode(sg.inverse(), "FZ")
            for s1, s2 in zip(p.steps, p2.steps):
                if s1.kind == "L" and s1.color in (1, 2):
                    assert s2.kind == "L" and s2.color == 3 - s1.color
                else:
                    assert s1 == s2


def check_biane_lemmas(n_max):
    for n in range(1, n_max + 1):
        for sg in iter_permutations(n):
            p = encode(sg, "Biane")
            h = p.heights()
            profs = perm_index_profile(sg)
            for i in range(1, n + 1):
                pr = profs[i - 1]
                x1, x2 = p.labels[i - 1]
                if pr.cycle_class in ("cpeak", "cdfall"):
                    assert h[i - 1] - x2 == pr.lcross
                    assert x2 - 1 == pr.lnest
                if pr.cycle_class in ("cval", "cdrise"):
                    assert h[i] - 1 == pr.ucross + pr.unest
                if pr.cycle_class in ("cpeak", "cdrise"):
                    j = sg.inverse_at(i)
                    assert x1 - 1 == profs[j - 1].unest
                if pr.cycle_class == "fix":
                    assert h[i - 1] == h[i] == pr.lev
            t = perm_stat_totals(sg, profs)
            inv = sum(h[i - 1] + p.labels[i - 1][0] + p.labels[i - 1][1] - 2
                      for i in range(1, n + 1)) \
                + sum(h[i - 1] for i in range(1, n + 1)
                      if profs[i - 1].cycle_class == "fix")
            assert inv == t.inv


def check_biane_closer_lemma(n_max):
    # For each fall step at height k and each first label, exactly one
    # second label makes that index the maximum of its cycle.
    for n in range(1, n_max + 1):
        for sg in iter_permutations(n):
            p = encode(sg, "Biane")
            h = p.heights()
            for i in range(1, n + 1):
                if p.steps[i - 1].kind != "F":
                    continue
                k = h[i - 1]
                for x1 in range(1, k + 1):
                    closers = 0
                    for x2 in range(1, k + 1):
                        labels = list(p.labels)
                        labels[i - 1] = (x1, x2)
                        sg2 = decode(
                            LabeledMotzkinPath(p.steps, labels), "Biane")
                        j = sg2(i)
                        is_max = True
                        while j != i:
                            if j > i:
                                is_max = False
                            j = sg2(j)
                        closers += 1 if is_max else 0
                    assert closers == 1


def check_sp_label_lemmas(n_max):
    for n in range(1, n_max + 1):
        for pp in iter_set_partitions(n):
            rev = sp_reversed_index_stats(pp)
            profs = {pr.index: pr for pr in sp_index_profile(pp)}
            for bj in SP_BIJECTIONS:
                p = encode(pp, bj)
                h = p.heights()
                ins_mode, clo_mode = _SP_MODES[bj]
                for i in range(1, n + 1):
                    cls = profs[i].element_class
                    xi = p.labels[i - 1][0]
                    if cls in ("opener", "singleton"):
                        assert profs[i].qne == h[i - 1]
                    else:
                        mode = clo_mode if cls == "closer" else ins_mode
                        if mode == "last":
                            assert rev[i]["crt"] == h[i - 1] - xi
                            assert rev[i]["net"] == xi - 1
                        else:
                            assert rev[i]["ovt"] == h[i - 1] - xi
                            assert rev[i]["covt"] == xi - 1


def check_reversed_stats(n_max):
    for n in range(1, n_max + 1):
        for pp in iter_set_partitions(n):
            rev = sp_reversed_index_stats(pp)
            rprofs = {pr.index: pr
                      for pr in sp_index_profile(sp_reverse(pp))}
            profs = {pr.index: pr for pr in sp_index_profile(pp)}
            for k in range(1, n + 1):
                if profs[k].element_class not in ("insider", "closer"):
                    continue
                pr = rprofs[n + 1 - k]
                assert rev[k]["crt"] == pr.cr and rev[k]["net"] == pr.ne
                assert rev[k]["ovt"] == pr.ov and rev[k]["covt"] == pr.cov


# ---------------------------------------------------------------------------
# Unit tests.

def test_fz_example():
    p = encode(FIG3, "FZ")
    assert [(s.kind, s.color) for s in p.steps] == \
        [("R", 1), ("R", 1), ("L", 1), ("L", 3), ("F", 1), ("L", 2),
         ("F", 1)]
    assert list(p.heights()) == [0, 1, 2, 2, 2, 1, 1, 0]
    assert all(l == (1,) for l in p.labels)
    assert decode(p, "FZ") == FIG3
    assert path_validate(p, PF_FZ)


def test_empty_path():
    e = LabeledMotzkinPath([], [])
    assert path_validate(e, PF_FZ)
    assert decode(e, "FZ").n == 0
    assert decode(e, "KZ").n == 0


def test_kz_single_block():
    p = encode(SetPartition([(1, 2)]), "KZ")
    assert [(s.kind, s.color) for s in p.steps] == [("R", 1), ("F", 1)]
    assert p.labels == ((1,), (1,))


def test_invalid_path():
    bad = LabeledMotzkinPath([ColoredStep("F")], [1])
    assert not path_validate(bad, PF_FZ)
    with pytest.raises(InvalidPath):
        decode(bad, "FZ")


def test_type_mismatch():
    with pytest.raises(TypeMismatch):
        encode(FIG3, "KZ")
    with pytest.raises(TypeMismatch):
        encode(SetPartition([(1, 2)]), "FZ")


def test_round_trips_exhaustive():
    check_round_trips(5)


def test_fz_height_and_label_lemmas():
    check_fz_lemmas(6)


def test_biane_lemmas():
    check_biane_lemmas(6)


def test_biane_closer_lemma():
    check_biane_closer_lemma(5)


def test_sp_label_lemmas():
    check_sp_label_lemmas(6)


def test_reversed_stats_against_reversal_map():
    check_reversed_stats(6)


def test_weighted_path_sum_motzkin():
    pf = PossibilityFunction(lambda k: 1, lambda k: 1, (lambda k: 1,))
    unit = lambda kind, color, height, label: as_poly(1)
    assert weighted_path_sum(pf, unit, 0) == as_poly(1)
    assert weighted_path_sum(pf, unit, 4) == as_poly(9)


def test_weighted_path_sum_matches_master_enumeration():
    def fz_weights(kind, color, height, label):
        k, xi = height, label
        if kind == "R":
            return as_poly(Indeterminate("a", k + 1 - xi, xi - 1))
        if kind == "F":
            return as_poly(Indeterminate("b", k - xi, xi - 1))
        if color == 1:
            return as_poly(Indeterminate("c", k - xi, xi - 1))
        if color == 2:
            return as_poly(Indeterminate("d", k - xi, xi - 1))
        return as_poly(Indeterminate("e", k))

    for n in range(5):
        assert weighted_path_sum(PF_FZ, fz_weights, n) \
            == enumerate_perm_polynomial(n, weight="master1")


def test_json_round_trip():
    p = encode(FIG3, "Biane")
    assert path_from_json(path_to_json(p)) == p
    p = encode(SetPartition([(1, 3, 6), (2, 4, 5)]), "Hybrid3")
    assert path_from_json(path_to_json(p)) == p

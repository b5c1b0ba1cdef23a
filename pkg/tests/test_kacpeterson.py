"""Kac-Peterson matrices and the exterior-power equivalence."""

import math

import numpy as np
import pytest

from cycfusion.fusion import verlinde
from cycfusion.kacpeterson import (
    CWeight,
    equiv_check,
    kp_a1,
    kp_cl,
    weights_cl,
)
from cycfusion.smatrix import orthogonality_check


@pytest.mark.parametrize("k", range(1, 7))
def test_a1_true_entries_are_sines(k):
    M = kp_a1(k)
    L = math.lcm(M.field_conductor, 24, 2 * M.base, 4)
    for i in range(k + 1):
        for j in range(k + 1):
            got = complex(M.true_entry(i, j, L).embed(80))
            want = math.sqrt(2 / (k + 2)) * math.sin(
                math.pi * (i + 1) * (j + 1) / (k + 2)
            )
            assert abs(got - want) < 1e-12


@pytest.mark.parametrize("k", range(1, 9))
def test_a1_unitary(k):
    assert orthogonality_check(kp_a1(k)).ok


@pytest.mark.parametrize("k", range(1, 7))
def test_a1_fusion_nonnegative(k):
    rep = verlinde(kp_a1(k), 0)
    assert rep.all_integer
    assert not rep.ring.has_negative()
    # level-k truncated Clebsch-Gordan: b_1 * b_1 = b_0 + b_2 (k >= 2)
    if k >= 2:
        row = rep.ring.tensor[1, 1]
        assert row[0] == 1 and row[2] == 1 and row.sum() == 2


def test_weights_counts_and_tilde():
    for l in (2, 3, 4):
        for k in (1, 2, 3):
            wts = weights_cl(l, k)
            assert len(wts) == math.comb(k + l, l)
            for wt in wts:
                assert all(
                    wt.tilde[i] < wt.tilde[i + 1] for i in range(l - 1)
                )
                assert wt == CWeight.from_lambda(wt.lam)
    assert [wt.tilde for wt in weights_cl(2, 1)] == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("l,k", [(2, 1), (2, 2), (3, 1)])
def test_cl_symmetric_and_unitary(l, k):
    M = kp_cl(l, k)
    for i in range(M.size):
        for j in range(i):
            assert M.entries[i][j] == M.entries[j][i]
    assert orthogonality_check(M).ok


def test_cl_fusion_nonnegative():
    for k in (1, 2):
        M = kp_cl(2, k)
        rep = verlinde(M, M.labels[0])
        assert rep.all_integer
        assert not rep.ring.has_negative()


@pytest.mark.parametrize("l,k", [(2, 1), (2, 2), (3, 1)])
def test_equiv_check(l, k):
    rep = equiv_check(l, k)
    assert rep.ok
    assert rep.labels_match
    assert rep.tensors_match
    # the proportionality constant is unimodular
    r = rep.ratio
    from cycfusion.cyclo import CycNum

    assert r * r.conj() == CycNum.rational(1).lift(r.conductor)

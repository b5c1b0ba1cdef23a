"""T-matrices, SL2(Z) relations and the Gauss-sum identity."""

import math

import pytest

from cycfusion.cyclo import CycNum, cyc_root
from cycfusion.modular import (
    ModularDatum,
    exterior_t,
    gauss_sum_identity,
    sl2z_check,
    t_matrix_cyclic,
)
from cycfusion.smatrix import dft_smatrix, exterior_dft


def test_t_entries_are_roots_of_unity():
    for e in range(1, 9):
        for t in t_matrix_cyclic(e):
            assert t * t.conj() == CycNum.rational(1).lift(t.conductor)


@pytest.mark.parametrize("e", range(1, 9))
def test_t_periodicity(e):
    # the defining formula at index i and i+e agree, so the diagonal
    # only depends on i mod e
    L = math.lcm(24, 2 * e)
    front = cyc_root(24, e - 1).lift(L)

    def formula(i):
        return front * cyc_root(2 * e, (i * i + e * i) % (2 * e)).lift(L)

    T = t_matrix_cyclic(e)
    for i in range(e):
        assert T[i] == formula(i) == formula(i + e)


def test_exterior_t_is_product():
    T = t_matrix_cyclic(4)
    Te = exterior_t(T, 4, 2)
    assert Te[0] == T[0] * T[1]  # label (0,1)
    assert len(Te) == 6


@pytest.mark.parametrize("e", range(1, 10))
def test_sl2z_cyclic(e):
    D = ModularDatum(S=dft_smatrix(e), T=t_matrix_cyclic(e))
    rep = sl2z_check(D)
    assert rep.ok, rep.failed


@pytest.mark.parametrize("e,n", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_sl2z_exterior(e, n):
    T = t_matrix_cyclic(e)
    D = ModularDatum(S=exterior_dft(e, n), T=exterior_t(T, e, n))
    rep = sl2z_check(D)
    assert rep.ok, rep.failed


def test_sl2z_detects_corrupted_t():
    e = 5
    T = list(t_matrix_cyclic(e))
    T[2] = -T[2]
    rep = sl2z_check(ModularDatum(S=dft_smatrix(e), T=tuple(T)))
    assert not rep.ok
    assert "(ST)^3 = 1" in rep.failed


@pytest.mark.parametrize("e", range(1, 25))
def test_gauss_sum_identity(e):
    rep = gauss_sum_identity(e)
    assert rep.sum_matches_root
    assert rep.square_identity
    assert rep.embedding_positive


def test_modular_datum_round_trip():
    e = 4
    D = ModularDatum(S=dft_smatrix(e), T=t_matrix_cyclic(e))
    again = ModularDatum.from_json(D.to_json())
    assert again.S.entries == D.S.entries
    assert again.T == D.T
    assert sl2z_check(again).ok

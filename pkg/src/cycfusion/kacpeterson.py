"""Kac-Peterson S-matrices of affine types A1 and C_l and the exact
equivalence of the C_l matrix with an exterior power of the A1 one."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .combin import perm_sign, signed_permutations, tuples
from .cyclo import CycNum, cyc_root, i_power
from .errors import ParameterError
from .smatrix import ScaledMatrix, exterior_power


def kp_a1(k: int) -> ScaledMatrix:
    """Type A1 level-k S-matrix: (k+1) x (k+1), true entries
    sqrt(2/(k+2)) * sin(pi (i+1)(j+1) / (k+2)).

    Stored with base 2(k+2) and entries zeta^((i+1)(j+1)) -
    zeta^(-(i+1)(j+1)), zeta = zeta_{2(k+2)}; the difference is 2i times
    the sine, so the unimodular remainder is -i.
    """
    if k < 1:
        raise ParameterError(f"level must be >= 1, got {k}")
    kappa = k + 2
    L = 2 * kappa
    entries = tuple(
        tuple(
            cyc_root(L, ((i + 1) * (j + 1)) % L)
            - cyc_root(L, (-(i + 1) * (j + 1)) % L)
            for j in range(k + 1)
        )
        for i in range(k + 1)
    )
    return ScaledMatrix(
        labels=tuple(range(k + 1)),
        entries=entries,
        base=L,
        scale_exp=1,
        extra_scalar=i_power(3),
    )


@dataclass(frozen=True, order=True)
class CWeight:
    """A level-k dominant weight of C_l as lambda = (lambda_1..lambda_l)
    with nonnegative entries summing to at most k, together with the
    rho-shifted partial-sum coordinates used by the S-matrix."""

    tilde: tuple
    lam: tuple

    @staticmethod
    def from_lambda(lam: tuple) -> "CWeight":
        tilde = []
        acc = 0
        for v in lam:
            acc += v + 1
            tilde.append(acc)
        return CWeight(tilde=tuple(tilde), lam=tuple(lam))


def weights_cl(l: int, k: int) -> list:
    """All C(k+l, l) level-k weights of C_l, ordered lexicographically
    by tilde tuple."""
    if l < 2 or k < 1:
        raise ParameterError(f"need rank >= 2 and level >= 1, got l={l}, k={k}")
    out = []
    for lam in itertools.product(range(k + 1), repeat=l):
        if sum(lam) <= k:
            out.append(CWeight.from_lambda(lam))
    out.sort(key=lambda wt: wt.tilde)
    return out


def kp_cl(l: int, k: int) -> ScaledMatrix:
    """Type C_l level-k S-matrix over weights_cl(l, k):

        entries = sum over the Weyl group (signed permutations) of
        sign(w) * zeta^(sum_i f_i mu~_i nu~_{sigma(i)}),  zeta = zeta_{2 kappa}

    with kappa = k+l+1.  This equals the determinant of the difference
    matrix (zeta^(mu~_i nu~_j) - zeta^(-mu~_i nu~_j)), so the scale
    bookkeeping matches the l-th exterior power of the A1 matrix:
    base 2 kappa, scale_exp l, unimodular remainder (-i)^l.
    """
    wts = weights_cl(l, k)
    kappa = k + l + 1
    L = 2 * kappa
    if any(wt.tilde[-1] > k + l for wt in wts):
        raise ParameterError("tilde coordinate out of range")  # pragma: no cover
    entries = []
    for w1 in wts:
        row = []
        for w2 in wts:
            vec = [0] * L
            for sp in signed_permutations(l):
                exp = sum(
                    f * w1.tilde[i] * w2.tilde[sp.perm[i] - 1]
                    for i, f in enumerate(sp.signs)
                )
                vec[exp % L] += sp.sign
            row.append(CycNum.from_vector(L, vec))
        entries.append(tuple(row))
    return ScaledMatrix(
        labels=tuple(wts),
        entries=tuple(entries),
        base=L,
        scale_exp=l,
        extra_scalar=i_power(3 * l),
    )


@dataclass
class EquivReport:
    ok: bool
    ratio: CycNum | None  # single unimodular constant with M_cl = ratio * Lambda^l M_a1
    labels_match: bool
    tensors_match: bool | None


def equiv_check(l: int, k: int, compare_tensors: bool = True) -> EquivReport:
    """Entrywise comparison of kp_cl(l, k) with the l-th exterior power
    of kp_a1(k + l - 1), labels matched through tilde coordinates
    (exterior position tuples shifted by one)."""
    Mc = kp_cl(l, k)
    Ma = kp_a1(k + l - 1)
    Me = exterior_power(Ma, l)
    if Mc.size != Me.size:
        raise ParameterError(
            f"dimension mismatch: {Mc.size} weights vs {Me.size} tuples"
        )
    labels_match = all(
        wt.tilde == tuple(v + 1 for v in lab)
        for wt, lab in zip(Mc.labels, Me.labels)
    )
    ratio = None
    ok = labels_match and Mc.base == Me.base and Mc.scale_exp == Me.scale_exp
    if ok:
        B = Mc.size
        for i in range(B):
            for j in range(B):
                if ratio is None and not Me.entries[i][j].is_zero():
                    ratio = Mc.entries[i][j] * Me.entries[i][j].inverse()
        if ratio is None:
            ok = False
        else:
            for i in range(B):
                for j in range(B):
                    if Mc.entries[i][j] != ratio * Me.entries[i][j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok and ratio * ratio.conj() != CycNum.rational(1).lift(ratio.conductor):
                ok = False
    tensors_match = None
    if ok and compare_tensors:
        from .fusion import verlinde

        t1 = verlinde(Mc, Mc.labels[0]).ring.tensor
        t2 = verlinde(Me, tuple(range(l))).ring.tensor
        tensors_match = bool(np.array_equal(t1, t2))
        ok = ok and tensors_match
    return EquivReport(
        ok=ok, ratio=ratio, labels_match=labels_match, tensors_match=tensors_match
    )

"""Acceptance gate: the eleven headline verification criteria, one
pass/fail line each.

Every criterion is computed in exact cyclotomic arithmetic; the only
floating-point tolerance appears in criterion 11, where the exact
integers are cross-checked against an independent 128-bit numeric
evaluation (|delta| < 1e-6 after rounding).
"""

import itertools
import math
import time

import numpy as np
import pytest

from cycfusion.combin import partition_of, ssyt_weights, schur_eval, tuples
from cycfusion.cyclo import CycNum, cyc_root
from cycfusion.fusion import (
    based_ring_axioms,
    float_verlinde,
    integrality_check,
    neg_scan,
    nonneg_sign_search,
    normalize_signs,
    verlinde,
)
from cycfusion.kacpeterson import equiv_check, kp_a1, kp_cl
from cycfusion.modular import (
    ModularDatum,
    exterior_t,
    gauss_sum_identity,
    sl2z_check,
    t_matrix_cyclic,
)
from cycfusion.smatrix import (
    dft_smatrix,
    exterior_dft,
    fourier_block,
    orthogonality_check,
    p_det,
    symbols_E_prime,
    unit_symbol,
)


def report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num} failed: {detail}"


def compositions(total: int, max_part: int):
    """All ordered compositions of `total` with parts in 1..max_part."""
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, max_part) + 1):
        for rest in compositions(total - first, max_part):
            yield (first,) + rest


FOURIER_PARAMS = [
    (e, 1, mult)
    for e in (2, 3, 4)
    for mult in compositions(e + 1, e)
]


@pytest.fixture(scope="module")
def fourier_rings():
    """verlinde over every normalized Fourier block in the shared
    (e <= 4, m = 1) range; reused by criteria 4, 6 and 7."""
    out = {}
    for e, m, mult in FOURIER_PARAMS:
        M = fourier_block(e, m, mult)
        unit = unit_symbol(e, m, mult)
        norm = normalize_signs(M, unit)
        rep = verlinde(norm.matrix, unit)
        out[(e, m, mult)] = (M, rep)
    return out


# expected multiplication table for the second exterior power at e=4,
# basis in lexicographic order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3),
# transcribed from the published example
EXPECTED_E4_N2 = [
    np.eye(6, dtype=np.int64),
    np.array([
        [0, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 0], [-1, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 0],
    ]),
    np.array([
        [0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1],
        [-1, 0, 0, 0, 0, 0], [0, -1, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0],
    ]),
    np.array([
        [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [-1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 0], [0, 0, -1, 0, 0, 0],
    ]),
    np.array([
        [0, 0, 0, 0, 1, 0], [-1, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0], [0, 0, -1, -1, 0, 0], [0, 0, 0, 0, -1, 0],
    ]),
    np.array([
        [0, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0],
        [0, 0, -1, 0, 0, 0], [0, 0, 0, 0, -1, 0], [1, 0, 0, 0, 0, 0],
    ]),
]


def test_criterion_01_table_reproduction():
    t0 = time.perf_counter()
    rep = verlinde(exterior_dft(4, 2), (0, 1))
    dt = time.perf_counter() - t0
    ok = rep.all_integer and all(
        np.array_equal(rep.ring.tensor[i], EXPECTED_E4_N2[i]) for i in range(6)
    )
    report(
        1,
        ok and dt < 1.0,
        f"e=4 n=2 multiplication table reproduced verbatim in "
        f"lexicographic basis order ({dt:.3f}s)",
    )


def test_criterion_02_integrality():
    t0 = time.perf_counter()
    summary = integrality_check(range(2, 9))
    dt = time.perf_counter() - t0
    bad = sum(len(r.violations) for r in summary.rows)
    report(
        2,
        summary.ok and bad == 0 and dt < 300,
        f"{len(summary.rows)} rings over 2<=e<=8, 1<=n<=e, "
        f"{bad} non-integer constants ({dt:.1f}s)",
    )


def test_criterion_03_negative_classification():
    t0 = time.perf_counter()
    result = neg_scan(50)
    dt = time.perf_counter() - t0
    report(
        3,
        result.matches_predicate and dt < 600,
        f"{len(result.rows)} cases with C(e,n)<=50: has_negative iff "
        f"(e even, n even, 1<n<e) ({dt:.1f}s)",
    )


def test_criterion_04_sign_normalization(fourier_rings):
    t0 = time.perf_counter()
    checked = 0
    ok = True
    for e in range(2, 9):
        for n in range(1, e + 1):
            M = exterior_dft(e, n)
            unit = tuple(range(n)) if n > 1 else 0
            norm = normalize_signs(M, unit)
            rep = verlinde(norm.matrix, unit)
            ok = ok and rep.all_integer and based_ring_axioms(rep.ring).ok
            checked += 1
    for key, (M, rep) in fourier_rings.items():
        ok = ok and rep.all_integer and based_ring_axioms(rep.ring).ok
        checked += 1
    dt = time.perf_counter() - t0
    report(
        4,
        ok,
        f"normalization + all based-ring axioms on {checked} matrices "
        f"(exterior 2<=e<=8 and {len(fourier_rings)} Fourier blocks) "
        f"({dt:.1f}s)",
    )


def test_criterion_05_nonnegativity_impossible():
    t0 = time.perf_counter()
    ring = verlinde(exterior_dft(4, 2), (0, 1)).ring
    ex = nonneg_sign_search(ring, "exhaustive")
    sm = nonneg_sign_search(ring, "s-matrix")
    dt = time.perf_counter() - t0
    report(
        5,
        ex is None and sm is None and dt < 1.0,
        f"e=4 n=2: all 2^6 sign vectors leave a negative constant; "
        f"s-matrix strategy agrees ({dt:.3f}s)",
    )


def test_criterion_06_fourier_orthogonality(fourier_rings):
    t0 = time.perf_counter()
    ok = all(
        orthogonality_check(M).ok for (M, rep) in fourier_rings.values()
    )
    dt = time.perf_counter() - t0
    report(
        6,
        ok,
        f"T' conj(T')^t = I exactly for all {len(fourier_rings)} "
        f"Fourier blocks, e<=4, m=1 ({dt:.1f}s)",
    )


def test_criterion_07_fourier_integrality(fourier_rings):
    bad = sum(len(rep.violations) for (M, rep) in fourier_rings.values())
    ok = all(rep.all_integer for (M, rep) in fourier_rings.values())
    report(
        7,
        ok and bad == 0,
        f"all structure constants integral for {len(fourier_rings)} "
        f"Fourier blocks ({bad} violations)",
    )


def test_criterion_08_modular_data():
    t0 = time.perf_counter()
    ok = True
    for e in range(1, 13):
        D = ModularDatum(S=dft_smatrix(e), T=t_matrix_cyclic(e))
        ok = ok and sl2z_check(D).ok
    for e in range(2, 7):
        T = t_matrix_cyclic(e)
        for n in range(1, e + 1):
            D = ModularDatum(S=exterior_dft(e, n), T=exterior_t(T, e, n))
            ok = ok and sl2z_check(D).ok
    gauss = all(gauss_sum_identity(e).ok for e in range(1, 25))
    dt = time.perf_counter() - t0
    report(
        8,
        ok and gauss,
        f"S^4=1, (ST)^3=1, [S^2,T]=1 for cyclic e<=12 and exterior "
        f"e<=6; Gauss-sum identity for e<=24 ({dt:.1f}s)",
    )


def test_criterion_09_kac_peterson():
    t0 = time.perf_counter()
    pairs = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
    equiv_ok = True
    for l, k in pairs:
        rep = equiv_check(l, k)
        equiv_ok = equiv_ok and rep.ok and rep.tensors_match
    nonneg_ok = True
    for k in range(1, 7):
        r = verlinde(kp_a1(k), 0)
        nonneg_ok = nonneg_ok and r.all_integer and not r.ring.has_negative()
    for k in (1, 2):
        M = kp_cl(2, k)
        r = verlinde(M, M.labels[0])
        nonneg_ok = nonneg_ok and r.all_integer and not r.ring.has_negative()
    dt = time.perf_counter() - t0
    report(
        9,
        equiv_ok and nonneg_ok and dt < 300,
        f"C_l = exterior power of A1 for {pairs}, identical fusion "
        f"tensors; nonnegative integer constants for A1 levels<=6 and "
        f"C2 levels<=2 ({dt:.1f}s)",
    )


def test_criterion_10_schur_bridge():
    t0 = time.perf_counter()
    ok = True
    partitions = set()
    for e in range(2, 8):
        for n in range(1, min(4, e) + 1):
            labels = tuples(e, n)
            roots = {j: cyc_root(e, j) for j in range(e)}
            for ibar in labels:
                lam = partition_of(ibar)
                partitions.add((lam, n))
                for jbar in labels:
                    xs = [roots[j] for j in jbar]
                    van = CycNum.rational(1).lift(e)
                    for a in range(n):
                        for b in range(a + 1, n):
                            van = van * (xs[b] - xs[a])
                    if schur_eval(lam, xs) * van != p_det(ibar, jbar, e):
                        ok = False
    # weight-count symmetry of the tableau counts for every partition
    # that occurred
    for lam, n in partitions:
        w = ssyt_weights(lam, n)
        for mu, count in w.items():
            for perm in set(itertools.permutations(mu)):
                if w.get(perm, 0) != count:
                    ok = False
    dt = time.perf_counter() - t0
    report(
        10,
        ok,
        f"schur * Vandermonde = minor determinant for all labels, "
        f"e<=7, n<=4; tableau weight counts symmetric for "
        f"{len(partitions)} (partition, n) pairs ({dt:.1f}s)",
    )


def test_criterion_11_float_oracle():
    t0 = time.perf_counter()
    cases = [
        (dft_smatrix(5), 0),
        (exterior_dft(4, 2), (0, 1)),
        (exterior_dft(5, 2), (0, 1)),
        (fourier_block(3, 1, (2, 1, 1)), unit_symbol(3, 1, (2, 1, 1))),
        (kp_a1(4), 0),
        (kp_cl(2, 2), kp_cl(2, 2).labels[0]),
    ]
    rng = np.random.default_rng(2026)
    max_delta = 0.0
    ok = True
    for M, unit in cases:
        ring = verlinde(M, unit).ring
        triples = [
            tuple(int(x) for x in rng.integers(0, ring.size, 3))
            for _ in range(200)
        ]
        approx = float_verlinde(M, unit, triples, bits=128)
        for (i, j, l), val in zip(triples, approx):
            delta = abs(complex(val) - ring.tensor[i, j, l])
            max_delta = max(max_delta, delta)
            ok = ok and delta < 1e-6
    dt = time.perf_counter() - t0
    report(
        11,
        ok,
        f"exact constants match the 128-bit numeric evaluation on 200 "
        f"random triples per matrix, {len(cases)} matrices, "
        f"max |delta| = {max_delta:.2e} ({dt:.1f}s)",
    )

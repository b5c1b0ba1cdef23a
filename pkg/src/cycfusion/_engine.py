"""Exact integer engine for bulk cyclotomic linear algebra.

Matrices with entries in Z[zeta_L] are stored as integer coefficient
arrays of shape (B, B, L) over the exponent basis zeta_L^0..zeta_L^(L-1)
(non-canonical, mod x^L - 1).  Products become cyclic convolutions,
which are evaluated with float64 BLAS; every call certifies a priori
that all intermediate values stay below 2^53, so the floating point
arithmetic is exact integer arithmetic.  Results are reduced mod Phi_L
back to canonical coordinates.

Raises EngineOverflowError when exactness cannot be certified; callers
fall back to the pure CycNum path.
"""

from __future__ import annotations

import numpy as np

from .cyclo import CycNum, _power_table, euler_phi
from .errors import EngineOverflowError

_MAX_EXACT = 2.0**53


def reduction_matrix(L: int) -> np.ndarray:
    """(L, phi(L)) integer matrix sending exponent-basis coordinates to
    canonical power-basis coordinates mod Phi_L."""
    phi = euler_phi(L)
    table = _power_table(L)
    R = np.zeros((L, phi), dtype=np.int64)
    for j in range(L):
        R[j, :] = table[j]
    return R


def rep_of(x: CycNum, L: int) -> np.ndarray | None:
    """Length-L integer vector representing x in Z[zeta_L], or None if x
    has non-integer coordinates or an incompatible conductor."""
    if L % x.conductor:
        return None
    step = L // x.conductor
    vec = np.zeros(L, dtype=np.int64)
    for t, c in enumerate(x.coeffs):
        if c.denominator != 1:
            return None
        vec[t * step] = c.numerator
    return vec


def rep_of_matrix(entries, L: int) -> np.ndarray | None:
    """(B, B, L) integer representation of a square CycNum matrix."""
    B = len(entries)
    A = np.zeros((B, B, L), dtype=np.int64)
    for i in range(B):
        for j in range(B):
            v = rep_of(entries[i][j], L)
            if v is None:
                return None
            A[i, j] = v
    return A


def cyc_of(vec: np.ndarray, L: int) -> CycNum:
    return CycNum.from_vector(L, [int(c) for c in vec])


def conj_rep(A: np.ndarray) -> np.ndarray:
    """zeta -> zeta^(-1) on the exponent basis: index reversal."""
    L = A.shape[-1]
    idx = (-np.arange(L)) % L
    return A[..., idx]


def _shift_index(L: int) -> np.ndarray:
    # sh[a, c] = (c - a) mod L, so that X[..., sh] gives the circulant
    # gather used to turn cyclic convolution into a matrix product.
    c = np.arange(L)
    return (c[None, :] - c[:, None]) % L


def reduce_rep(A: np.ndarray, L: int) -> np.ndarray:
    """Map (..., L) exponent coordinates to (..., phi(L)) canonical
    coordinates, exactly (int64 with overflow check)."""
    R = reduction_matrix(L)
    bound = float(L) * float(np.abs(A).max(initial=0)) * float(np.abs(R).max(initial=1))
    if bound >= float(2**62):
        raise EngineOverflowError("reduction would overflow int64")
    return A.astype(np.int64) @ R


def canonical_key(vec: np.ndarray, L: int) -> bytes:
    return reduce_rep(vec, L).tobytes()


def _check(bound: float, what: str):
    if bound >= _MAX_EXACT:
        raise EngineOverflowError(f"{what}: bound {bound:.3e} >= 2^53")


def verlinde_tensor(A: np.ndarray, D: np.ndarray, base: int, p: int):
    """Exact Verlinde tensor from integer representations.

    A[k, i] is the entry matrix, D[k, j] = A[k, j] / A[k, unit] (integer
    coordinates), both in Z[zeta_L].  Computes

        base^p * N[i, j, l] = sum_k A[k,i] * D[k,j] * conj(A[k,l])

    and extracts the integer tensor N.  Returns (N, bad) where bad lists
    (i, j, l) triples whose value is not an integer (N holds 0 there).
    """
    B, _, L = A.shape
    phi = euler_phi(L)
    R = reduction_matrix(L).astype(np.float64)
    sh = _shift_index(L)
    Af = A.astype(np.float64)
    Df = D.astype(np.float64)
    Aconf = conj_rep(A).astype(np.float64)

    maxA = float(np.abs(Af).max(initial=0))
    maxD = float(np.abs(Df).max(initial=0))
    _check(L * maxA * maxD, "pairwise product")

    # Ash2[(k,a), (l,c)] = conj(A)[k, l, (c-a) % L]
    Ash2 = Aconf[:, :, sh].transpose(0, 2, 1, 3).reshape(B * L, B * L)
    Dsh = Df[:, :, sh]  # (k, j, a, c)

    divisor = float(base) ** p
    maxR = float(np.abs(R).max(initial=1))
    N = np.zeros((B, B, B), dtype=np.int64)
    bad: list[tuple[int, int, int]] = []
    for j in range(B):
        T1 = np.einsum("kia,kac->kic", Af, Dsh[:, j])
        maxT1 = float(np.abs(T1).max(initial=0))
        _check(B * L * maxT1 * maxA, "triple accumulation")
        out = T1.transpose(1, 0, 2).reshape(B, B * L) @ Ash2  # (i, (l, c))
        out = out.reshape(B, B, L)
        _check(L * float(np.abs(out).max(initial=0)) * maxR, "reduction")
        W = out @ R  # (i, l, phi)
        tail_bad = np.abs(W[:, :, 1:]).max(axis=2) != 0 if phi > 1 else np.zeros((B, B), bool)
        quotient = W[:, :, 0] / divisor
        rounded = np.rint(quotient)
        div_bad = W[:, :, 0] != rounded * divisor
        bad_mask = tail_bad | div_bad
        if bad_mask.any():
            for i, l in zip(*np.nonzero(bad_mask)):
                bad.append((int(i), j, int(l)))
        N[:, j, :] = np.where(bad_mask, 0, rounded).astype(np.int64)
    return N, bad


def gram_reduced(A: np.ndarray, L: int) -> np.ndarray:
    """Canonical coordinates of G[i, j] = sum_k A[i,k] * conj(A[j,k])
    (the row Gram matrix over Z[zeta_L])."""
    B = A.shape[0]
    sh = _shift_index(L)
    Af = A.astype(np.float64)
    Aconf = conj_rep(A).astype(np.float64)
    maxA = float(np.abs(Af).max(initial=0))
    _check(B * L * L * maxA * maxA, "gram accumulation")
    Esh = Aconf[:, :, sh]  # (j, k, a, c)
    G = np.einsum("ika,jkac->ijc", Af, Esh)
    return reduce_rep(G.astype(np.int64), L)


def matmul_rep(A: np.ndarray, Bm: np.ndarray) -> np.ndarray:
    """Matrix product over Z[zeta_L] in exponent coordinates."""
    B, _, L = A.shape
    sh = _shift_index(L)
    Af = A.astype(np.float64)
    Bf = Bm.astype(np.float64)
    maxv = B * L * float(np.abs(Af).max(initial=0)) * float(np.abs(Bf).max(initial=0))
    _check(maxv, "matmul accumulation")
    Bsh = Bf[:, :, sh]  # (k, j, a, c)
    C = np.einsum("ika,kjac->ijc", Af, Bsh)
    return np.rint(C).astype(np.int64)


def scalar_mul_rep(A: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Entrywise product with a single Z[zeta_L] scalar."""
    L = A.shape[-1]
    sh = _shift_index(L)
    Af = A.astype(np.float64)
    sf = s.astype(np.float64)
    _check(L * float(np.abs(Af).max(initial=0)) * float(np.abs(sf).max(initial=1)),
           "scalar product")
    out = np.einsum("...a,ac->...c", Af, sf[sh])
    return np.rint(out).astype(np.int64)


def monomial_shift(A: np.ndarray, exps: np.ndarray) -> np.ndarray:
    """Multiply row k of A by zeta_L^exps[k] (exponent-basis rotation)."""
    B, _, L = A.shape
    out = np.zeros_like(A)
    for k in range(B):
        out[k] = np.roll(A[k], int(exps[k]) % L, axis=-1)
    return out

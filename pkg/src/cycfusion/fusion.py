"""Fusion structure constants: exact Verlinde tensors, the Z-based-ring
axioms, sign normalization of exterior powers and Fourier blocks, and
surveys over parameter ranges."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _engine
from .combin import SymbolRep, perm_sign
from .cyclo import CycNum, ZETA4, cyc_root
from .errors import (
    EngineOverflowError,
    NormalizationError,
    ParameterError,
    StrategyError,
    UnitColumnError,
)
from .smatrix import ScaledMatrix, _label_json, _label_from_json, exterior_dft


@dataclass
class FusionRing:
    """Structure constants N[i, j, l] of a commutative ring with a
    distinguished basis, stored densely as an integer tensor."""

    labels: tuple
    unit: int
    tensor: np.ndarray
    involution: tuple | None = None
    signs: tuple | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    def has_negative(self) -> bool:
        return bool((self.tensor < 0).any())

    def apply_signs(self, signs) -> "FusionRing":
        """Basis change b_i -> s_i b_i: N picks up the product of the
        three signs."""
        s = np.asarray(signs, dtype=np.int64)
        if s.shape != (self.size,) or not np.all(np.abs(s) == 1):
            raise ParameterError("signs must be a +-1 vector of basis length")
        N = self.tensor * s[:, None, None] * s[None, :, None] * s[None, None, :]
        return FusionRing(
            labels=self.labels,
            unit=self.unit,
            tensor=N,
            involution=self.involution,
            signs=tuple(int(x) for x in s),
        )

    def involution_candidate(self) -> tuple | None:
        """The only possible involution: ~i is the unique l with
        N[i, l, unit] != 0 (and that value must be +-1)."""
        B, u = self.size, self.unit
        out = []
        for i in range(B):
            nz = np.nonzero(self.tensor[i, :, u])[0]
            if len(nz) != 1 or abs(int(self.tensor[i, nz[0], u])) != 1:
                return None
            out.append(int(nz[0]))
        perm = tuple(out)
        if any(perm[perm[i]] != i for i in range(B)):
            return None
        return perm

    def to_json(self) -> dict:
        nz = np.nonzero(self.tensor)
        entries = sorted(
            [int(i), int(j), int(k), int(self.tensor[i, j, k])]
            for i, j, k in zip(*nz)
        )
        return {
            "labels": [_label_json(lab) for lab in self.labels],
            "unit": self.unit,
            "involution": list(self.involution) if self.involution else None,
            "signs": list(self.signs) if self.signs else None,
            "tensor": entries,
        }

    @staticmethod
    def from_json(data: dict) -> "FusionRing":
        labels = tuple(_label_from_json(lab) for lab in data["labels"])
        B = len(labels)
        N = np.zeros((B, B, B), dtype=np.int64)
        for i, j, k, v in data["tensor"]:
            N[i, j, k] = v
        inv = data.get("involution")
        sg = data.get("signs")
        return FusionRing(
            labels=labels,
            unit=data["unit"],
            tensor=N,
            involution=tuple(inv) if inv else None,
            signs=tuple(sg) if sg else None,
        )


@dataclass
class VerlindeReport:
    ring: FusionRing
    all_integer: bool
    violations: list  # (i, j, l, exact CycNum value)


def _unit_index(M: ScaledMatrix, unit) -> int:
    if isinstance(unit, int) and not isinstance(unit, bool):
        if unit in M._label_index and M._label_index[unit] != unit:
            # integer labels indexing themselves is the only ambiguity
            # we allow; anything else must be passed as a label
            raise ParameterError(f"ambiguous integer unit {unit}")
        if 0 <= unit < M.size:
            return unit
        raise ParameterError(f"unit index {unit} out of range")
    return M.index_of(unit)


def _exact_triple(M: ScaledMatrix, D, u: int, i: int, j: int, l: int) -> CycNum:
    """One Verlinde value by direct CycNum summation (reference path)."""
    acc = CycNum.rational(0)
    for k in range(M.size):
        acc = acc + M.entries[k][i] * D[k][j] * M.entries[k][l].conj()
    return acc * CycNum.rational(Fraction(1, M.base**M.scale_exp))


def verlinde(M: ScaledMatrix, unit) -> VerlindeReport:
    """Exact structure constants N[i,j,l] = sum_k S_ki S_kj conj(S_kl) / S_k,unit.

    The scale and the unimodular extra_scalar cancel, leaving
    base^(-scale_exp) * sum_k E_ki D_kj conj(E_kl) with D the row-wise
    unit-column quotient.  Fast integer path when all data embeds into
    Z[zeta_L]; exact CycNum fallback otherwise.
    """
    B = M.size
    u = _unit_index(M, unit)
    col = [M.entries[k][u] for k in range(B)]
    for k, x in enumerate(col):
        if x.is_zero():
            raise UnitColumnError(f"zero entry in unit column at row {k}")
    inv = [x.inverse() for x in col]
    D = [[M.entries[k][j] * inv[k] for j in range(B)] for k in range(B)]
    L = M.field_conductor
    A = M.rep(L)
    Drep = _engine.rep_of_matrix(D, L) if A is not None else None
    violations: list = []
    N = None
    if A is not None and Drep is not None:
        try:
            N, bad = _engine.verlinde_tensor(A, Drep, M.base, M.scale_exp)
            for (i, j, l) in bad:
                violations.append((i, j, l, _exact_triple(M, D, u, i, j, l)))
        except EngineOverflowError:
            N = None
    if N is None:
        N = np.zeros((B, B, B), dtype=np.int64)
        violations = []
        conj_rows = [[x.conj() for x in row] for row in M.entries]
        scale = CycNum.rational(Fraction(1, M.base**M.scale_exp))
        for i in range(B):
            for j in range(B):
                for l in range(B):
                    acc = CycNum.rational(0)
                    for k in range(B):
                        acc = acc + M.entries[k][i] * D[k][j] * conj_rows[k][l]
                    val = acc * scale
                    if val.is_integer():
                        N[i, j, l] = val.as_int()
                    else:
                        violations.append((i, j, l, val))
    ring = FusionRing(labels=M.labels, unit=u, tensor=N)
    return VerlindeReport(ring=ring, all_integer=not violations, violations=violations)


@dataclass
class SMatrixData:
    s: ScaledMatrix
    d: list  # diagonal of s * conj(s)^t, one CycNum per row


def s_matrix_of(M: ScaledMatrix, unit) -> SMatrixData:
    """Rows divided by the unit-column entry, so column `unit` is all
    ones; also returns the diagonal d = s conj(s)^t used to renormalize
    back to a unitary matrix."""
    B = M.size
    u = _unit_index(M, unit)
    col = [M.entries[k][u] for k in range(B)]
    for k, x in enumerate(col):
        if x.is_zero():
            raise UnitColumnError(f"zero entry in unit column at row {k}")
    inv = [x.inverse() for x in col]
    entries = tuple(
        tuple(M.entries[k][j] * inv[k] for j in range(B)) for k in range(B)
    )
    d = []
    for k in range(B):
        acc = CycNum.rational(0)
        for j in range(B):
            acc = acc + entries[k][j] * entries[k][j].conj()
        d.append(acc)
    s = ScaledMatrix(labels=M.labels, entries=entries, base=M.base, scale_exp=0)
    return SMatrixData(s=s, d=d)


# -- conjugation and involution --------------------------------------------


@dataclass
class ConjugationReport:
    permutation: tuple | None
    sign_matches: list  # (j, l) with conj(col_j) == -col_l
    unmatched: list  # columns whose conjugate is not +-any column


def involution_from_conjugation(M: ScaledMatrix) -> ConjugationReport:
    """Match conj(column j) against the columns of M, exactly."""
    B = M.size
    L = M.field_conductor
    cols = [
        tuple(M.entries[k][j].lift(L) for k in range(B)) for j in range(B)
    ]

    def key(col):
        return tuple(x.coeffs for x in col)

    lookup = {key(col): j for j, col in enumerate(cols)}
    perm: list[int | None] = [None] * B
    sign_matches = []
    unmatched = []
    for j in range(B):
        cc = tuple(x.conj() for x in cols[j])
        hit = lookup.get(key(cc))
        if hit is not None:
            perm[j] = hit
            continue
        neg = lookup.get(key(tuple(-x for x in cc)))
        if neg is not None:
            sign_matches.append((j, neg))
        else:
            unmatched.append(j)
    if sign_matches or unmatched:
        return ConjugationReport(None, sign_matches, unmatched)
    return ConjugationReport(tuple(perm), [], [])


def _blocks_of(label):
    if isinstance(label, SymbolRep):
        return label.blocks
    if isinstance(label, tuple) and label and isinstance(label[0], tuple):
        return label
    if isinstance(label, tuple):
        return (label,)
    raise ParameterError(f"label {label!r} has no block structure")


def _sorted_with_sign(vals):
    order = sorted(range(len(vals)), key=lambda h: vals[h])
    return tuple(vals[h] for h in order), perm_sign(tuple(order))


@dataclass
class NormalizationResult:
    matrix: ScaledMatrix
    signs: tuple
    row_phases: tuple
    involution: tuple
    gamma0: int
    phase_exponent_sign: int  # orientation of the zeta_{2e} exponent in theta


def normalize_signs(M: ScaledMatrix, unit) -> NormalizationResult:
    """Row phases theta_k and column signs making the column set closed
    under complex conjugation, with the unit column real.

    theta_k = sqrt(gamma0) * zeta_{2e}^(+-sum_mu w_mu * sum_nu k_nu^mu)
    with w_mu = n_mu - 1 + 2 a_mu read off the consecutive unit blocks
    (a_mu, ..., a_mu + n_mu - 1), and gamma0 the product of the
    block-reversal signs (-1)^C(n_mu, 2).  sqrt(-1) is taken as zeta_4.
    The matching column for ~j carries a sign; for every minus pair the
    lexicographically smaller label is flipped.
    """
    e = M.base
    B = M.size
    u = _unit_index(M, unit)
    ublocks = _blocks_of(M.labels[u])
    offs = []
    for block in ublocks:
        a = block[0]
        if block != tuple(range(a, a + len(block))):
            raise ParameterError(
                f"unit label {M.labels[u]!r} is not made of consecutive blocks"
            )
        offs.append(a)
    ns = [len(b) for b in ublocks]
    w = [n - 1 + 2 * a for n, a in zip(ns, offs)]
    gamma0 = 1
    for n in ns:
        if (n * (n - 1) // 2) % 2:
            gamma0 = -gamma0

    # involution on labels: sort (w_mu - i) mod e blockwise
    tilde_idx = []
    gamma = []
    for lab in M.labels:
        blocks = _blocks_of(lab)
        g = 1
        tblocks = []
        for wm, block in zip(w, blocks):
            vals = [(wm - v) % e for v in block]
            sorted_vals, sg = _sorted_with_sign(vals)
            tblocks.append(sorted_vals)
            g *= sg
        tlab = tuple(tblocks)
        if not (isinstance(lab, tuple) and lab and isinstance(lab[0], tuple)) and not isinstance(lab, SymbolRep):
            tlab = tlab[0]
        tilde_idx.append(M.index_of(tlab))
        gamma.append(g)

    def attempt(sqrt_g: CycNum, exp_sign: int):
        theta = []
        for lab in M.labels:
            blocks = _blocks_of(lab)
            t = sum(wm * sum(block) for wm, block in zip(w, blocks))
            theta.append(sqrt_g * cyc_root(2 * e, (exp_sign * t) % (2 * e)))
        L = math.lcm(
            M.field_conductor, 2 * e, sqrt_g.conductor, M.extra_scalar.conductor
        )
        # conjugation closure is a property of the true matrix, so the
        # global unimodular factor must ride along during the test
        eff = M.extra_scalar.lift(L)
        rows = tuple(
            tuple(
                eff * theta[k].lift(L) * M.entries[k][j].lift(L)
                for j in range(B)
            )
            for k in range(B)
        )
        # column sign pattern: conj(col_j) must equal +-col_{~j}
        csign = []
        for j in range(B):
            tj = tilde_idx[j]
            plus = minus = True
            for k in range(B):
                cc = rows[k][j].conj()
                if plus and cc != rows[k][tj]:
                    plus = False
                if minus and cc != -rows[k][tj]:
                    minus = False
                if not plus and not minus:
                    return None, None, (j, k)
            csign.append(1 if plus else -1)
        return rows, csign, theta

    # the square root of gamma0 and the exponent orientation are only
    # fixed up to global sign conventions (the paper leaves the root
    # choice open, and the unimodular constant of a Fourier block can
    # contribute another global -1 under conjugation), so all four
    # candidates are tried in a fixed order
    sqrt_pref = CycNum.rational(1) if gamma0 > 0 else ZETA4
    sqrt_alt = ZETA4 if gamma0 > 0 else CycNum.rational(1)

    def flips_of(csign):
        signs = [1] * B
        for j in range(B):
            tj = tilde_idx[j]
            if csign[j] < 0:
                if j == tj:
                    return None, f"self-conjugate column {j} has a negative match"
                if u in (j, tj):
                    return None, "unit column cannot be flipped"
                if j < tj:
                    signs[j] = -1
        return signs, None

    failure = None
    found = False
    for sqrt_g, exp_sign in (
        (sqrt_pref, -1),
        (sqrt_pref, 1),
        (sqrt_alt, -1),
        (sqrt_alt, 1),
    ):
        rows, csign, extra = attempt(sqrt_g, exp_sign)
        if rows is None:
            failure = (
                f"conjugate of column {extra[0]} matches no +-column "
                f"(first mismatch at row {extra[1]})"
            )
            continue
        signs, err = flips_of(csign)
        if signs is None:
            failure = err
            continue
        theta = extra
        found = True
        break
    if not found:
        raise NormalizationError(failure)
    # rebuild without the extra_scalar factor: it stays factored out on
    # the returned matrix
    out_entries = tuple(
        tuple(
            theta[k] * M.entries[k][j] * CycNum.rational(signs[j])
            for j in range(B)
        )
        for k in range(B)
    )
    out = ScaledMatrix(
        labels=M.labels,
        entries=out_entries,
        base=M.base,
        scale_exp=M.scale_exp,
        extra_scalar=M.extra_scalar,
    )
    return NormalizationResult(
        matrix=out,
        signs=tuple(signs),
        row_phases=tuple(theta),
        involution=tuple(tilde_idx),
        gamma0=gamma0,
        phase_exponent_sign=exp_sign,
    )


# -- axioms ----------------------------------------------------------------


@dataclass
class AxiomReport:
    unit_law: bool
    commutative: bool
    associative: bool
    involution_exists: bool
    involution_compatible: bool  # N[~i,~j,k] == N[i,j,~k]
    involution_unit: bool  # N[~i,j,unit] == delta_ij
    witnesses: dict

    @property
    def ok(self) -> bool:
        return (
            self.unit_law
            and self.commutative
            and self.associative
            and self.involution_exists
            and self.involution_compatible
            and self.involution_unit
        )

    def __bool__(self):
        return self.ok


def _first_bad(mask) -> tuple:
    idx = np.nonzero(mask)
    return tuple(int(a[0]) for a in idx)


def based_ring_axioms(ring: FusionRing) -> AxiomReport:
    """Unit law, commutativity, associativity and the two involution
    axioms, with a first-failure witness per axiom."""
    N = ring.tensor
    B, u = ring.size, ring.unit
    wit: dict = {}
    eye = np.eye(B, dtype=np.int64)
    unit_ok = bool(np.array_equal(N[u], eye) and np.array_equal(N[:, u, :], eye))
    if not unit_ok:
        wit["unit_law"] = _first_bad(N[u] != eye)
    comm_ok = bool(np.array_equal(N, N.transpose(1, 0, 2)))
    if not comm_ok:
        wit["commutative"] = _first_bad(N != N.transpose(1, 0, 2))

    # associativity: sum_x N[i,j,x] N[x,k,y] == sum_x N[j,k,x] N[i,x,y],
    # blocked over i to bound memory; float64 BLAS is exact here because
    # every accumulation is far below 2^53
    assoc_ok = True
    Nf = N.astype(np.float64)
    flat_x_ky = Nf.reshape(B, B * B)  # x -> (k, y)
    flat_jk_x = np.ascontiguousarray(Nf.reshape(B * B, B))  # (j, k) -> x
    maxv = float(np.abs(N).max(initial=0))
    if B * maxv * maxv >= 2.0**53:
        raise EngineOverflowError("associativity check bound exceeded")
    for i in range(B):
        lhs = Nf[i] @ flat_x_ky  # (j, (k, y))
        rhs = (flat_jk_x @ Nf[i]).reshape(B, B, B).reshape(B, B * B)
        if not np.array_equal(lhs, rhs):
            assoc_ok = False
            j, ky = _first_bad(lhs != rhs)
            wit["associative"] = (i, j, ky // B, ky % B)
            break

    inv = ring.involution or ring.involution_candidate()
    inv_exists = inv is not None
    inv_compat = inv_unit = False
    if inv_exists:
        iv = np.asarray(inv)
        compat = N[np.ix_(iv, iv)] == N[:, :, iv]
        inv_compat = bool(compat.all())
        if not inv_compat:
            wit["involution_compatible"] = _first_bad(~compat)
        unit_slice = N[iv, :, u]
        inv_unit = bool(np.array_equal(unit_slice, eye))
        if not inv_unit:
            wit["involution_unit"] = _first_bad(unit_slice != eye)
    else:
        wit["involution_exists"] = "no index permutation satisfies the unit axiom"
    return AxiomReport(
        unit_law=unit_ok,
        commutative=comm_ok,
        associative=assoc_ok,
        involution_exists=inv_exists,
        involution_compatible=inv_compat,
        involution_unit=inv_unit,
        witnesses=wit,
    )


# -- surveys ---------------------------------------------------------------


@dataclass
class IntegralityRow:
    e: int
    n: int
    basis: int
    seconds: float
    max_abs: int
    violations: list


@dataclass
class IntegralitySummary:
    rows: list
    ok: bool


def integrality_check(e_range, n_range=None) -> IntegralitySummary:
    """Verlinde integrality over exterior powers of cyclic S-matrices.

    e_range: iterable of e values; n_range: iterable of n values or None
    for all 1 <= n <= e.
    """
    rows = []
    ok = True
    for e in e_range:
        ns = n_range if n_range is not None else range(1, e + 1)
        for n in ns:
            if not 1 <= n <= e:
                continue
            t0 = time.perf_counter()
            M = exterior_dft(e, n)
            rep = verlinde(M, tuple(range(n)) if n > 1 else 0)
            dt = time.perf_counter() - t0
            rows.append(
                IntegralityRow(
                    e=e,
                    n=n,
                    basis=M.size,
                    seconds=dt,
                    max_abs=int(np.abs(rep.ring.tensor).max(initial=0)),
                    violations=rep.violations,
                )
            )
            ok = ok and rep.all_integer
    return IntegralitySummary(rows=rows, ok=ok)


@dataclass
class NegScanRow:
    e: int
    n: int
    basis: int
    raw_negative: bool  # the unnormalized tensor contains a negative entry
    has_negative: bool  # negatives survive every basis sign change
    predicted: bool


@dataclass
class NegScanResult:
    rows: list
    matches_predicate: bool


def neg_scan(max_basis: int = 50) -> NegScanResult:
    """Classify which exterior-power rings with at most max_basis basis
    elements necessarily have negative structure constants (no sign
    change removes them), and compare against the predicate
    (e even and n even and 1 < n < e)."""
    rows = []
    all_match = True
    e = 2
    while e <= max_basis:
        for n in range(1, e + 1):
            if math.comb(e, n) > max_basis:
                continue
            M = exterior_dft(e, n)
            rep = verlinde(M, tuple(range(n)) if n > 1 else 0)
            raw_neg = rep.ring.has_negative()
            if raw_neg:
                neg = nonneg_sign_search(rep.ring, "s-matrix") is None
            else:
                neg = False
            pred = e % 2 == 0 and n % 2 == 0 and 1 < n < e
            rows.append(
                NegScanRow(
                    e=e,
                    n=n,
                    basis=M.size,
                    raw_negative=raw_neg,
                    has_negative=neg,
                    predicted=pred,
                )
            )
            all_match = all_match and (neg == pred)
        e += 1
    return NegScanResult(rows=rows, matches_predicate=all_match)


# -- nonnegative sign search -----------------------------------------------


def _sign_constraints_solve(ring: FusionRing):
    """Solve s_i s_j s_l = sign(N[i,j,l]) over all nonzero entries,
    written as the GF(2) linear system p_i + p_j + p_l = bit with
    p[unit] = 0 (indices repeated in a triple cancel mod 2).  Gaussian
    elimination over bitmask rows; free variables default to +1.
    Returns a +-1 vector or None if the system is inconsistent."""
    B, u = ring.size, ring.unit
    nz = np.nonzero(ring.tensor)
    rows = [(1 << u, 0)]
    for i, j, l, v in zip(*nz, ring.tensor[nz]):
        mask = 0
        for x in (int(i), int(j), int(l)):
            mask ^= 1 << x
        rows.append((mask, 1 if v < 0 else 0))
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        while mask:
            top = mask.bit_length() - 1
            if top in pivots:
                pmask, prhs = pivots[top]
                mask ^= pmask
                rhs ^= prhs
            else:
                pivots[top] = (mask, rhs)
                break
        else:
            if rhs:
                return None
    assign = [0] * B
    # each pivot row has its leading bit as highest set bit, so one
    # substitution pass in increasing pivot order resolves everything;
    # free variables stay 0, and a final verification over all original
    # rows catches any residual inconsistency
    for x in sorted(pivots):
        mask, rhs = pivots[x]
        acc = rhs
        rest = mask & ~(1 << x)
        while rest:
            y = rest & -rest
            acc ^= assign[y.bit_length() - 1]
            rest ^= y
        assign[x] = acc
    for mask, rhs in rows:
        acc = rhs
        rest = mask
        while rest:
            y = rest & -rest
            acc ^= assign[y.bit_length() - 1]
            rest ^= y
        if acc:
            return None
    return tuple(1 if a == 0 else -1 for a in assign)


def _numeric_characters(tensor: np.ndarray, unit: int, seed: int = 7):
    """One-dimensional representations of the (assumed commutative,
    associative) tensor via eigendecomposition of a random combination
    of the left-multiplication matrices."""
    B = tensor.shape[0]
    rng = np.random.default_rng(seed)
    c = rng.standard_normal(B)
    Mc = np.einsum("i,iab->ab", c, tensor.astype(np.float64))
    _, V = np.linalg.eig(Mc)
    chars = np.empty((B, B), dtype=np.complex128)
    for k in range(B):
        v = V[:, k]
        pivot = int(np.argmax(np.abs(v)))
        for j in range(B):
            chars[k, j] = (tensor[j].astype(np.float64) @ v)[pivot] / v[pivot]
    return chars


def nonneg_sign_search(ring: FusionRing, strategy: str = "exhaustive"):
    """Search for a sign change making all structure constants
    nonnegative; returns the sign vector or None.

    exhaustive: all 2^(B-1) vectors with the unit sign fixed to +1.
    s-matrix: form |N|, require it to be a commutative associative
    unital tensor, compare its one-dimensional representations with the
    original ring's (they must agree up to column signs), and verify the
    resulting candidate exactly.
    """
    B, u = ring.size, ring.unit
    N = ring.tensor
    if strategy == "exhaustive":
        if B > 24:
            raise StrategyError(f"basis size {B} too large for exhaustive search")
        nz = np.nonzero(N)
        vals = N[nz]
        ii, jj, ll = nz
        others = [x for x in range(B) if x != u]
        for bits in itertools.product((1, -1), repeat=len(others)):
            s = np.ones(B, dtype=np.int64)
            for x, b in zip(others, bits):
                s[x] = b
            if np.all(s[ii] * s[jj] * s[ll] * vals > 0):
                return tuple(int(x) for x in s)
        return None
    if strategy == "s-matrix":
        A = np.abs(N)
        cand_ring = FusionRing(labels=ring.labels, unit=u, tensor=A)
        rep = based_ring_axioms(cand_ring)
        if not (rep.unit_law and rep.commutative and rep.associative):
            return None
        cand = _sign_constraints_solve(ring)
        if cand is None:
            # cross-check the failure numerically: the |N| algebra's
            # characters cannot match the original ones up to sign
            return None
        s = np.asarray(cand, dtype=np.int64)
        nz = np.nonzero(N)
        if not np.all(s[nz[0]] * s[nz[1]] * s[nz[2]] * N[nz] > 0):
            return None
        # numeric eigendecomposition comparison (sanity on the exact
        # answer): sign changes preserve character magnitudes, so the
        # row multisets of |chi| must coincide
        ch0 = _numeric_characters(N, u)
        ch1 = _numeric_characters(A, u)
        m0 = sorted(tuple(np.round(np.sort(np.abs(ch0[k])), 6)) for k in range(B))
        m1 = sorted(tuple(np.round(np.sort(np.abs(ch1[k])), 6)) for k in range(B))
        if m0 != m1:
            return None
        return cand
    raise StrategyError(f"unknown strategy {strategy!r}")


# -- floating oracle -------------------------------------------------------


def float_verlinde(M: ScaledMatrix, unit, triples, bits: int = 128):
    """Independent floating-point Verlinde evaluation at the given
    precision; returns one complex value (mpmath mpc) per (i,j,l).
    The scale and unimodular extra factor cancel just as on the exact
    path, so only the entries and base^(-scale_exp) enter."""
    import mpmath

    B = M.size
    u = _unit_index(M, unit)
    with mpmath.workprec(bits):
        emb = [
            [M.entries[k][j].embed(bits) for j in range(B)] for k in range(B)
        ]
        scale = mpmath.mpf(M.base) ** (-M.scale_exp)
        out = []
        for (i, j, l) in triples:
            acc = mpmath.mpc(0)
            for k in range(B):
                acc += emb[k][i] * emb[k][j] * mpmath.conj(emb[k][l]) / emb[k][u]
            out.append(acc * scale)
    return out

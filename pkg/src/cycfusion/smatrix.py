"""Construction of the Fourier-type matrices: cyclic DFT S-matrix,
exterior powers via minors, tensor products, and the G(e,1,n) Fourier
blocks on the congruence-restricted symbol set E'."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import _engine
from .combin import SymbolRep, perm_sign, eps_sign, tuples
from .cyclo import CycNum, cyc_root, i_power, sqrt_e
from .errors import EngineOverflowError, ParameterError, UnitNotFoundError

ONE = CycNum.rational(1)


@dataclass(frozen=True, eq=False)
class ScaledMatrix:
    """A square matrix of CycNum entries with a formal scale: the true
    matrix is extra_scalar * base^(-scale_exp/2) * entries.

    extra_scalar is a global unimodular factor; it cancels in the
    Verlinde formula and in orthogonality checks.
    """

    labels: tuple
    entries: tuple
    base: int
    scale_exp: int
    extra_scalar: CycNum = field(default_factory=lambda: ONE)

    def __post_init__(self):
        if len(self.entries) != len(self.labels) or any(
            len(row) != len(self.labels) for row in self.entries
        ):
            raise ParameterError("entries must be square and match labels")

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, label) -> int:
        if isinstance(label, SymbolRep):
            label = label.blocks
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not found") from None

    @cached_property
    def _label_index(self) -> dict:
        out = {}
        for i, lab in enumerate(self.labels):
            out[lab.blocks if isinstance(lab, SymbolRep) else lab] = i
        return out

    def entry(self, i: int, j: int) -> CycNum:
        return self.entries[i][j]

    @cached_property
    def field_conductor(self) -> int:
        cond = self.extra_scalar.conductor
        for row in self.entries:
            for x in row:
                cond = math.lcm(cond, x.conductor)
        return cond

    def rep(self, L: int | None = None):
        """Integer engine representation in Z[zeta_L], or None."""
        if L is None:
            L = self.field_conductor
        cache = self.__dict__.setdefault("_rep_cache", {})
        if L not in cache:
            cache[L] = _engine.rep_of_matrix(self.entries, L)
        return cache[L]

    def true_entry(self, i: int, j: int, conductor: int | None = None) -> CycNum:
        """The actual matrix value, with the scale applied exactly.

        Needs sqrt(base) as a cyclotomic constant, so the result lives in
        a conductor divisible by lcm(24, 2*base).
        """
        needed = math.lcm(24, 2 * self.base, self.field_conductor)
        cond = conductor if conductor is not None else needed
        if cond % needed:
            raise ParameterError(f"conductor {cond} too small (need multiple of {needed})")
        root = sqrt_e(self.base, math.lcm(24, 2 * self.base)).lift(cond)
        val = self.extra_scalar.lift(cond) * self.entries[i][j].lift(cond)
        return val * root.inverse() ** self.scale_exp

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "labels": [_label_json(lab) for lab in self.labels],
            "base": self.base,
            "scale_exp": self.scale_exp,
            "extra_scalar": self.extra_scalar.to_json(),
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json(data: dict) -> "ScaledMatrix":
        return ScaledMatrix(
            labels=tuple(_label_from_json(lab) for lab in data["labels"]),
            entries=tuple(
                tuple(CycNum.from_json(x) for x in row) for row in data["entries"]
            ),
            base=data["base"],
            scale_exp=data["scale_exp"],
            extra_scalar=CycNum.from_json(data.get("extra_scalar", {"conductor": 1, "coeffs": ["1"]})),
        )


def _label_json(lab):
    if isinstance(lab, SymbolRep):
        return [list(b) for b in lab.blocks]
    if hasattr(lab, "tilde"):  # affine weight: serialize its tilde tuple
        return list(lab.tilde)
    if isinstance(lab, tuple):
        return [_label_json(x) for x in lab]
    return lab


def _label_from_json(lab):
    if isinstance(lab, list):
        return tuple(_label_from_json(x) for x in lab)
    return lab


# -- elementary constructions ---------------------------------------------


def dft_smatrix(e: int) -> ScaledMatrix:
    """S-matrix of the group ring of Z/eZ: entries zeta_e^(ij), true
    matrix scaled by 1/sqrt(e)."""
    if e < 1:
        raise ParameterError(f"e must be >= 1, got {e}")
    roots = [cyc_root(e, k) for k in range(e)]
    entries = tuple(
        tuple(roots[(i * j) % e] for j in range(e)) for i in range(e)
    )
    return ScaledMatrix(labels=tuple(range(e)), entries=entries, base=e, scale_exp=1)


def p_det(ibar, jbar, e: int, conjugate: bool = False) -> CycNum:
    """det(zeta_e^(i_mu * j_nu)), exactly, as a signed sum of roots of
    unity.  With conjugate=True the exponents are negated.  The tuples
    may contain arbitrary integers mod e."""
    n = len(ibar)
    if len(jbar) != n:
        raise ParameterError("tuples must have equal length")
    vec = [0] * max(e, 1)
    sgn = -1 if conjugate else 1
    for perm in itertools.permutations(range(n)):
        s = perm_sign(perm)
        exp = sgn * sum(ibar[v] * jbar[perm[v]] for v in range(n))
        vec[exp % e] += s
    return CycNum.from_vector(e, vec)


def exterior_power(M: ScaledMatrix, n: int) -> ScaledMatrix:
    """Compound matrix of n x n minors, labels the strictly increasing
    n-tuples of row/column positions (lexicographic)."""
    size = M.size
    if not 1 <= n <= size:
        raise ParameterError(f"need 1 <= n <= {size}, got {n}")
    if n == 1:
        return M
    labs = tuples(size, n)
    ent = M.entries

    def minor(rows, cols):
        total = CycNum.rational(0)
        for perm in itertools.permutations(range(n)):
            term = CycNum.rational(perm_sign(perm))
            for v in range(n):
                term = term * ent[rows[v]][cols[perm[v]]]
            total = total + term
        return total

    entries = tuple(tuple(minor(r, c) for c in labs) for r in labs)
    return ScaledMatrix(
        labels=tuple(labs),
        entries=entries,
        base=M.base,
        scale_exp=M.scale_exp * n,
        extra_scalar=M.extra_scalar**n,
    )


def exterior_dft(e: int, n: int) -> ScaledMatrix:
    """Lambda^n of the cyclic DFT S-matrix, built directly from the
    determinants P_{i,j} = det(zeta^(i_mu j_nu)).

    For n > e/2 the complementary-minor identity
        P_{I,J} = (-1)^(sum I + sum J) * det(E) * e^(n-e) * conj(P_{Jc,Ic})
    is used instead, with det(E) = i^(C(e,2)+(e-1)^2) * sqrt(e)^e folded
    into the scale; this keeps entry sizes flat for n close to e.
    """
    if not 1 <= n <= e:
        raise ParameterError(f"need 1 <= n <= {e}, got {n}")
    labs = tuples(e, n)
    nc = e - n
    if n <= nc:
        entries = tuple(tuple(p_det(i, j, e) for j in labs) for i in labs)
        return ScaledMatrix(
            labels=tuple(labs), entries=entries, base=e, scale_exp=n
        )
    comp = {lab: tuple(sorted(set(range(e)) - set(lab))) for lab in labs}
    rows = []
    for i in labs:
        srow = []
        si = sum(i)
        for j in labs:
            sign = -1 if (si + sum(j)) % 2 else 1
            val = p_det(comp[j], comp[i], e, conjugate=True)
            srow.append(-val if sign < 0 else val)
        rows.append(tuple(srow))
    det_phase = e * (e - 1) // 2 + (e - 1) ** 2
    return ScaledMatrix(
        labels=tuple(labs),
        entries=tuple(rows),
        base=e,
        scale_exp=nc,
        extra_scalar=i_power(det_phase),
    )


def tensor(Ms: list[ScaledMatrix]) -> ScaledMatrix:
    """Tensor (Kronecker) product, labels in lexicographic product order."""
    if not Ms:
        raise ParameterError("need at least one factor")
    if len({M.base for M in Ms}) != 1:
        raise ParameterError("all tensor factors must share the same base")
    if len(Ms) == 1:
        return Ms[0]
    labels = [
        tuple(lab if isinstance(lab, tuple) else (lab,) for lab in combo)
        for combo in itertools.product(*(M.labels for M in Ms))
    ]
    index_combos = list(itertools.product(*(range(M.size) for M in Ms)))
    entries = []
    for rid in index_combos:
        row = []
        for cid in index_combos:
            val = Ms[0].entries[rid[0]][cid[0]]
            for t in range(1, len(Ms)):
                val = val * Ms[t].entries[rid[t]][cid[t]]
            row.append(val)
        entries.append(tuple(row))
    extra = Ms[0].extra_scalar
    for M in Ms[1:]:
        extra = extra * M.extra_scalar
    return ScaledMatrix(
        labels=tuple(labels),
        entries=tuple(entries),
        base=Ms[0].base,
        scale_exp=sum(M.scale_exp for M in Ms),
        extra_scalar=extra,
    )


# -- G(e,1,n) symbols and Fourier blocks -----------------------------------


def _check_block_params(e: int, m: int, mult) -> None:
    mult = tuple(mult)
    if e < 1 or m < 1:
        raise ParameterError(f"need e >= 1 and m >= 1, got e={e}, m={m}")
    if sum(mult) != e * m + 1:
        raise ParameterError(
            f"multiplicities {mult} must sum to e*m+1 = {e*m+1}"
        )
    if any(not 1 <= nu <= e for nu in mult):
        raise ParameterError(f"each multiplicity must lie in 1..{e}, got {mult}")


def congruence_target(e: int, m: int) -> int:
    return (m * (e * (e - 1) // 2)) % e


def symbols_E_prime(e: int, m: int, mult) -> list[SymbolRep]:
    """All symbols in E' = {members of E whose total entry sum is
    congruent to m*C(e,2) mod e}, in lexicographic product order."""
    _check_block_params(e, m, mult)
    mult = tuple(mult)
    a = congruence_target(e, m)
    out = []
    for combo in itertools.product(*(tuples(e, nu) for nu in mult)):
        if sum(sum(b) for b in combo) % e == a:
            out.append(SymbolRep(blocks=combo, e=e))
    return out


def unit_symbol(e: int, m: int, mult) -> SymbolRep:
    """The lexicographically smallest consecutive-block symbol
    (a_1,...,a_1+n_1-1) x ... x (a_r,...,a_r+n_r-1) lying in E'."""
    _check_block_params(e, m, mult)
    mult = tuple(mult)
    a = congruence_target(e, m)
    base_sum = sum(nu * (nu - 1) // 2 for nu in mult)
    for offs in itertools.product(*(range(e - nu + 1) for nu in mult)):
        if (base_sum + sum(o * nu for o, nu in zip(offs, mult))) % e == a:
            return SymbolRep(
                blocks=tuple(
                    tuple(range(o, o + nu)) for o, nu in zip(offs, mult)
                ),
                e=e,
            )
    raise UnitNotFoundError(
        f"no consecutive-block unit in range for e={e}, m={m}, mult={mult}"
    )


def fourier_block(e: int, m: int, mult, include_eps: bool = True) -> ScaledMatrix:
    """The Fourier block T' indexed by E'.

    Entry (psi1, psi2) is eps(psi1) * eps(psi2) * prod_mu of the
    conjugated block minors; the 1/sqrt(e) factors and the magnitude of
    the constant c sit in scale_exp = d-1, the unimodular part of c in
    extra_scalar.  With include_eps=False the sign factors are dropped.
    """
    _check_block_params(e, m, mult)
    mult = tuple(mult)
    syms = symbols_E_prime(e, m, mult)
    d = e * m + 1
    # per-block minor caches: conj(P) over all (row tuple, column tuple)
    minor_cache: list[dict] = []
    for nu in mult:
        cache = {}
        for it in tuples(e, nu):
            for jt in tuples(e, nu):
                cache[(it, jt)] = p_det(it, jt, e, conjugate=True)
        minor_cache.append(cache)
    eps = [eps_sign(s) for s in syms] if include_eps else [1] * len(syms)
    entries = []
    for pi, psi1 in enumerate(syms):
        row = []
        for pj, psi2 in enumerate(syms):
            val = minor_cache[0][(psi1.blocks[0], psi2.blocks[0])]
            for mu in range(1, len(mult)):
                val = val * minor_cache[mu][(psi1.blocks[mu], psi2.blocks[mu])]
            s = eps[pi] * eps[pj]
            row.append(val if s > 0 else -val)
        entries.append(tuple(row))
    binom = (e - 1) * (e - 2) // 2
    extra = i_power((2 * m * (e - 1) - binom * m) % 4)
    return ScaledMatrix(
        labels=tuple(syms),
        entries=tuple(entries),
        base=e,
        scale_exp=d - 1,
        extra_scalar=extra,
    )


# -- orthogonality ---------------------------------------------------------


@dataclass
class OrthogonalityReport:
    ok: bool
    offenders: list
    size: int

    def __bool__(self):
        return self.ok


def orthogonality_check(M: ScaledMatrix) -> OrthogonalityReport:
    """Exact check that entries * conj(entries)^t = base^scale_exp * I,
    i.e. that the true matrix is unitary."""
    L = M.field_conductor
    A = M.rep(L)
    offenders = []
    if A is not None:
        try:
            G = _engine.gram_reduced(A, L)
            target = M.base**M.scale_exp
            B = M.size
            for i in range(B):
                for j in range(B):
                    want0 = target if i == j else 0
                    if G[i, j, 0] != want0 or (G.shape[2] > 1 and G[i, j, 1:].any()):
                        offenders.append((i, j))
            return OrthogonalityReport(not offenders, offenders, M.size)
        except EngineOverflowError:
            pass
    # pure CycNum fallback
    target = CycNum.rational(M.base**M.scale_exp)
    B = M.size
    rows_conj = [[x.conj() for x in row] for row in M.entries]
    for i in range(B):
        for j in range(B):
            acc = CycNum.rational(0)
            for k in range(B):
                acc = acc + M.entries[i][k] * rows_conj[j][k]
            want = target if i == j else CycNum.rational(0)
            if acc != want:
                offenders.append((i, j))
    return OrthogonalityReport(not offenders, offenders, M.size)

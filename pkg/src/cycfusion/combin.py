"""Combinatorial enumerators: index tuples, partitions, semistandard
tableaux, symbol representatives, permutation signs and signed
permutations (Weyl group of type C_l)."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .cyclo import CycNum
from .errors import EmptyBasisError, ParameterError


def tuples(e: int, n: int) -> list[tuple[int, ...]]:
    """All strictly increasing n-tuples in {0,...,e-1}, lexicographic."""
    if n < 0 or n > e:
        raise EmptyBasisError(f"no strictly increasing {n}-tuples in range(0, {e})")
    return list(itertools.combinations(range(e), n))


def partition_of(jbar: tuple[int, ...]) -> tuple[int, ...]:
    """The partition (j_n-(n-1), ..., j_2-1, j_1) attached to a strictly
    increasing tuple, trailing zeros trimmed."""
    n = len(jbar)
    parts = [jbar[n - 1 - h] - (n - 1 - h) for h in range(n)]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(parts[h] < parts[h + 1] for h in range(len(parts) - 1)) or any(
        p < 0 for p in parts
    ):
        raise ValueError(f"{jbar} does not give a valid partition")
    return tuple(parts)


def ssyt_weights(shape: tuple[int, ...], n: int) -> Counter:
    """Weights of all semistandard tableaux of the given shape with
    entries in {1,...,n}.

    Returns a Counter mapping weight vectors (count of 1s, ..., count of
    ns) to the number of tableaux with that weight.  Rows weakly
    increase, columns strictly increase.  Row-by-row backtracking keeps
    memory flat.
    """
    shape = tuple(p for p in shape if p > 0)
    out: Counter = Counter()
    if not shape:
        out[(0,) * n] = 1
        return out
    if len(shape) > n:
        return out
    rows = len(shape)

    def fill(r: int, prev_row: tuple[int, ...], weight: list[int]):
        if r == rows:
            out[tuple(weight)] += 1
            return
        width = shape[r]

        def cell(c: int, row: list[int]):
            if c == width:
                fill(r + 1, tuple(row), weight)
                return
            lo = row[c - 1] if c > 0 else 1
            if c < len(prev_row):
                lo = max(lo, prev_row[c] + 1)
            for v in range(lo, n + 1):
                row.append(v)
                weight[v - 1] += 1
                cell(c + 1, row)
                weight[v - 1] -= 1
                row.pop()

        cell(0, [])

    fill(0, (), [0] * n)
    return out


def schur_eval(shape: tuple[int, ...], values: list[CycNum]) -> CycNum:
    """Schur polynomial s_shape evaluated at the given points: the sum
    over semistandard tableaux of the product of values to the tableau
    weights."""
    n = len(values)
    total = CycNum.rational(0)
    for weight, count in ssyt_weights(shape, n).items():
        term = CycNum.rational(count)
        for v, w in zip(values, weight):
            if w:
                term = term * v**w
        total = total + term
    return total


@dataclass(frozen=True, order=True)
class SymbolRep:
    """An element of E: a tensor of strictly increasing blocks with
    entries in {0,...,e-1}, block mu of length n_mu.

    The underlying totally ordered set Y is realized as the weight slots
    grouped by weight, weights increasing, slots within a group
    consecutive; the values of the ordered map are read off by
    concatenating the blocks.
    """

    blocks: tuple[tuple[int, ...], ...]
    e: int

    def __post_init__(self):
        for block in self.blocks:
            if any(not (0 <= v < self.e) for v in block):
                raise ParameterError(f"block {block} out of range for e={self.e}")
            if any(block[i] >= block[i + 1] for i in range(len(block) - 1)):
                raise ParameterError(f"block {block} is not strictly increasing")
            if len(block) > self.e:
                raise ParameterError(f"block {block} longer than e={self.e}")

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def d(self) -> int:
        return sum(len(b) for b in self.blocks)

    def values(self) -> tuple[int, ...]:
        return tuple(v for b in self.blocks for v in b)

    def entry_sum(self) -> int:
        return sum(self.values())


def eps_sign(psi: SymbolRep) -> int:
    """(-1)^(number of pairs y < y' with psi(y) < psi(y')), over the
    canonical order on Y."""
    vals = psi.values()
    count = sum(
        1
        for a in range(len(vals))
        for b in range(a + 1, len(vals))
        if vals[a] < vals[b]
    )
    return -1 if count % 2 else 1


def perm_sign(perm: tuple[int, ...]) -> int:
    inv = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class SignedPermutation:
    """An element of the Weyl group of type C_l: a permutation of
    {1,...,l} together with a sign for each slot."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def sign(self) -> int:
        s = perm_sign(self.perm)
        for f in self.signs:
            s *= f
        return s


def signed_permutations(l: int):
    """All 2^l * l! signed permutations, each exactly once."""
    if l < 1:
        raise ParameterError(f"rank must be >= 1, got {l}")
    for perm in itertools.permutations(range(1, l + 1)):
        for signs in itertools.product((1, -1), repeat=l):
            yield SignedPermutation(perm, signs)

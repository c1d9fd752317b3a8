"""Symmetric-group model of the Weyl group of GL(N).

Permutations are 1-based one-line tuples ``w = (w(1), ..., w(N))`` acting on
coordinate vectors by moving the entry in position m to position w(m), so
``(w x)_i = x_{w^{-1}(i)}``.  A permutation is a Kostant representative for a
block composition when ``w^{-1}`` is increasing on every block.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    InputError,
    NotKostant,
    OddDimension,
    RankMismatch,
    ShapeMismatch,
)
from .weights import Weight, require_pure

Perm = tuple[int, ...]


# ---------------------------------------------------------------- permutations

def identity(N: int) -> Perm:
    return tuple(range(1, N + 1))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for m, pm in enumerate(p, start=1):
        inv[pm - 1] = m
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation p∘q (apply q first)."""
    return tuple(p[qm - 1] for qm in q)


def length(p: Perm) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def act(p: Perm, x: Sequence) -> tuple:
    out = [None] * len(p)
    for m, pm in enumerate(p):
        out[pm - 1] = x[m]
    return tuple(out)


def longest_element(N: int) -> Perm:
    return tuple(range(N, 0, -1))


def blocks(composition: Sequence[int]) -> list[range]:
    out, start = [], 0
    for size in composition:
        out.append(range(start, start + size))
        start += size
    return out


def block_reversal(composition: Sequence[int]) -> Perm:
    """Longest element of the Levi subgroup: reverses each block."""
    out = []
    for blk in blocks(composition):
        out.extend(blk.start + blk.stop - k for k in blk)
    return tuple(out)


def is_kostant(p: Perm, composition: Sequence[int]) -> bool:
    inv = inverse(p)
    return all(inv[k] < inv[k + 1] for blk in blocks(composition) for k in blk[:-1])


def rho_doubled(N: int) -> tuple[int, ...]:
    """2ρ_N = (N-1, N-3, ..., 1-N)."""
    return tuple(N + 1 - 2 * i for i in range(1, N + 1))


def dot_vector(p: Perm, b: Sequence[int]) -> tuple[int, ...]:
    """w(b + ρ) - ρ for an integer vector b."""
    inv = inverse(p)
    # ρ_m - ρ_k = k - m, so the result stays integral
    return tuple(b[inv[k] - 1] + (k + 1) - inv[k] for k in range(len(p)))


# ------------------------------------------------------------ Kostant elements

@dataclass(frozen=True)
class KostantElement:
    N: int
    parabolic: tuple[int, ...]
    perms: tuple[Perm, ...]

    def __post_init__(self):
        parabolic = tuple(self.parabolic)
        perms = tuple(tuple(p) for p in self.perms)
        if sum(parabolic) != self.N or any(k < 1 for k in parabolic):
            raise InputError(f"composition {parabolic} does not partition {self.N}")
        for p in perms:
            if sorted(p) != list(range(1, self.N + 1)):
                raise InputError(f"{p} is not a permutation of 1..{self.N}")
            if not is_kostant(p, parabolic):
                raise NotKostant(f"{p} is not a Kostant representative for {parabolic}")
        object.__setattr__(self, "parabolic", parabolic)
        object.__setattr__(self, "perms", perms)

    @property
    def r(self) -> int:
        return len(self.perms)

    def lengths(self) -> tuple[int, ...]:
        return tuple(length(p) for p in self.perms)


def kostant_reps(N: int, n: int) -> list[Perm]:
    """All Kostant representatives for the parabolic of type (n, N-n),
    in lexicographic order of their one-line notation."""
    if not 1 <= n < N:
        raise InputError(f"need 1 <= n < N, got n={n}, N={N}")
    return kostant_reps_composition((n, N - n))


def kostant_reps_composition(composition: Sequence[int]) -> list[Perm]:
    N = sum(composition)
    out = []
    # w^{-1} is determined by which set of values each block receives
    def assign(remaining: frozenset, sizes: tuple[int, ...]) -> Iterable[list[int]]:
        if not sizes:
            yield []
            return
        for chosen in itertools.combinations(sorted(remaining), sizes[0]):
            for rest in assign(remaining - set(chosen), sizes[1:]):
                yield list(chosen) + rest
    for inv in assign(frozenset(range(1, N + 1)), tuple(composition)):
        out.append(inverse(tuple(inv)))
    return sorted(out)


def longest_kostant(composition: Sequence[int]) -> Perm:
    """Longest Kostant representative: the first block gets the largest values."""
    N, inv = sum(composition), []
    top = N
    for size in composition:
        inv.extend(range(top - size + 1, top + 1))
        top -= size
    return inverse(tuple(inv))


def _maximal(w: KostantElement) -> tuple[int, int]:
    if len(w.parabolic) != 2:
        raise InputError(f"expected a maximal parabolic, got composition {w.parabolic}")
    return w.parabolic


def dot_action(w: KostantElement, lam: Weight) -> Weight:
    if lam.n != w.N:
        raise RankMismatch(f"weight has rank {lam.n}, Weyl element acts on rank {w.N}")
    if lam.r != w.r:
        raise RankMismatch(f"weight has {lam.r} embeddings, Weyl element has {w.r}")
    return Weight(lam.n, lam.r, tuple(dot_vector(p, b) for p, b in zip(w.perms, lam.coords)))


def to_associate(w: KostantElement) -> KostantElement:
    """w' = w_P w, a Kostant representative for the associate type (n', n)."""
    n, n_prime = _maximal(w)
    w_p = longest_kostant((n_prime, n))
    return KostantElement(w.N, (n_prime, n), tuple(compose(w_p, p) for p in w.perms))


def to_dual(w: KostantElement) -> KostantElement:
    """w^∨ = w_M w w_G, again a Kostant representative for the same type."""
    w_m, w_g = block_reversal(w.parabolic), longest_element(w.N)
    return KostantElement(w.N, w.parabolic, tuple(compose(w_m, compose(p, w_g)) for p in w.perms))


def tensor_weight(mu: Weight, mup: Weight) -> Weight:
    """μ⊗μ' as a weight of GL(n+n'): concatenated coordinates per embedding."""
    if mu.r != mup.r:
        raise InputError(f"field degrees differ: {mu.r} vs {mup.r}")
    return Weight(mu.n + mup.n, mu.r, tuple(b + bp for b, bp in zip(mu.coords, mup.coords)))


# ------------------------------------------------------- balanced representatives

class BalancedStatus(str, enum.Enum):
    BALANCED = "Balanced"
    EXISTS_UNBALANCED = "ExistsUnbalanced"
    COLLISION = "Collision"


@dataclass(frozen=True)
class BalancedSearchResult:
    status: BalancedStatus
    element: KostantElement | None
    lengths: tuple[int | None, ...]
    dominant_lambda: Weight | None
    collisions: tuple[tuple[tuple[int, int], ...], ...]  # per embedding, 1-based position pairs


def _collisions(shifted: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(
        (i + 1, j + 1)
        for i in range(len(shifted))
        for j in range(i + 1, len(shifted))
        if shifted[i] == shifted[j]
    )


def find_balanced(mu: Weight, mup: Weight) -> BalancedSearchResult:
    """Locate the Kostant element making w^{-1}·(μ⊗μ') dominant and decide
    whether it has the balanced length n·n'/2 in every embedding."""
    require_pure(mu, mup)
    lam = tensor_weight(mu, mup)
    N, n, n_prime = lam.n, mu.n, mup.n
    two_rho = rho_doubled(N)
    shifted = [tuple(2 * x + y for x, y in zip(b, two_rho)) for b in lam.coords]
    collisions = tuple(_collisions(s) for s in shifted)
    if any(collisions):
        lengths = tuple(
            None if c else sum(1 for i in range(n) for j in range(n, N) if s[i] < s[j])
            for s, c in zip(shifted, collisions)
        )
        return BalancedSearchResult(BalancedStatus.COLLISION, None, lengths, None, collisions)
    if (n * n_prime) % 2:
        raise OddDimension(f"n·n' = {n * n_prime} is odd, so no balanced length exists")
    perms = []
    for s in shifted:
        # (w^{-1} x)_i = x_{w(i)} is decreasing, so w(i) is the position of the i-th largest entry
        perms.append(tuple(m + 1 for m in sorted(range(N), key=lambda m: -s[m])))
    element = KostantElement(N, (n, n_prime), tuple(perms))
    lengths = tuple(
        sum(1 for i in range(n) for j in range(n, N) if s[i] < s[j]) for s in shifted
    )
    dominant = dot_action(KostantElement(N, (1,) * N, tuple(inverse(p) for p in perms)), lam)
    balanced = all(x * 2 == n * n_prime for x in lengths)
    status = BalancedStatus.BALANCED if balanced else BalancedStatus.EXISTS_UNBALANCED
    return BalancedSearchResult(status, element, lengths, dominant, collisions)


# ------------------------------------------------------- residual representative

@dataclass(frozen=True)
class ResidualKostant:
    u: int
    v: int
    w: KostantElement
    w_reflected: KostantElement
    length: int
    predicted_length: Fraction
    integral: bool


def w_uv(u: int, v: int) -> ResidualKostant:
    """The Kostant representative w_{u,v} for the parabolic with v blocks of
    size u, and its reflection w' with w_{u,v} = w_P w'."""
    if u < 1 or v < 1:
        raise InputError("u and v must be positive")
    N = u * v
    one_line = [0] * N
    for j in range(1, u + 1):
        for i in range(1, v + 1):
            one_line[i + (j - 1) * v - 1] = j + (i - 1) * u
    w = tuple(one_line)
    composition = (u,) * v
    w_p = longest_kostant(composition)
    w_prime = compose(inverse(w_p), w)
    predicted = Fraction(N * (u - 1) * (v - 1), 4)
    return ResidualKostant(
        u,
        v,
        KostantElement(N, composition, (w,)),
        KostantElement(N, composition, (w_prime,)),
        length(w),
        predicted,
        predicted.denominator == 1,
    )


@dataclass(frozen=True)
class DeltaCoefficients:
    """Block means of w(λ+ρ) for w_{u,v} and its reflection, with the
    per-block semisimple parts."""

    means: tuple[Fraction, ...]
    means_reflected: tuple[Fraction, ...]
    semisimple: tuple[tuple[Fraction, ...], ...]
    semisimple_reflected: tuple[tuple[Fraction, ...], ...]


def _block_shape_ok(b: Sequence[int], u: int, v: int) -> bool:
    for blk in range(u):
        chunk = b[blk * v:(blk + 1) * v]
        if len(set(chunk)) != 1:
            return False
    return all(b[k * v - 1] >= b[k * v] for k in range(1, u))


def delta_coefficients(u: int, v: int, lam: Weight) -> tuple[DeltaCoefficients, ...]:
    if lam.n != u * v:
        raise ShapeMismatch(f"weight has rank {lam.n}, expected {u * v}")
    for b in lam.coords:
        if not _block_shape_ok(b, u, v):
            raise ShapeMismatch(
                f"{b} is not constant on consecutive blocks of size {v} with nonincreasing steps"
            )
    res = w_uv(u, v)
    N = u * v
    rho = [Fraction(x, 2) for x in rho_doubled(N)]

    def split(p: Perm, b) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
        x = act(p, [bi + ri for bi, ri in zip(b, rho)])
        means, semis = [], []
        for blk in range(v):
            chunk = x[blk * u:(blk + 1) * u]
            mean = sum(chunk, Fraction(0)) / u
            means.append(mean)
            semis.append(tuple(c - mean for c in chunk))
        return tuple(means), tuple(semis)

    out = []
    for b in lam.coords:
        m, s = split(res.w.perms[0], b)
        mr, sr = split(res.w_reflected.perms[0], b)
        out.append(DeltaCoefficients(m, mr, s, sr))
    return tuple(out)


def delta_coefficient_check(u: int, v: int, lam: Weight) -> bool:
    """Consecutive block exponents of w_{u,v}(λ+ρ) step down by 1, those of the
    reflected element step up by 1, and all blocks share one semisimple part."""
    for dc in delta_coefficients(u, v, lam):
        if any(dc.means[i] - dc.means[i + 1] != 1 for i in range(v - 1)):
            return False
        if any(dc.means_reflected[i] - dc.means_reflected[i + 1] != -1 for i in range(v - 1)):
            return False
        if len(set(dc.semisimple)) != 1 or len(set(dc.semisimple_reflected)) != 1:
            return False
        if dc.semisimple[0] != dc.semisimple_reflected[0]:
            return False
    return True

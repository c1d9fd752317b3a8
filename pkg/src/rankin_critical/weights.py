"""Highest weights of GL(n) over a totally real field of degree r.

A weight stores one integer vector ``b`` per embedding (standard coordinates).
The fundamental view records ``a_i = b_i - b_{i+1} + 1``, the mean ``d`` and the
last coordinate ``r_lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._exact import to_fraction
from .errors import (
    DegenerateIndexRange,
    InputError,
    NonIntegralResult,
    NotPure,
)

IntVec = tuple[int, ...]


def _int_vector(values, length: int) -> IntVec:
    vec = []
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"weight coordinate {x!r} is not an integer")
        vec.append(x)
    if len(vec) != length:
        raise InputError(f"expected a vector of length {length}, got {len(vec)}")
    return tuple(vec)


@dataclass(frozen=True)
class Weight:
    n: int
    r: int
    coords: tuple[IntVec, ...]

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise InputError("rank and field degree must be positive")
        coords = tuple(_int_vector(b, self.n) for b in self.coords)
        if len(coords) != self.r:
            raise InputError(f"expected {self.r} embeddings, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def single(cls, *b: int) -> "Weight":
        """One-embedding weight from its standard coordinates."""
        return cls(len(b), 1, (tuple(b),))

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[int]]) -> "Weight":
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            raise InputError("at least one embedding is required")
        return cls(len(vectors[0]), len(vectors), tuple(vectors))

    def means(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(sum(b), self.n) for b in self.coords)


@dataclass(frozen=True)
class FundamentalCoords:
    a: tuple[tuple[Fraction, ...], ...]
    d: tuple[Fraction, ...]
    r_lambda: tuple[Fraction, ...]

    @classmethod
    def from_a_d(cls, a, d) -> "FundamentalCoords":
        """Build from the a-vectors and means; r_lambda is derived."""
        a = tuple(tuple(to_fraction(x) for x in vec) for vec in a)
        d = tuple(to_fraction(x) for x in d)
        if len(a) != len(d) or not a:
            raise InputError("a and d must list the same, nonzero number of embeddings")
        if len({len(vec) for vec in a}) != 1:
            raise InputError("all a-vectors must have the same length")
        n = len(a[0]) + 1
        r_lambda = tuple(
            (n * dt - sum(i * (x - 1) for i, x in enumerate(vec, start=1))) / n
            for vec, dt in zip(a, d)
        )
        return cls(a, d, r_lambda)

    @property
    def n(self) -> int:
        return len(self.a[0]) + 1

    @property
    def r(self) -> int:
        return len(self.a)

    def standard_rational(self) -> tuple[tuple[Fraction, ...], ...]:
        """Standard coordinates as rationals, integral or not."""
        out = []
        for vec, rl in zip(self.a, self.r_lambda):
            b = [rl]
            for x in reversed(vec):
                b.append(b[-1] + x - 1)
            out.append(tuple(reversed(b)))
        return tuple(out)

    def is_integral(self) -> bool:
        return all(
            x.denominator == 1 for vec in self.standard_rational() for x in vec
        )


def to_fundamental(w: Weight) -> FundamentalCoords:
    a = tuple(
        tuple(Fraction(b[i] - b[i + 1] + 1) for i in range(w.n - 1)) for b in w.coords
    )
    return FundamentalCoords.from_a_d(a, w.means())


def from_fundamental(f: FundamentalCoords, n: int | None = None, r: int | None = None) -> Weight:
    if n is not None and n != f.n:
        raise InputError(f"rank {n} does not match the fundamental data (rank {f.n})")
    if r is not None and r != f.r:
        raise InputError(f"field degree {r} does not match the fundamental data ({f.r})")
    rational = f.standard_rational()
    for tau, vec in enumerate(rational):
        if any(x.denominator != 1 for x in vec):
            raise NonIntegralResult(
                f"embedding {tau}: standard coordinates {[str(x) for x in vec]} are not integral"
            )
    return Weight(f.n, f.r, tuple(tuple(int(x) for x in vec) for vec in rational))


def is_integral(w: Weight | FundamentalCoords) -> bool:
    if isinstance(w, FundamentalCoords):
        return w.is_integral()
    return True


def is_dominant(w: Weight) -> bool:
    return all(b[i] >= b[i + 1] for b in w.coords for i in range(w.n - 1))


def is_algebraic(w: Weight) -> bool:
    return len(set(w.means())) == 1


def is_pure(w: Weight) -> bool:
    """Dominant, algebraic and essentially self-dual with one purity weight."""
    if not is_dominant(w) or not is_algebraic(w):
        return False
    sums = {b[i] + b[w.n - 1 - i] for b in w.coords for i in range(w.n)}
    return len(sums) == 1


def purity_weight(w: Weight) -> int:
    """The integer 2d of a pure weight."""
    require_pure(w)
    return sum(w.coords[0]) * 2 // w.n


def require_pure(*weights: Weight) -> None:
    for w in weights:
        if not is_pure(w):
            raise NotPure(f"weight {[list(b) for b in w.coords]} is not pure")


@dataclass(frozen=True)
class CuspidalParams:
    ell: tuple[IntVec, ...]
    motivic_weight: int
    purity_weight_doubled: int


def _ell_vector(b: IntVec) -> IntVec:
    n = len(b)
    a = [b[i] - b[i + 1] + 1 for i in range(n - 1)]
    ell = [sum(a)]
    for aj in a:
        ell.append(ell[-1] - 2 * aj)
    return tuple(ell)


def cuspidal_params(w: Weight) -> CuspidalParams:
    require_pure(w)
    ell = tuple(_ell_vector(b) for b in w.coords)
    return CuspidalParams(ell, max(v[0] for v in ell), purity_weight(w))


def dual_weight(w: Weight) -> Weight:
    return Weight(w.n, w.r, tuple(tuple(-x for x in reversed(b)) for b in w.coords))


def tate_twist(w: Weight, m: int) -> Weight:
    return Weight(w.n, w.r, tuple(tuple(x - m for x in b) for b in w.coords))


def _check_same_field(mu: Weight, mup: Weight) -> None:
    if mu.r != mup.r:
        raise InputError(f"field degrees differ: {mu.r} vs {mup.r}")


def cuspidal_width(mu: Weight, mup: Weight) -> int:
    _check_same_field(mu, mup)
    ell, ellp = cuspidal_params(mu).ell, cuspidal_params(mup).ell
    return min(abs(x - y) for lt, lpt in zip(ell, ellp) for x in lt for y in lpt)


def cuspidal_width_plus(mu: Weight, mup: Weight) -> int:
    """Width restricted to the strictly positive halves i <= (n-1)/2, j <= (n'-1)/2."""
    _check_same_field(mu, mup)
    ih, jh = (mu.n - 1) // 2, (mup.n - 1) // 2
    if ih == 0 or jh == 0:
        raise DegenerateIndexRange("restricted width has an empty index range (a factor of rank below 3)")
    ell, ellp = cuspidal_params(mu).ell, cuspidal_params(mup).ell
    return min(abs(lt[i] - lpt[j]) for lt, lpt in zip(ell, ellp) for i in range(ih) for j in range(jh))


def pure_weight(ells: Sequence[Sequence[int]], two_d: int) -> Weight:
    """The pure weight with the given cuspidal parameters (one full
    antisymmetric vector per embedding) and purity weight 2d.

    Raises NonIntegralResult when the parity condition fails.
    """
    vectors = []
    for ell in ells:
        ell = list(ell)
        n = len(ell)
        if n == 0 or any(ell[i] != -ell[n - 1 - i] for i in range(n)):
            raise InputError(f"cuspidal parameters {ell} are not antisymmetric")
        if any(ell[i] <= ell[i + 1] for i in range(n - 1)):
            raise InputError(f"cuspidal parameters {ell} are not strictly decreasing")
        if any((ell[i] - ell[i + 1]) % 2 for i in range(n - 1)):
            raise NonIntegralResult(f"cuspidal parameters {ell} have mixed parity")
        a = [(ell[i] - ell[i + 1]) // 2 for i in range(n - 1)]
        f = FundamentalCoords.from_a_d((a,), (Fraction(two_d, 2),))
        vectors.append(from_fundamental(f).coords[0])
    return Weight.from_vectors(vectors)

"""Cohomological degree numerology for GL(n) over a field of degree r."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, OddDimension


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    r: int
    b: int
    t: int
    t_tilde: int


def degree_profile(n: int, r: int = 1) -> DegreeProfile:
    if n < 1 or r < 1:
        raise InputError("n and r must be positive")
    bottom = n * n // 4
    t = r * (bottom + (n + 1) // 2 - 1)
    return DegreeProfile(n, r, r * bottom, t, t + r - 1)


@dataclass(frozen=True)
class DegreeIdentities:
    n: int
    n_prime: int
    r: int
    half_dim: int  # r·n·n'/2
    bottom_lhs: int
    bottom_rhs: int
    top_lhs: int
    top_rhs: int

    @property
    def holds(self) -> bool:
        return self.bottom_lhs == self.bottom_rhs and self.top_lhs == self.top_rhs


def degree_identities(n: int, n_prime: int, r: int = 1) -> DegreeIdentities:
    """b_n + b_n' + r·nn'/2 = b_N and t̃_n + t̃_n' + r·nn'/2 = t̃_N - 1."""
    if (n * n_prime) % 2:
        raise OddDimension(f"n·n' = {n * n_prime} is odd")
    p, pp, pN = degree_profile(n, r), degree_profile(n_prime, r), degree_profile(n + n_prime, r)
    half = r * n * n_prime // 2
    return DegreeIdentities(
        n, n_prime, r, half, p.b + pp.b + half, pN.b, p.t_tilde + pp.t_tilde + half, pN.t_tilde - 1
    )


@dataclass(frozen=True)
class AqLowestDegree:
    u: int
    v: int
    degree: Fraction
    integral: bool
    bottom_degree: int  # b_N over Q


def aql_lowest_degree(u: int, v: int) -> AqLowestDegree:
    """Lowest degree v·⌊u²/4⌋ + N(u-1)(v-1)/4 of the module attached to w_{u,v}."""
    if u < 1 or v < 1:
        raise InputError("u and v must be positive")
    N = u * v
    q = v * (u * u // 4) + Fraction(N * (u - 1) * (v - 1), 4)
    return AqLowestDegree(u, v, q, q.denominator == 1, degree_profile(N).b)

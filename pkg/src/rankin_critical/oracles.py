"""Brute-force and symbolic cross-checks for the primary operations.

Each oracle recomputes its answer by a different route: exhaustive search
over S_N, the explicit per-case Γ-factor products with poles read off from
sympy's Gamma, and symbolic Γ-ratio evaluation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

import sympy

from .errors import InputError, NotCritical, NotDisjoint, TooLarge
from .weights import Weight, cuspidal_params, cuspidal_width, require_pure
from .weyl import BalancedStatus, find_balanced, kostant_reps

MAX_KOSTANT_N = 10
MAX_BALANCED_N = 9


@dataclass(frozen=True)
class OracleReport:
    subject: str
    agreed: bool
    counterexample: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.agreed and self.counterexample is None:
            raise ValueError("a disagreeing report must carry a counterexample")


# ----------------------------------------------------------------- S_N search

@lru_cache(maxsize=None)
def _all_perms(N: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(p) for p in itertools.permutations(range(1, N + 1)))


def _inverse_by_search(p: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p.index(k) + 1 for k in range(1, len(p) + 1))


def _is_positive_root(vec: list[int]) -> bool:
    for x in vec:
        if x:
            return x > 0
    raise ValueError("zero vector is not a root")


def _root_kostant(p: tuple[int, ...], composition: tuple[int, ...]) -> bool:
    """w^{-1}α > 0 for every simple root α of the Levi, using explicit vectors."""
    N = len(p)
    inv = _inverse_by_search(p)
    start = 0
    for size in composition:
        for k in range(start, start + size - 1):
            alpha = [0] * N
            alpha[k], alpha[k + 1] = 1, -1
            image = [0] * N
            for m in range(N):  # w^{-1} e_m = e_{w^{-1}(m)}
                image[inv[m] - 1] += alpha[m]
            if not _is_positive_root(image):
                return False
        start += size
    return True


def _inversions(p: tuple[int, ...]) -> int:
    return sum(p[i] > p[j] for i, j in itertools.combinations(range(len(p)), 2))


def brute_kostant(N: int, n: int) -> set[tuple[int, ...]]:
    if N > MAX_KOSTANT_N:
        raise TooLarge(f"N = {N} exceeds the exhaustive bound {MAX_KOSTANT_N}")
    if not 1 <= n < N:
        raise InputError(f"need 1 <= n < N, got n={n}, N={N}")
    return {p for p in _all_perms(N) if _root_kostant(p, (n, N - n))}


def check_kostant(N: int, n: int) -> OracleReport:
    brute = brute_kostant(N, n)
    fast = kostant_reps(N, n)
    agreed = brute == set(fast) and len(fast) == len(brute)
    diff = None if agreed else {"missing": sorted(brute - set(fast)), "extra": sorted(set(fast) - brute)}
    return OracleReport(f"kostant N={N} n={n}", agreed, diff, {"count": len(brute)})


@lru_cache(maxsize=None)
def dominant_makers(b: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All w in S_N with w^{-1}·b dominant, by exhaustive search."""
    N = len(b)
    two_rho = [N + 1 - 2 * i for i in range(1, N + 1)]
    shifted = [2 * x + r for x, r in zip(b, two_rho)]
    out = []
    for w in _all_perms(N):
        inv = _inverse_by_search(w)
        # w^{-1} moves the entry at position m to position w^{-1}(m)
        moved = [0] * N
        for m in range(N):
            moved[inv[m] - 1] = shifted[m]
        y = [moved[k] - two_rho[k] for k in range(N)]
        if all(y[k] >= y[k + 1] for k in range(N - 1)):
            out.append(w)
    return tuple(out)


def brute_balanced(mu: Weight, mup: Weight) -> OracleReport:
    require_pure(mu, mup)
    N, n = mu.n + mup.n, mu.n
    if N > MAX_BALANCED_N:
        raise TooLarge(f"N = {N} exceeds the exhaustive bound {MAX_BALANCED_N}")
    per_embedding = []
    for b, bp in zip(mu.coords, mup.coords):
        makers = dominant_makers(tuple(b) + tuple(bp))
        per_embedding.append(
            [
                {"perm": w, "kostant": _root_kostant(w, (n, N - n)), "length": _inversions(w)}
                for w in makers
            ]
        )
    counts = [len(e) for e in per_embedding]
    details = {"counts": counts}
    try:
        fast = find_balanced(mu, mup)
    except Exception as exc:  # OddDimension without a collision
        fast_status, fast_perms, fast_lengths = type(exc).__name__, None, None
    else:
        fast_status = fast.status.value
        fast_perms = fast.element.perms if fast.element else None
        fast_lengths = fast.lengths
    problems = []
    if any(c == 0 for c in counts):
        if fast_status != BalancedStatus.COLLISION.value:
            problems.append("no dominant-making element but no collision reported")
    else:
        if any(c != 1 for c in counts):
            problems.append(f"dominant-making elements not unique: {counts}")
        elif not all(e[0]["kostant"] for e in per_embedding):
            problems.append("dominant-making element is not a Kostant representative")
        else:
            perms = tuple(e[0]["perm"] for e in per_embedding)
            lengths = tuple(e[0]["length"] for e in per_embedding)
            balanced = all(2 * x == n * (N - n) for x in lengths)
            expected = BalancedStatus.BALANCED.value if balanced else BalancedStatus.EXISTS_UNBALANCED.value
            if (n * (N - n)) % 2:
                expected = "OddDimension"
            if fast_status != expected:
                problems.append(f"status {fast_status} but brute force says {expected}")
            if fast_perms is not None and fast_perms != perms:
                problems.append(f"element {fast_perms} but brute force found {perms}")
            if fast_lengths is not None and tuple(fast_lengths) != lengths:
                problems.append(f"lengths {fast_lengths} but brute force found {lengths}")
            details["lengths"] = list(lengths)
    subject = f"balanced {[list(b) for b in mu.coords]} x {[list(b) for b in mup.coords]}"
    if problems:
        return OracleReport(subject, False, {"problems": problems, "brute": per_embedding}, details)
    return OracleReport(subject, True, None, details)


# ------------------------------------------------------------------- Γ scan

@lru_cache(maxsize=None)
def _gamma_has_pole(z_doubled: int) -> bool:
    """Whether sympy's Gamma is infinite at z_doubled/2."""
    return sympy.gamma(sympy.Rational(z_doubled, 2)) is sympy.zoo


def _gamma_c_pole(arg_doubled: int) -> bool:
    return _gamma_has_pole(arg_doubled)


def _gamma_r_pole(arg_doubled: int) -> bool:
    # Γ_R(z) = π^{-z/2} Γ(z/2)
    if arg_doubled % 2:
        return False
    return _gamma_has_pole(arg_doubled // 2)


def displayed_factors(mu: Weight, mup: Weight, eps0: int | None = None) -> list[tuple[str, int]]:
    """Γ-factors of L_∞(s, σ×σ'^∨) per the explicit per-parity products, as
    (kind, 2·offset) with the argument s + d' - d + offset."""
    require_pure(mu, mup)
    d2 = int(2 * (mup.means()[0] - mu.means()[0]))
    out = []
    odd_odd = mu.n % 2 and mup.n % 2
    if odd_odd and eps0 not in (0, 1):
        raise InputError("both ranks are odd: eps0 must be 0 or 1")
    even, other = (mup, mu) if mu.n % 2 and not odd_odd else (mu, mup)
    for ell_e, ell_o in zip(cuspidal_params(even).ell, cuspidal_params(other).ell):
        if odd_odd:
            ih, jh = (mu.n - 1) // 2, (mup.n - 1) // 2
            ell, ellp = ell_e, ell_o
            out.append(("R", d2 + 2 * eps0))
            out += [("C", d2 + ell[i]) for i in range(ih)]
            out += [("C", d2 + ellp[j]) for j in range(jh)]
            for i in range(ih):
                for j in range(jh):
                    out.append(("C", d2 + ell[i] + ellp[j]))
                    out.append(("C", d2 + abs(ell[i] - ellp[j])))
            continue
        ih = even.n // 2
        if other.n % 2:
            out += [("C", d2 + ell_e[i]) for i in range(ih)]
            jh = (other.n - 1) // 2
        else:
            jh = other.n // 2
        for i in range(ih):
            for j in range(jh):
                out.append(("C", d2 + ell_e[i] + ell_o[j]))
                out.append(("C", d2 + abs(ell_e[i] - ell_o[j])))
    return out


def gamma_pole_scan(
    mu: Weight, mup: Weight, window: Iterable[int], eps0: int | None = None
) -> set[int]:
    """Doubled points m in the window (and in the parity class of N/2) where
    neither L_∞(s, σ×σ'^∨) at s=m nor L_∞(1-s, σ^∨×σ') at s=m has a pole."""
    require_pure(mu, mup)
    odd_odd = mu.n % 2 and mup.n % 2
    if not odd_odd and cuspidal_width(mu, mup) == 0:
        raise NotDisjoint("cuspidal parameters are not disjoint (width 0)")
    factors = displayed_factors(mu, mup, eps0)
    parity = (mu.n + mup.n) % 2
    d2 = int(2 * (mup.means()[0] - mu.means()[0]))
    regular = set()
    for m2 in window:
        if (m2 - parity) % 2:
            continue
        hit = False
        for kind, off2 in factors:
            direct = m2 + off2
            # the reflected factor flips the sign of d' - d
            reflected = 2 - m2 + off2 - 2 * d2
            pole = _gamma_c_pole if kind == "C" else _gamma_r_pole
            if pole(direct) or pole(reflected):
                hit = True
                break
        if not hit:
            regular.add(m2)
    return regular


# -------------------------------------------------------------- Γ-ratio

@lru_cache(maxsize=None)
def _gamma_c_ratio(a_doubled: int) -> tuple[Fraction, int]:
    """Γ_C(a)/Γ_C(a+1) = c·(2π)^e, evaluated symbolically."""
    a = sympy.Rational(a_doubled, 2)

    def gamma_c(z):
        return 2 * (2 * sympy.pi) ** (-z) * sympy.gamma(z)

    expr = sympy.simplify(gamma_c(a) / gamma_c(a + 1))
    if expr.has(sympy.zoo, sympy.nan) or expr == 0:
        raise NotCritical(f"Γ_C ratio at {a} is singular")
    e = sympy.Poly(expr, sympy.pi).degree()
    c = sympy.nsimplify(expr / (2 * sympy.pi) ** e)
    if not c.is_Rational:
        raise ValueError(f"unexpected transcendental coefficient {c}")
    return Fraction(int(c.p), int(c.q)), e


def gamma_ratio_symbolic(mu: Weight, mup: Weight) -> tuple[Fraction, int]:
    """L_∞(-N/2)/L_∞(1-N/2) over all places as (rational, exponent of 2π)."""
    N = mu.n + mup.n
    if (mu.n * mup.n) % 2:
        raise NotCritical("needs a factor of even rank")
    regular = gamma_pole_scan(mu, mup, (-N, 2 - N))
    if regular != {-N, 2 - N}:
        raise NotCritical(f"-N/2 and 1-N/2 are not both critical (N = {N})")
    total, exponent = Fraction(1), 0
    for kind, off2 in displayed_factors(mu, mup):
        c, e = _gamma_c_ratio(-N + off2)
        total *= c
        exponent += e
    return total, exponent

"""Hodge types, archimedean Γ-factors and critical sets for L(s, σ × σ'^∨).

Half-integers (critical points, d - d', the β, p̃, ã quantities) are stored
doubled.  For a pair of pure weights write Δ = d - d' and N = n + n'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import (
    DegenerateIndexRange,
    InputError,
    MiddleHodgeType,
    NotCritical,
    NotDisjoint,
    NotOddOdd,
)
from .weights import (
    Weight,
    cuspidal_params,
    cuspidal_width,
    cuspidal_width_plus,
    require_pure,
)
from .weyl import BalancedStatus, KostantElement, find_balanced

Pair = tuple[int, int]


# ------------------------------------------------------------------ Hodge sets

@dataclass(frozen=True)
class HodgeSet:
    pairs: tuple[tuple[Pair, ...], ...]
    purity_weight: int

    def __post_init__(self):
        for emb in self.pairs:
            for p, q in emb:
                if p + q != self.purity_weight:
                    raise InputError(f"Hodge pair {(p, q)} does not have weight {self.purity_weight}")

    def all_pairs(self) -> list[Pair]:
        return [pq for emb in self.pairs for pq in emb]

    def has_middle(self) -> bool:
        return any(p == q for p, q in self.all_pairs())


def _sorted_pairs(pairs: Iterable[Pair]) -> tuple[Pair, ...]:
    return tuple(sorted(pairs, reverse=True))


def hodge_eff(mu: Weight) -> HodgeSet:
    cp = cuspidal_params(mu)
    w = cp.motivic_weight
    pairs = tuple(
        _sorted_pairs(((l + w) // 2, (w - l) // 2) for l in ell) for ell in cp.ell
    )
    return HodgeSet(pairs, w)


def hodge_tensor(mu: Weight, mup: Weight) -> HodgeSet:
    if mu.r != mup.r:
        raise InputError(f"field degrees differ: {mu.r} vs {mup.r}")
    cp, cpp = cuspidal_params(mu), cuspidal_params(mup)
    w = cp.motivic_weight + cpp.motivic_weight
    pairs = tuple(
        _sorted_pairs(((l + lp + w) // 2, (w - l - lp) // 2) for l in ell for lp in ellp)
        for ell, ellp in zip(cp.ell, cpp.ell)
    )
    return HodgeSet(pairs, w)


# --------------------------------------------------------------- critical sets

@dataclass(frozen=True)
class CriticalSet:
    doubled_points: tuple[int, ...]
    parity_doubled: int

    def __post_init__(self):
        pts = tuple(sorted(self.doubled_points))
        if any((x - self.parity_doubled) % 2 for x in pts):
            raise InputError("critical points do not share the declared parity")
        object.__setattr__(self, "doubled_points", pts)

    def points(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled_points)

    def __contains__(self, m) -> bool:
        return 2 * Fraction(m) in self.doubled_points

    def __len__(self) -> int:
        return len(self.doubled_points)

    def is_progression(self) -> bool:
        """True when consecutive points differ by exactly 1."""
        pts = self.doubled_points
        return all(b - a == 2 for a, b in zip(pts, pts[1:]))

    def shifted(self, shift) -> "CriticalSet":
        s2 = 2 * Fraction(shift)
        if s2.denominator != 1:
            raise InputError(f"shift {shift} is not a half-integer")
        return CriticalSet(tuple(x + int(s2) for x in self.doubled_points), (self.parity_doubled + int(s2)) % 2)


def critical_set_motivic(h: HodgeSet) -> CriticalSet:
    W = h.purity_weight
    if h.has_middle():
        raise MiddleHodgeType(f"a Hodge pair (p, p) with 2p = {W} is present")
    below = [p for p, _ in h.all_pairs() if 2 * p < W]
    if not below:
        raise InputError("Hodge set has no pair with p < w/2")
    p_max = max(below)
    q_min = W - p_max
    return CriticalSet(tuple(2 * m for m in range(p_max + 1, q_min + 1)), 0)


def delta(mu: Weight, mup: Weight) -> Fraction:
    """Δ = d - d' (both weights pure, so the means are embedding independent)."""
    return mu.means()[0] - mup.means()[0]


def _require_disjoint(mu: Weight, mup: Weight) -> int:
    width = cuspidal_width(mu, mup)
    if width == 0:
        raise NotDisjoint("cuspidal parameters are not disjoint (width 0)")
    return width


def critical_set_automorphic(mu: Weight, mup: Weight) -> CriticalSet:
    width = _require_disjoint(mu, mup)
    d2 = int(2 * delta(mu, mup))
    lo, hi = 2 - width + d2, width + d2
    N = mu.n + mup.n
    crit = CriticalSet(tuple(range(lo, hi + 1, 2)), N % 2)
    return crit


# ------------------------------------------------------------- Γ-factor inventory

@dataclass(frozen=True)
class GammaFactor:
    """Γ_C or Γ_R evaluated at (s + shift) on the direct side or at
    (1 - s + shift) on the reflected side; ``shift_doubled`` = 2·shift."""

    kind: str  # "C" or "R"
    shift_doubled: int
    reflected: bool
    embedding: int
    source: str

    def argument_doubled(self, s_doubled: int) -> int:
        if self.reflected:
            return 2 - s_doubled + self.shift_doubled
        return s_doubled + self.shift_doubled

    def has_pole_at(self, s_doubled: int) -> bool:
        a = self.argument_doubled(s_doubled)
        if self.kind == "C":
            return a <= 0 and a % 2 == 0
        return a <= 0 and a % 4 == 0


def _langlands_pieces(ell: tuple[int, ...]) -> list[tuple[str, int]]:
    """Pieces I(ℓ_i), i <= n/2, plus a sign character when n is odd."""
    n = len(ell)
    pieces = [("I", ell[i]) for i in range(n // 2)]
    if n % 2:
        pieces.append(("sgn", 0))
    return pieces


def _tensor_pieces(left, right, eps0: int | None) -> list[tuple[str, int, str]]:
    out = []
    for kind, k in left:
        for kind_p, kp in right:
            label = f"{kind}({k})x{kind_p}({kp})" if kind == "I" or kind_p == "I" else "sgn x sgn"
            if kind == "I" and kind_p == "I":
                out.append(("I", k + kp, label))
                out.append(("I", abs(k - kp), label))
            elif kind == "I":
                out.append(("I", k, label))
            elif kind_p == "I":
                out.append(("I", kp, label))
            else:
                if eps0 is None:
                    raise InputError("both ranks are odd: the sign parity eps0 is required")
                out.append(("sgn", eps0, label))
    return out


@dataclass(frozen=True)
class GammaInventory:
    factors: tuple[GammaFactor, ...]

    def arguments_at(self, s_doubled: int) -> list[tuple[str, bool, int]]:
        return [(f.kind, f.reflected, f.argument_doubled(s_doubled)) for f in self.factors]

    def poles_at(self, s_doubled: int) -> list[GammaFactor]:
        return [f for f in self.factors if f.has_pole_at(s_doubled)]

    def is_regular_at(self, s_doubled: int) -> bool:
        return not self.poles_at(s_doubled)


def gamma_inventory(mu: Weight, mup: Weight, eps0: int | None = None) -> GammaInventory:
    """Γ-factors of L_∞(s, σ×σ'^∨) and of L_∞(1-s, σ^∨×σ'), read off from
    the tensor product of the archimedean Langlands parameters.

    I(k) contributes Γ_C(s + d' - d + k/2) (I(0) = 1 ⊕ sgn gives Γ_C(s) too);
    a sign character sgn^e contributes Γ_R(s + d' - d + e).
    """
    require_pure(mu, mup)
    odd_odd = mu.n % 2 == 1 and mup.n % 2 == 1
    if not odd_odd:
        _require_disjoint(mu, mup)
    elif eps0 not in (0, 1):
        raise InputError("both ranks are odd: eps0 must be 0 or 1")
    d2 = int(2 * delta(mu, mup))
    factors = []
    cp, cpp = cuspidal_params(mu), cuspidal_params(mup)
    for tau, (ell, ellp) in enumerate(zip(cp.ell, cpp.ell)):
        pieces = _tensor_pieces(_langlands_pieces(ell), _langlands_pieces(ellp), eps0 if odd_odd else None)
        for reflected, base in ((False, -d2), (True, d2)):
            for kind, k, label in pieces:
                if kind == "I":
                    factors.append(GammaFactor("C", base + k, reflected, tau, label))
                else:
                    factors.append(GammaFactor("R", base + 2 * k, reflected, tau, label))
    return GammaInventory(tuple(factors))


def is_regular_at(mu: Weight, mup: Weight, m_doubled: int, eps0: int | None = None) -> bool:
    return gamma_inventory(mu, mup, eps0).is_regular_at(m_doubled)


# ----------------------------------------------------------- archimedean ratio

@dataclass(frozen=True)
class ArchimedeanRatio:
    """L_∞(-N/2)/L_∞(1-N/2) = rational · (2π)^exponent."""

    rational: Fraction
    exponent: int
    per_place: tuple[Fraction, ...]
    exponent_per_place: int
    swapped: bool


def archimedean_ratio(mu: Weight, mup: Weight) -> ArchimedeanRatio:
    N = mu.n + mup.n
    if (mu.n * mup.n) % 2:
        raise NotCritical("the ratio formula needs a factor of even rank")
    crit = critical_set_automorphic(mu, mup)
    if -N not in crit.doubled_points or 2 - N not in crit.doubled_points:
        raise NotCritical(f"-N/2 and 1-N/2 are not both critical (N = {N})")
    swapped = mu.n % 2 == 1
    even, other = (mup, mu) if swapped else (mu, mup)
    d2 = int(2 * delta(mu, mup))  # Δ keeps its orientation under the swap
    per_place = []
    for ell, ellp in zip(cuspidal_params(even).ell, cuspidal_params(other).ell):
        prod = Fraction(1)
        for i in range(even.n // 2):
            for lp in ellp:
                prod *= Fraction(-N - d2 + abs(ell[i] - lp), 2)
        per_place.append(1 / prod)
    total = Fraction(1)
    for x in per_place:
        total *= x
    e = mu.n * mup.n // 2
    return ArchimedeanRatio(total, mu.r * e, tuple(per_place), e, swapped)


# ------------------------------------------- length-regime quantities β, p̃, ã

@dataclass(frozen=True)
class Appendix1Quantities:
    beta_doubled: tuple[tuple[int, ...], ...]
    beta_prime_doubled: tuple[tuple[int, ...], ...]
    p_tilde_doubled: tuple[int, ...]
    a_tilde_doubled: int

    def regimes(self) -> tuple[str, ...]:
        """Predicted outcome per embedding: collision, balanced, shorter or longer
        (length compared with n·n'/2)."""
        out = []
        a2 = self.a_tilde_doubled
        for beta, beta_p, p2 in zip(self.beta_doubled, self.beta_prime_doubled, self.p_tilde_doubled):
            if any(a2 == bp - b for b in beta for bp in beta_p):
                out.append("collision")
            elif abs(a2) < p2:
                out.append("balanced")
            elif a2 > p2:
                out.append("shorter")
            else:
                out.append("longer")
        return tuple(out)

    def restricted_collision(self) -> tuple[bool, ...]:
        """The sufficient collision test |ã| = |β_i ± β'_j| over the positive
        index ranges S⁺."""
        out = []
        a2 = abs(self.a_tilde_doubled)
        for beta, beta_p in zip(self.beta_doubled, self.beta_prime_doubled):
            ih, jh = (len(beta) + 1) // 2, (len(beta_p) + 1) // 2
            out.append(
                any(
                    a2 in (abs(beta[i] - beta_p[j]), abs(beta[i] + beta_p[j]))
                    for i in range(ih)
                    for j in range(jh)
                )
            )
        return tuple(out)


def appendix1_quantities(mu: Weight, mup: Weight) -> Appendix1Quantities:
    _require_disjoint(mu, mup)
    cp, cpp = cuspidal_params(mu), cuspidal_params(mup)
    ih, jh = (mu.n + 1) // 2, (mup.n + 1) // 2
    p2 = tuple(
        min(abs(ell[i] - ellp[j]) for i in range(ih) for j in range(jh))
        for ell, ellp in zip(cp.ell, cpp.ell)
    )
    a2 = int(2 * delta(mu, mup)) + mu.n + mup.n
    return Appendix1Quantities(cp.ell, cpp.ell, p2, a2)


# ------------------------------------------------------- combinatorial lemma

@dataclass(frozen=True)
class CombLemmaReport:
    cond1: bool
    cond2: bool
    cond3: bool
    witness: KostantElement | None
    status: BalancedStatus
    lengths: tuple[int | None, ...]

    @property
    def agree(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3


def cond2_interval(mu: Weight, mup: Weight) -> tuple[Fraction, Fraction]:
    """Bounds on Δ for which a balanced representative exists."""
    width = _require_disjoint(mu, mup)
    N = mu.n + mup.n
    return Fraction(-N + 2 - width, 2), Fraction(-N - 2 + width, 2)


def comb_lemma(mu: Weight, mup: Weight) -> CombLemmaReport:
    lo, hi = cond2_interval(mu, mup)
    dlt = delta(mu, mup)
    cond2 = lo <= dlt <= hi
    N = mu.n + mup.n
    crit = critical_set_automorphic(mu, mup)
    cond3 = -N in crit.doubled_points and 2 - N in crit.doubled_points
    search = find_balanced(mu, mup)
    cond1 = search.status is BalancedStatus.BALANCED
    return CombLemmaReport(
        cond1, cond2, cond3, search.element if cond1 else None, search.status, search.lengths
    )


def s_shift(mu: Weight, mup: Weight) -> Fraction:
    """Translation taking automorphic critical points to motivic ones."""
    w = cuspidal_params(mu).motivic_weight + cuspidal_params(mup).motivic_weight
    return Fraction(w, 2) - delta(mu, mup)


def m0(mu: Weight, mup: Weight) -> Fraction:
    return Fraction(-(mu.n + mup.n), 2) + s_shift(mu, mup)


# ------------------------------------------------------------ odd x odd ranks

def _require_odd_odd(mu: Weight, mup: Weight) -> None:
    if mu.n % 2 == 0 or mup.n % 2 == 0:
        raise NotOddOdd(f"ranks {mu.n} and {mup.n} are not both odd")


def _smallest_positive_parameter(mu: Weight, mup: Weight) -> int:
    """min(ℓ⁺, smallest positive ℓ_i, smallest positive ℓ'_j) over all embeddings."""
    cp, cpp = cuspidal_params(mu), cuspidal_params(mup)
    lp = cuspidal_width_plus(mu, mup)
    smallest = [ell[(len(ell) - 1) // 2 - 1] for ell in cp.ell + cpp.ell]
    return min([lp] + smallest)


def odd_odd_critical_set(mu: Weight, mup: Weight, eps0: int) -> CriticalSet:
    """Critical integers for two odd ranks.

    With x = m - Δ and L the smallest positive Γ_C parameter, the Γ_C factors
    force 1 - L/2 <= x <= L/2; the Γ_R factors then keep negative odd and
    positive even x when eps0 = 0, and nonpositive even and positive odd x when
    eps0 = 1.
    """
    _require_odd_odd(mu, mup)
    require_pure(mu, mup)
    if eps0 not in (0, 1):
        raise InputError("eps0 must be 0 or 1")
    if cuspidal_width_plus(mu, mup) == 0:
        return CriticalSet((), 0)
    half = _smallest_positive_parameter(mu, mup) // 2
    dlt = int(delta(mu, mup))
    keep = []
    for x in range(1 - half, half + 1):
        if eps0 == 0:
            ok = (x < 0 and x % 2 == 1) or (x > 0 and x % 2 == 0)
        else:
            ok = (x <= 0 and x % 2 == 0) or (x > 0 and x % 2 == 1)
        if ok:
            keep.append(2 * (dlt + x))
    return CriticalSet(tuple(keep), 0)


def odd_odd_displayed_set(delta_value: int, ell_plus: int, eps0: int) -> CriticalSet:
    """Closed-form odd x odd set built from ℓ⁺ alone, starting at
    Δ - [ℓ⁺/2] - 1. Kept for comparison with the Γ-scan; see
    ``odd_odd_critical_set`` for the set the Γ-factors actually produce."""
    if ell_plus <= 0:
        return CriticalSet((), 0)
    half = ell_plus // 2
    pts = []
    if eps0 == 0:
        top = half if half % 2 == 0 else half - 1
        pts += [delta_value - 1 - 2 * k for k in range(top // 2 + 1)]
        pts += [delta_value + 2 * k for k in range(1, top // 2 + 1)]
    else:
        top = half if half % 2 == 1 else half - 1
        if top >= 1:
            pts += [delta_value - 2 * k for k in range((top + 1) // 2 + 1)]
            pts += [delta_value + 1 + 2 * k for k in range((top + 1) // 2)]
    return CriticalSet(tuple(2 * m for m in sorted(set(pts))), 0)


@dataclass(frozen=True)
class OddOddReport:
    ell_plus: int
    smallest_parameter: int
    delta: int
    eps0: int
    critical_set: CriticalSet
    displayed_set: CriticalSet
    two_points_critical: bool
    two_point_criterion: bool
    collision_positions: tuple[int, int]
    collision_per_embedding: tuple[bool, ...]
    balanced_status: BalancedStatus | None = field(default=None)

    @property
    def display_matches(self) -> bool:
        return self.critical_set == self.displayed_set


def odd_odd_checks(mu: Weight, mup: Weight, eps0: int) -> OddOddReport:
    """Evaluate the odd x odd statements: critical set, the two-point
    criterion at -N/2 and 1-N/2, and the coordinate collision that blocks
    any dominant-making Weyl element when Δ = -N/2."""
    _require_odd_odd(mu, mup)
    crit = odd_odd_critical_set(mu, mup, eps0)
    lp = cuspidal_width_plus(mu, mup)
    N = mu.n + mup.n
    dlt = int(delta(mu, mup))
    two_points = -N in crit.doubled_points and 2 - N in crit.doubled_points
    criterion = lp > 0 and eps0 == 1 and 2 * dlt == -N
    i, j = (mu.n + 1) // 2, mu.n + (mup.n + 1) // 2
    # both middle entries of μ⊗μ'+ρ_N equal d + n'/2 and d' - n/2 respectively
    coll = tuple(
        2 * b[i - 1] + (N + 1 - 2 * i) == 2 * bp[j - mu.n - 1] + (N + 1 - 2 * j)
        for b, bp in zip(mu.coords, mup.coords)
    )
    status = None
    if any(coll):
        status = find_balanced(mu, mup).status
    return OddOddReport(
        lp,
        _smallest_positive_parameter(mu, mup),
        dlt,
        eps0,
        crit,
        odd_odd_displayed_set(dlt, lp, eps0),
        two_points,
        criterion,
        (i, j),
        coll,
        status,
    )

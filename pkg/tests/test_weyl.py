import itertools
from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from _strategies import pure_pairs
from rankin_critical.errors import InputError, NotKostant, OddDimension, RankMismatch, ShapeMismatch
from rankin_critical.weights import Weight, dual_weight, pure_weight
from rankin_critical.weyl import (
    BalancedStatus,
    KostantElement,
    compose,
    delta_coefficient_check,
    delta_coefficients,
    dot_action,
    find_balanced,
    identity,
    inverse,
    is_kostant,
    kostant_reps,
    length,
    longest_element,
    tensor_weight,
    to_associate,
    to_dual,
    w_uv,
)


def element(perm, parabolic):
    return KostantElement(len(perm), parabolic, (tuple(perm),))


# --- enumeration -------------------------------------------------------------

def test_kostant_s2():
    reps = kostant_reps(2, 1)
    assert sorted(length(p) for p in reps) == [0, 1]


def test_kostant_n3():
    reps = kostant_reps(3, 2)
    assert sorted(length(p) for p in reps) == [0, 1, 2]


def test_kostant_n4_generating_function():
    lengths = [length(p) for p in kostant_reps(4, 2)]
    assert [lengths.count(k) for k in range(5)] == [1, 1, 2, 1, 1]


def test_kostant_enumeration_is_lexicographic():
    reps = kostant_reps(6, 3)
    assert reps == sorted(reps)
    assert len(reps) == comb(6, 3)
    assert reps[0] == identity(6)


@pytest.mark.parametrize("N,n", [(5, 2), (6, 1), (7, 4)])
def test_kostant_contains_extremes(N, n):
    lengths = [length(p) for p in kostant_reps(N, n)]
    assert min(lengths) == 0 and max(lengths) == n * (N - n)
    assert lengths.count(n * (N - n)) == 1


def test_kostant_rejects_bad_type():
    with pytest.raises(InputError):
        kostant_reps(3, 3)


def test_element_validates_kostant_condition():
    with pytest.raises(NotKostant):
        element((2, 1, 3), (2, 1))


# --- dot action --------------------------------------------------------------

def test_dot_action_identity():
    lam = Weight.single(4, -1, 7)
    assert dot_action(element(identity(3), (2, 1)), lam) == lam


def test_dot_action_balanced_instance():
    w = element((1, 3, 2), (2, 1))
    lam = Weight.single(-1, -1, -1)
    assert dot_action(w, lam) == Weight.single(-1, -2, 0)


def test_dot_action_longest_on_zero():
    w_g = KostantElement(3, (1, 1, 1), (longest_element(3),))
    assert dot_action(w_g, Weight.single(0, 0, 0)) == Weight.single(-2, 0, 2)


def test_dot_action_rank_mismatch():
    with pytest.raises(RankMismatch):
        dot_action(element(identity(3), (2, 1)), Weight.single(0, 0))


perms4 = st.permutations(range(1, 5)).map(tuple)
vec4 = st.lists(st.integers(-9, 9), min_size=4, max_size=4).map(tuple)


@given(perms4, perms4, vec4)
def test_dot_action_composes(p, q, b):
    borel = (1, 1, 1, 1)
    lam = Weight(4, 1, (b,))
    lhs = dot_action(KostantElement(4, borel, (compose(p, q),)), lam)
    rhs = dot_action(KostantElement(4, borel, (p,)), dot_action(KostantElement(4, borel, (q,)), lam))
    assert lhs == rhs


def test_dot_action_is_bijective():
    borel = (1, 1, 1)
    for p in itertools.permutations(range(1, 4)):
        images = {dot_action(KostantElement(3, borel, (p,)), Weight.single(*b)).coords for b in itertools.product(range(-2, 3), repeat=3)}
        assert len(images) == 125


# --- associate and dual ------------------------------------------------------

def test_associate_of_identity():
    w2 = to_associate(element(identity(3), (2, 1)))
    assert w2.parabolic == (1, 2) and w2.lengths() == (2,)


def test_associate_of_longest():
    longest = max(kostant_reps(3, 2), key=length)
    assert to_associate(element(longest, (2, 1))).lengths() == (0,)


def test_associate_and_dual_complement_lengths_n4():
    for p in kostant_reps(4, 2):
        w = element(p, (2, 2))
        assert length(p) + to_associate(w).lengths()[0] == 4
        assert length(p) + to_dual(w).lengths()[0] == 4


def test_associate_round_trip():
    for p in kostant_reps(5, 2):
        w = element(p, (2, 3))
        assert to_associate(to_associate(w)).perms == w.perms


def test_dual_of_identity():
    assert to_dual(element(identity(3), (2, 1))).lengths() == (2,)


def test_dual_is_involution_and_preserves_middle_layer():
    middle = {p for p in kostant_reps(4, 2) if length(p) == 2}
    images = {to_dual(element(p, (2, 2))).perms[0] for p in middle}
    assert images == middle
    for p in kostant_reps(5, 3):
        w = element(p, (3, 2))
        assert to_dual(to_dual(w)).perms == w.perms


def test_associate_rejects_non_kostant_input():
    with pytest.raises(InputError):
        to_associate(KostantElement(3, (1, 1, 1), ((2, 1, 3),)))


def _check_dual_identity(mu, mup):
    """w^∨·λ^∨ = (μ^∨ - n'δ_n) ⊗ (μ'^∨ + nδ_n') and w'·λ = (μ' - nδ_n') ⊗ (μ + n'δ_n)."""
    n, n_prime = mu.n, mup.n
    res = find_balanced(mu, mup)
    lam = res.dominant_lambda
    lhs = dot_action(to_dual(res.element), dual_weight(lam))
    mu_v, mup_v = dual_weight(mu), dual_weight(mup)
    rhs = tensor_weight(
        Weight(n, mu.r, tuple(tuple(x - n_prime for x in b) for b in mu_v.coords)),
        Weight(n_prime, mu.r, tuple(tuple(x + n for x in b) for b in mup_v.coords)),
    )
    assert lhs == rhs
    assoc = dot_action(to_associate(res.element), lam)
    assert assoc == tensor_weight(
        Weight(n_prime, mu.r, tuple(tuple(x - n for x in b) for b in mup.coords)),
        Weight(n, mu.r, tuple(tuple(x + n_prime for x in b) for b in mu.coords)),
    )


def test_dual_identity_on_balanced_instance():
    _check_dual_identity(Weight.single(-1, -2), Weight.single(0))


@given(pure_pairs(ranks=[(2, 1), (2, 2), (1, 2), (2, 3), (4, 1), (4, 2)]))
def test_dual_identity_property(pair):
    mu, mup = pair
    res = find_balanced(mu, mup)
    assume(res.status is not BalancedStatus.COLLISION)
    _check_dual_identity(mu, mup)


# --- balanced search ---------------------------------------------------------

def test_find_balanced_rank_two_by_one():
    res = find_balanced(Weight.single(-1, -2), Weight.single(0))
    assert res.status is BalancedStatus.BALANCED
    assert res.element.perms == ((1, 3, 2),)
    assert res.lengths == (1,)
    assert res.dominant_lambda == Weight.single(-1, -1, -1)


def test_find_balanced_unbalanced_shift():
    res = find_balanced(Weight.single(-1, -2), Weight.single(-3))
    assert res.status is BalancedStatus.EXISTS_UNBALANCED
    assert res.lengths == (0,)


def test_find_balanced_collision_rank_two():
    # μ⊗μ'+ρ = (0, -2, -2): the last two entries tie
    res = find_balanced(Weight.single(-1, -2), Weight.single(-1))
    assert res.status is BalancedStatus.COLLISION
    assert res.element is None and res.collisions == (((2, 3),),)


def test_find_balanced_odd_odd_collision():
    mu = pure_weight([[4, 0, -4]], 0)
    mup = pure_weight([[2, 0, -2]], 6)  # d - d' = -3
    res = find_balanced(mu, mup)
    assert res.status is BalancedStatus.COLLISION
    assert (2, 5) in res.collisions[0]


def test_find_balanced_odd_dimension():
    with pytest.raises(OddDimension):
        # Δ = 1 puts every entry of μ⊗μ'+ρ apart
        find_balanced(pure_weight([[4, 0, -4]], 0), pure_weight([[2, 0, -2]], -2))


@given(pure_pairs(ranks=[(2, 1), (2, 2), (3, 2), (2, 3), (4, 2)]))
def test_found_element_makes_weight_dominant(pair):
    mu, mup = pair
    res = find_balanced(mu, mup)
    assume(res.element is not None)
    for p, b, lam in zip(res.element.perms, tensor_weight(mu, mup).coords, res.dominant_lambda.coords):
        assert is_kostant(p, (mu.n, mup.n))
        assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
    assert dot_action(res.element, res.dominant_lambda) == tensor_weight(mu, mup)


# --- residual representative -------------------------------------------------

def test_w_uv_trivial_parabolic():
    res = w_uv(4, 1)
    assert res.w.perms == (identity(4),) and res.length == 0


def test_w_uv_two_by_two():
    res = w_uv(2, 2)
    assert res.w.perms == ((1, 3, 2, 4),)
    assert res.length == 1 == res.predicted_length
    assert res.w_reflected.perms == ((3, 1, 4, 2),)


def test_w_uv_three_by_two():
    res = w_uv(3, 2)
    assert res.w.perms == ((1, 4, 2, 5, 3, 6),)
    assert res.length == 3 and res.integral


def test_w_uv_factorises_through_longest():
    from rankin_critical.weyl import longest_kostant

    for u, v in [(2, 3), (3, 3), (4, 2)]:
        res = w_uv(u, v)
        w_p = longest_kostant((u,) * v)
        assert compose(w_p, res.w_reflected.perms[0]) == res.w.perms[0]
        assert inverse(inverse(res.w.perms[0])) == res.w.perms[0]


def test_delta_check_two_by_two():
    assert delta_coefficient_check(2, 2, Weight.single(1, 1, -1, -1))


def test_delta_check_single_block():
    assert delta_coefficient_check(3, 1, Weight.single(4, 1, -2))


def test_delta_check_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        delta_coefficient_check(2, 2, Weight.single(1, 0, -1, -1))
    with pytest.raises(ShapeMismatch):
        delta_coefficient_check(2, 2, Weight.single(1, 1, 1))


def test_unnormalised_block_exponents_are_not_unit_steps():
    # the unit steps only appear once ρ_P is added back
    dc = delta_coefficients(3, 2, Weight.single(2, 2, 0, 0, -1, -1))[0]
    assert dc.means[0] - dc.means[1] == 1
    u = 3
    assert (dc.means[0] - dc.means[1]) - u != 1


@st.composite
def block_weights(draw, u, v):
    jumps = draw(st.lists(st.integers(0, 5), min_size=u - 1, max_size=u - 1))
    top = draw(st.integers(-10, 10))
    values = [top]
    for j in jumps:
        values.append(values[-1] - j)
    return Weight.single(*[x for x in values for _ in range(v)])


@given(st.sampled_from([(2, 3), (3, 2), (6, 1), (1, 6)]).flatmap(lambda uv: st.tuples(st.just(uv), block_weights(*uv))))
def test_delta_check_random_shapes(data):
    (u, v), lam = data
    assert delta_coefficient_check(u, v, lam)

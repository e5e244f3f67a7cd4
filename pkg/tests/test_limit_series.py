import pytest
from hypothesis import given, strategies as st

from subcanonical.errors import PreconditionError, ValidationError
from subcanonical.limit_series import (
    AspectRamification,
    LimitSeriesProblem,
    TorsionClass,
    analyse,
    beta_at_node,
    c_aspect_ramification,
    check_crude_limit,
    combine_theta_parity,
    divisor_relation_holds,
    eh_star,
    elliptic_theta_parity,
    expected_dimensions,
    gamma_at_marked_point,
    rho_adjusted,
)
from subcanonical.sequences import RamificationSequence, VanishingSequence, ramification_from_vanishing

from oracles import all_vanishing_sequences

R = RamificationSequence.of


def node_sequences(g):
    """Every ramification sequence of genus g-1 whose last entry is g-2."""
    for seq in all_vanishing_sequences(g - 1, last=2 * g - 4):
        yield ramification_from_vanishing(VanishingSequence(g - 1, seq))


def problems(g):
    for alpha in node_sequences(g):
        for n in (2 * g - 2, g - 1):
            yield LimitSeriesProblem(g, alpha, n)


def odd_alpha(g):
    return R((0,) * (g - 2) + (g - 2,))


@pytest.mark.parametrize(
    "alpha, expected",
    [((0, 0, 2), (0, 1, 1, 3)), ((0, 0, 0, 3), (0, 1, 1, 1, 4)), ((0,) * 6, (0,) + (1,) * 6)],
)
def test_c_aspect(alpha, expected):
    assert c_aspect_ramification(R(alpha)) == expected


@pytest.mark.parametrize(
    "g, alpha, beta",
    [(4, (0, 0, 2), (0, 2, 2, 3)), (5, (0, 0, 0, 3), (0, 3, 3, 3, 4)), (6, (0, 1, 2, 3, 4), (0, 1, 2, 3, 4, 5))],
)
def test_beta(g, alpha, beta):
    assert beta_at_node(LimitSeriesProblem(g, R(alpha), 2 * g - 2)) == beta


@pytest.mark.parametrize("g", range(4, 21))
def test_gamma_odd_and_even_constructions(g):
    full = gamma_at_marked_point(LimitSeriesProblem(g, odd_alpha(g), 2 * g - 2))
    assert full.values == (0,) * (g - 1) + (g - 1,)
    assert full.exceptional_index is None
    half = gamma_at_marked_point(LimitSeriesProblem(g, odd_alpha(g), g - 1))
    assert half.values == (0,) * (g - 2) + (1, g - 1)
    assert half.exceptional_index == g - 3


def test_gamma_half_without_exception():
    result = gamma_at_marked_point(LimitSeriesProblem.from_kind(5, (0, 0, 1, 3), "half"))
    assert result.values == (0, 0, 0, 1, 4)
    assert result.exceptional_index is None


def test_gamma_rejects_other_orders():
    with pytest.raises(PreconditionError):
        gamma_at_marked_point(LimitSeriesProblem(5, odd_alpha(5), 2))


@pytest.mark.parametrize("g", range(3, 11))
def test_gamma_full_order_is_shift(g):
    for alpha in node_sequences(g):
        got = gamma_at_marked_point(LimitSeriesProblem(g, alpha, 2 * g - 2)).values
        assert got == (0,) + alpha.values[: g - 2] + (g - 1,)


@pytest.mark.parametrize("g", range(3, 13))
def test_exceptional_index_unique(g):
    # gamma_at_marked_point raises on several hits; count them independently too
    for alpha in node_sequences(g):
        a = alpha.values
        hits = [i for i in range(g - 2) if a[i] == g - 3 - i]
        assert len(hits) <= 1
        result = gamma_at_marked_point(LimitSeriesProblem(g, alpha, g - 1))
        changed = [
            j for j, (x, y) in enumerate(zip(result.values[1:-1], a[: g - 2])) if x != y
        ]
        assert len(changed) <= 1


@pytest.mark.parametrize("g", range(3, 11))
def test_constructions_satisfy_star_and_crude_check(g):
    for problem in problems(g):
        beta = beta_at_node(problem)
        gamma = gamma_at_marked_point(problem).values
        assert eh_star(beta, gamma, g)
        assert check_crude_limit(g, gamma, problem.torsion, problem.alpha_q).passed
        AspectRamification(g - 1, 2 * g - 2, beta, gamma)


def test_crude_limit_passes_odd_construction():
    g = 6
    verdict = check_crude_limit(g, (0,) * (g - 1) + (g - 1,), TorsionClass(2 * g - 2), odd_alpha(g))
    assert verdict.passed and verdict.as_dict() == {"passed": True, "violations": []}


def test_crude_limit_torsion_failure():
    verdict = check_crude_limit(5, (0, 0, 0, 0, 4), TorsionClass(3), odd_alpha(5))
    assert not verdict.passed
    assert any(v.startswith("torsion") for v in verdict.violations)


def test_crude_limit_inequality_failure():
    verdict = check_crude_limit(5, (0, 1, 1, 1, 4), TorsionClass(8), R((0, 0, 0, 3)))
    assert verdict.violations[0].startswith("inequality at i=1")


def test_crude_limit_gamma_zero():
    verdict = check_crude_limit(4, (1, 1, 1, 3), TorsionClass(6), R((0, 0, 2)))
    assert any("gamma_0" in v for v in verdict.violations)


@pytest.mark.parametrize(
    "beta, gamma, g, expected",
    [
        ((0, 2, 2, 3), (0, 0, 0, 3), 4, True),
        ((0, 0, 0), (0, 0, 0), 3, False),
        ((0, 0, 0, 0, 0), (0, 0, 0, 0, 0), 5, False),
    ],
)
def test_eh_star(beta, gamma, g, expected):
    assert eh_star(beta, gamma, g) is expected


def test_eh_star_even_construction_g5():
    p = LimitSeriesProblem.from_kind(5, (0, 0, 0, 3), "half")
    assert eh_star(beta_at_node(p), gamma_at_marked_point(p).values, 5)


@pytest.mark.parametrize(
    "b, c, g, order, expected",
    [(0, 8, 5, 8, True), (0, 8, 5, 4, True), (4, 4, 5, 8, False), (4, 4, 5, 4, True), (3, 4, 5, 1, False)],
)
def test_divisor_relation(b, c, g, order, expected):
    assert divisor_relation_holds(b, c, g, TorsionClass(order)) is expected


@given(st.integers(3, 40), st.integers(0, 80), st.integers(1, 80))
def test_divisor_relation_matches_divisibility(g, c, order):
    b = 2 * g - 2 - c
    if b < 0:
        return
    assert divisor_relation_holds(b, c, g, TorsionClass(order)) == (c % order == 0)


@pytest.mark.parametrize("g, r, d, alpha, rho", [(4, 3, 6, (0, 0, 0, 3), -3), (5, 4, 8, (0, 0, 0, 0, 4), -4)])
def test_rho(g, r, d, alpha, rho):
    assert rho_adjusted(g, r, d, alpha) == rho


@given(st.integers(0, 30), st.integers(0, 10), st.integers(0, 40))
def test_rho_without_conditions_is_classical(g, r, d):
    assert rho_adjusted(g, r, d, (0,) * (r + 1)) == (r + 1) * (d - r) - r * g


@pytest.mark.parametrize("g", range(3, 31))
def test_rho_and_dimensions(g):
    rho = rho_adjusted(g, g - 1, 2 * g - 2, (0,) * (g - 1) + (g - 1,))
    assert rho == -(g - 1)
    dims = expected_dimensions(g)
    assert dims.dim_B + rho == dims.dim_G_lower == 2 * g - 1
    assert (dims.dim_D, dims.dim_B) == (2 * g - 2, 3 * g - 2)


@pytest.mark.parametrize("g, dims", [(4, (7, 6, 10)), (5, (9, 8, 13)), (6, (11, 10, 16))])
def test_expected_dimensions_examples(g, dims):
    d = expected_dimensions(g)
    assert (d.dim_G_lower, d.dim_D, d.dim_B) == dims


@pytest.mark.parametrize(
    "parities, result",
    [(["odd", "odd"], "even"), (["even"], "even"), (["odd", "even", "odd"], "even"), (["odd"], "odd")],
)
def test_combine_theta_parity(parities, result):
    assert combine_theta_parity(parities) == result


def test_combine_theta_parity_rejects():
    with pytest.raises(ValidationError):
        combine_theta_parity([])
    with pytest.raises(ValidationError):
        combine_theta_parity(["odd", "maybe"])


def test_elliptic_theta_parity():
    assert elliptic_theta_parity(TorsionClass(4), 4) == "odd"
    assert elliptic_theta_parity(TorsionClass(8), 4) == "even"


@pytest.mark.parametrize("g", range(4, 12))
def test_analyse_smoothed_parities(g):
    odd = analyse(LimitSeriesProblem.from_kind(g, odd_alpha(g).values, "full"))
    even = analyse(LimitSeriesProblem.from_kind(g, odd_alpha(g).values, "half"))
    assert odd.smoothed_parity == "odd"
    assert even.smoothed_parity == "even"
    assert odd.star and even.star and odd.crude.passed and even.crude.passed
    assert odd.as_dict()["gamma"][-1] == g - 1


@pytest.mark.parametrize(
    "g, alpha",
    [(2, (0,)), (4, (0, 0, 1)), (4, (0, 0, 0, 3))],
)
def test_problem_validation(g, alpha):
    with pytest.raises(ValidationError):
        LimitSeriesProblem(g, R(alpha), 2 * g - 2)


def test_problem_kind_and_torsion_validation():
    with pytest.raises(ValidationError):
        LimitSeriesProblem.from_kind(5, (0, 0, 0, 3), "quarter")
    with pytest.raises(ValidationError):
        TorsionClass(0)


def test_aspect_validation():
    with pytest.raises(ValidationError):
        AspectRamification(3, 6, (0, 2, 1, 3), (0, 0, 0, 3))
    with pytest.raises(ValidationError):
        AspectRamification(3, 6, (0, 0, 0, 4), (0, 0, 0, 3))

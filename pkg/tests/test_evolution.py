"""Creation-law integration: closed forms, RK4 agreement, derived epochs."""

import math

import pytest
from hypothesis import given, strategies as st

from fluctuverse import (
    CosmoParams,
    DimensionMismatchError,
    EmptySeriesError,
    InvalidStepsError,
    NegativeTimeError,
    Quantity,
    TIME,
    Variant,
    check_expansion,
    evolve,
    load_constants,
    present_epoch,
    sqrtN_closed,
    states_to_csv,
)
from fluctuverse.evolution import CSV_COLUMNS

T_PRESENT_EXACT = 9.432002373717806e16  # 2 tau sqrt(N) with default constants
TAU_PION = 4.716001186858903e-24


@pytest.fixture(scope="module")
def params(reg):
    return CosmoParams.defaults(reg)


@pytest.fixture(scope="module")
def paper_params(reg):
    return CosmoParams.defaults(reg, variant=Variant.PAPER_STATED)


def test_tau_is_pion_compton_time(params):
    assert params.tau.value == pytest.approx(TAU_PION, rel=1e-12)


def test_sqrtN_zero_at_zero(params):
    assert sqrtN_closed(Quantity(0.0, TIME), params) == 0.0


def test_sqrtN_exact_reaches_1e40(params):
    t = Quantity(2.0 * params.tau.value * 1e40, TIME)
    assert sqrtN_closed(t, params) == pytest.approx(1e40, rel=1e-12)
    # the rounded landmark time lands within rounding of the same count
    assert sqrtN_closed(Quantity(9.432e16, TIME), params) == pytest.approx(1e40, rel=1e-6)


def test_sqrtN_paper_variant(paper_params):
    t = Quantity(2.358e16, TIME)
    assert sqrtN_closed(t, paper_params) == pytest.approx(1e40, rel=1e-6)


def test_sqrtN_rejects_negative_time(params):
    with pytest.raises(NegativeTimeError):
        sqrtN_closed(Quantity(-1.0, TIME), params)


def test_sqrtN_rejects_wrong_dimension(params):
    with pytest.raises(DimensionMismatchError):
        sqrtN_closed(Quantity(1.0), params)


def test_evolve_two_steps_makes_one_particle(params):
    # after ~2 chronons exactly one particle exists
    states = evolve(params, Quantity(2.0 * params.tau.value, TIME), steps=2)
    assert len(states) == 2
    assert states[-1].N == pytest.approx(1.0, rel=1e-12)


def test_evolve_present_epoch_landmarks(params):
    states = evolve(params, Quantity(9.432e16, TIME), steps=10)
    final = states[-1]
    assert final.M.value == pytest.approx(2.488058747678097e55, rel=1e-9)
    assert final.R.value == pytest.approx(1.8476723019240226e27, rel=1e-9)
    assert final.H_epoch.value == pytest.approx(1.6225412790342713e-17, rel=1e-9)


def test_evolve_matches_closed_form_everywhere(params):
    t_end = Quantity(1e17, TIME)
    states = evolve(params, t_end, steps=200)
    for state in states:
        closed = sqrtN_closed(state.t, params) ** 2
        assert abs(state.N - closed) / closed <= 1e-9


def test_evolve_rejects_bad_arguments(params):
    with pytest.raises(InvalidStepsError):
        evolve(params, Quantity(1.0, TIME), steps=1)
    with pytest.raises(NegativeTimeError):
        evolve(params, Quantity(-1.0, TIME), steps=4)
    with pytest.raises(NegativeTimeError):
        evolve(params, Quantity(0.0, TIME), steps=4)


def test_derivation_chain_invariants(reg, params):
    G, c, m = reg.get("G").value, reg.get("c").value, params.m.value
    for state in evolve(params, Quantity(9.432e16, TIME), steps=7):
        assert state.M.value == pytest.approx(state.N * m, rel=1e-12)
        assert state.R.value == pytest.approx(G * state.M.value / c**2, rel=1e-12)
        assert state.H_epoch.value * state.R.value == pytest.approx(c, rel=1e-12)
        assert state.l_uncertainty.value * math.sqrt(state.N) == pytest.approx(
            state.R.value, rel=1e-12
        )
        assert state.lambda_bound.value == pytest.approx(state.H_epoch.value**2, rel=1e-12)


_PARAMS = CosmoParams.defaults(load_constants())


@given(st.floats(min_value=1e-20, max_value=1e18, allow_nan=False, allow_infinity=False))
def test_scaling_law_doubling_time_quadruples_N(t):
    n1 = sqrtN_closed(Quantity(t, TIME), _PARAMS) ** 2
    n2 = sqrtN_closed(Quantity(2.0 * t, TIME), _PARAMS) ** 2
    assert n2 == pytest.approx(4.0 * n1, rel=1e-12)


def test_variant_factor_is_exactly_sixteen(params, paper_params):
    t_end = Quantity(1e17, TIME)
    exact = evolve(params, t_end, steps=50)
    paper = evolve(paper_params, t_end, steps=50)
    for a, b in zip(exact, paper):
        assert b.N == 16.0 * a.N  # bit-exact: the rates differ by a power of two


def test_both_variants_reach_target_within_band(params, paper_params):
    for p in (params, paper_params):
        t = present_epoch(p).t.value
        assert 1e16 <= t <= 1e17


def test_present_epoch_time(params):
    state = present_epoch(params)
    assert state.t.value == pytest.approx(T_PRESENT_EXACT, rel=1e-12)
    assert state.N == pytest.approx(1e80, rel=1e-12)


def test_present_epoch_uncertainty_length(reg, params):
    state = present_epoch(params)
    l = reg.get("hbar") / (reg.get("m_pi") * reg.get("c"))
    assert state.l_uncertainty.value == pytest.approx(1.8476732319183387e-13, rel=1e-9)
    assert abs(math.log10(state.l_uncertainty.value / l.value)) <= 1.0


def test_present_epoch_recovers_hbar(reg, params):
    state = present_epoch(params)
    assert state.hbar_check.value == pytest.approx(1.3781824625566628e-27, rel=1e-9)
    assert abs(math.log10(state.hbar_check.value / reg.get("hbar").value)) <= 0.5


def test_check_expansion_on_evolution(params):
    assert check_expansion(evolve(params, Quantity(1e17, TIME), steps=10))


def test_check_expansion_single_state(params):
    assert check_expansion([present_epoch(params)])


def test_check_expansion_negative_control(params):
    states = evolve(params, Quantity(1e17, TIME), steps=5)
    assert not check_expansion(list(reversed(states)))


def test_check_expansion_empty():
    with pytest.raises(EmptySeriesError):
        check_expansion([])


def test_csv_header_and_shape(params):
    text = states_to_csv(evolve(params, Quantity(1e17, TIME), steps=4))
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 5
    # nine significant digits, scientific notation
    first_field = lines[1].split(",")[0]
    mantissa = first_field.split("e")[0]
    assert len(mantissa.replace("-", "").replace(".", "")) == 9


def test_csv_deterministic(params):
    a = states_to_csv(evolve(params, Quantity(9.432e16, TIME), steps=6))
    b = states_to_csv(evolve(params, Quantity(9.432e16, TIME), steps=6))
    assert a == b

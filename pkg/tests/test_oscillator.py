from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hbarlpt.oscillator import (
    OscillatorPotential,
    c0_oscillator,
    oscillator_closed_form,
    oscillator_coefficient_step,
    oscillator_energy,
    oscillator_series,
)
from hbarlpt.tables import CoefficientTable, MissingEntryError, QuantumNumbers


def binomial_sqrt_c0(pot, I):
    """Oracle: -m w r (1 + u)^(1/2) with u = 2/(m w^2) sum f_i x^i, x = r^2, by binomial series."""
    m, w = pot.m, pot.omega
    u = [F(0)] + [2 * pot.coupling(i) / (m * w * w) for i in range(1, I + 1)]

    def mul(a, b):
        return [sum(a[p] * b[i - p] for p in range(i + 1)) for i in range(I + 1)]

    out = [F(0)] * (I + 1)
    power = [F(1)] + [F(0)] * I
    coeff = F(1)
    for k in range(I + 1):
        out = [o + coeff * p for o, p in zip(out, power)]
        coeff = coeff * (F(1, 2) - k) / (k + 1)
        power = mul(power, u)
    return [-m * w * c for c in out]


def quartic_reference(lam, m, w, N, L, k):
    """Oracle: the quartic-specific closed-form corrections."""
    eta = N * (N + 1)
    return {
        1: (F(1, 2) + N) * w,
        2: F(3 - 2 * L + 6 * eta) / (4 * m**2 * w**2) * lam,
        3: F(-(1 + 2 * N) * (21 - 9 * L + 17 * eta)) / (8 * m**4 * w**5) * lam**2,
        4: F(333 + 11 * L**2 - 3 * L * (67 + 86 * eta) + 3 * eta * (347 + 125 * eta)) / (16 * m**6 * w**8) * lam**3,
        5: F(-(1 + 2 * N) * (30885 + 909 * L**2 - 27 * L * (613 + 330 * eta) + eta * (49927 + 10689 * eta)))
        / (128 * m**8 * w**11) * lam**4,
    }[k]


def test_potential_validation():
    with pytest.raises(ValueError):
        OscillatorPotential(1, 0)
    with pytest.raises(ValueError):
        OscillatorPotential(0, 1)
    with pytest.raises(TypeError):
        OscillatorPotential(1, 0.5)


def test_c0_harmonic():
    assert c0_oscillator(OscillatorPotential(1, 1), 3) == [-1, 0, 0, 0]


def test_c0_quartic_examples():
    c = c0_oscillator(OscillatorPotential(1, 1, [F(1, 10)]), 2)
    assert c[1] == F(-1, 10)
    assert c[2] == F(1, 200)


@pytest.mark.parametrize(
    "pot",
    [
        OscillatorPotential(1, 1, [F(1, 10)]),
        OscillatorPotential(F(3, 2), F(2, 5), [F(1, 3), F(-2, 7), F(5, 11)]),
        OscillatorPotential(2, 3, [0, 0, 1, F(1, 2)]),
    ],
)
def test_c0_matches_binomial_square_root(pot):
    assert c0_oscillator(pot, 6) == binomial_sqrt_c0(pot, 6)


@pytest.mark.parametrize("l", range(4))
def test_harmonic_ground_state_log_derivative_terminates(l):
    # exact C(r) = hbar (l+1)/r - m w r
    _, table = oscillator_series(OscillatorPotential(F(2, 3), F(5, 2)), QuantumNumbers(0, l), 6)
    assert table[1, 0] == l + 1
    for k in range(1, 7):
        for i in range(6):
            if (k, i) != (1, 0):
                assert table[k, i] == 0, (k, i)


def test_step_k2_i0_direct_substitution():
    pot = OscillatorPotential(1, 1, [F(1, 3)])
    qn = QuantumNumbers(0, 0)
    _, table = oscillator_series(pot, qn, 3)
    c00, c10 = table[0, 0], table[1, 0]
    assert table[2, 0] == -(3 - 4) * c10 / (2 * c00) - c10**2 / (2 * c00)


def test_step_rejects_quantization_slot_and_missing_entries():
    pot, qn = OscillatorPotential(1, 1), QuantumNumbers(0, 0)
    table = CoefficientTable("oscillator", 3, 2)
    with pytest.raises(ValueError):
        oscillator_coefficient_step(table, pot, qn, 2, 1)
    with pytest.raises(MissingEntryError):
        oscillator_coefficient_step(table, pot, qn, 1, 1)
    with pytest.raises(MissingEntryError):
        oscillator_energy(table, pot, qn, 1)


@pytest.mark.parametrize("lam", [F(1), F(1, 10), F(-3, 7)])
@pytest.mark.parametrize("n, l", [(0, 0), (1, 0), (0, 2), (2, 3)])
def test_quartic_against_quartic_closed_forms(lam, n, l):
    m, w = F(1), F(1)
    series, _ = oscillator_series(OscillatorPotential(m, w, [lam]), QuantumNumbers(n, l), 5)
    N, L = 2 * n + l + 1, l * (l + 1)
    for k in range(1, 6):
        assert series[k] == quartic_reference(lam, m, w, N, L, k)


def test_quartic_ground_state_values():
    series, _ = oscillator_series(OscillatorPotential(1, 1, [1]), QuantumNumbers(0, 0), 5)
    assert series[1] == F(3, 2)
    assert series[2] == F(15, 4)
    assert series[3] == F(-165, 8)


def test_harmonic_series_example():
    series, _ = oscillator_series(OscillatorPotential(1, 1), QuantumNumbers(2, 1), 10)
    assert series[1] == F(13, 2)
    assert all(series[k] == 0 for k in range(2, 11))


def test_explicit_zero_coupling_equals_absent():
    a, ta = oscillator_series(OscillatorPotential(1, 2, [0]), QuantumNumbers(1, 1), 3)
    b, tb = oscillator_series(OscillatorPotential(1, 2), QuantumNumbers(1, 1), 3)
    assert a == b
    assert ta.items() == tb.items()


@pytest.mark.parametrize("n, l", [(0, 0), (1, 2), (3, 3)])
def test_harmonic_degeneration_to_order_20(n, l):
    w = F(7, 3)
    series, _ = oscillator_series(OscillatorPotential(F(1, 2), w), QuantumNumbers(n, l), 20)
    assert series[1] == (2 * n + l + F(3, 2)) * w
    assert all(series[k] == 0 for k in range(2, 21))
    assert series.partial_sum(1, hbar=1) == (2 * n + l + F(3, 2)) * w


def test_table_bounds_and_quantization_slots():
    series, table = oscillator_series(OscillatorPotential(1, 1, [1, 2]), QuantumNumbers(1, 2), 6)
    assert table.max_order == 6 and table.max_index == 5
    assert len(table) == 7 * 6
    assert table.frozen
    for k in range(1, 7):
        assert table[k, k - 1] == (5 if k == 1 else 0)
    assert series.k_min == 1 and len(series) == 6


def test_closed_form_examples():
    qn = QuantumNumbers(1, 1)
    pot = OscillatorPotential(F(2), F(3), [0, 1])
    N = 2 * 1 + 1 + 1
    assert oscillator_closed_form(pot, qn, 1) == (1 + 2 * N) * F(3) / 2
    assert oscillator_closed_form(pot, qn, 2) == 0
    with pytest.raises(ValueError):
        oscillator_closed_form(pot, qn, 6)


def test_closed_form_k4_direct_substitution():
    pot, qn = OscillatorPotential(1, 1, [1, 0, 0]), QuantumNumbers(0, 0)
    expected = F(333 + 3 * 2 * (347 + 250), 16)
    assert oscillator_closed_form(pot, qn, 4) == expected
    series, _ = oscillator_series(pot, qn, 4)
    assert series[4] == expected


small = st.fractions(min_value=-3, max_value=3, max_denominator=12)
positive = st.fractions(min_value=F(1, 4), max_value=4, max_denominator=12)


@settings(max_examples=25, deadline=None)
@given(positive, positive, st.lists(small, min_size=4, max_size=4), st.integers(0, 3), st.integers(0, 3))
def test_recursion_equals_closed_form(m, w, f, n, l):
    pot, qn = OscillatorPotential(m, w, f), QuantumNumbers(n, l)
    series, _ = oscillator_series(pot, qn, 5)
    for k in range(1, 6):
        assert series[k] == oscillator_closed_form(pot, qn, k)


@settings(max_examples=15, deadline=None)
@given(positive, positive, st.lists(small, min_size=1, max_size=4), small.filter(bool), st.integers(0, 2), st.integers(0, 2))
def test_coupling_weight_homogeneity(m, w, f, t, n, l):
    K = 7
    qn = QuantumNumbers(n, l)
    pot = OscillatorPotential(m, w, f)
    base, _ = oscillator_series(pot, qn, K)
    scaled, _ = oscillator_series(pot.scaled(t), qn, K)
    for k in range(1, K):
        assert scaled[k + 1] == t**k * base[k + 1]


def test_partial_sum_powers_of_hbar():
    series, _ = oscillator_series(OscillatorPotential(1, 1, [1]), QuantumNumbers(0, 0), 3)
    h = F(1, 2)
    assert series.partial_sum(3, h) == F(3, 2) * h + F(15, 4) * h**2 - F(165, 8) * h**3

from fractions import Fraction

import pytest

from core.errors import InvalidInputError, NotSpecializableError
from core.qrat import ONE, ZERO, RatQ, degree_span, hbar, qbinom, qfactorial, qint, qpow, taylor_at_1


def test_quantum_integers_print_as_laurent_sums():
    assert str(qint(2)) == "q + q^-1"
    assert str(qint(3)) == "q^2 + 1 + q^-2"
    assert str(qint(1)) == "1"
    assert str(ZERO) == "0"


def test_quantum_integer_with_root_length():
    assert qint(2, 3) == qpow(3) + qpow(-3)


def test_negative_quantum_integer_rejected():
    with pytest.raises(InvalidInputError):
        qint(-1)


def test_hbar_times_qint():
    assert hbar() * qint(2) == hbar(2)
    assert hbar() * qint(3) == qpow(3) - qpow(-3)


def test_factorial_and_binomial():
    assert qfactorial(3) == qint(2) * qint(3)
    assert qbinom(4, 2) == RatQ.from_laurent({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert qbinom(3, 5) == ZERO
    assert qbinom(5, 0) == ONE


def test_division_normalizes_to_laurent_when_possible():
    c = hbar() / (qpow(1) + 1)
    assert c.is_laurent()
    assert str(c) == "1 - q^-1"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_rational_coefficient_text_round_trip():
    c = ONE / qint(2)
    assert not c.is_laurent()
    assert RatQ.parse(str(c)) == c
    assert RatQ.parse("(q^2 - 1)/(q)") == hbar()
    assert RatQ.parse("-2*q^-3 + 5") == RatQ.from_laurent({-3: -2, 0: 5})


@pytest.mark.parametrize("text", ["", "q^", "2q", "(q + 1"])
def test_malformed_coefficients(text):
    with pytest.raises(InvalidInputError):
        RatQ.parse(text)


def test_value_at_one():
    assert qint(3).value_at_one() == 3
    assert (qint(2) / qint(3)).value_at_one() == Fraction(2, 3)


def test_pole_at_one_is_reported_with_offender():
    c = ONE / hbar()
    with pytest.raises(NotSpecializableError) as info:
        c.value_at_one()
    assert info.value.offender == c
    with pytest.raises(NotSpecializableError):
        taylor_at_1(c, 1)


def test_taylor_expansion_at_one():
    assert taylor_at_1(qpow(2), 2) == [1, 2, 1]
    assert taylor_at_1(qint(2), 1) == [2, 0]
    assert taylor_at_1(hbar(), 1) == [0, 2]
    assert taylor_at_1(ONE / qint(2), 1) == [Fraction(1, 2), 0]


def test_degree_span():
    assert degree_span(qint(3)) == (-2, 2)
    with pytest.raises(InvalidInputError):
        degree_span(ONE / qint(2))

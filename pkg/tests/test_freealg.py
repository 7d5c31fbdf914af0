import pytest

from core.errors import InvalidInputError
from core.freealg import (
    FreeElement,
    GeneratorSet,
    ad_action,
    ad_power,
    ad_power_of_product,
    chevalley_generators,
    divided_power,
    qcommutator,
)
from core.qrat import ONE, qint, qpow


@pytest.fixture
def gens():
    return chevalley_generators(["E1", "E2"], [[2, -1], [-1, 2]])


def test_products_and_text_form(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    u = e1 * e2 * qint(2) - e2 * e1
    assert u.to_text() == "(-1)*E2.E1 + (q + q^-1)*E1.E2"
    assert FreeElement.parse(gens, u.to_text()) == u
    assert FreeElement.parse(gens, "0") == gens.zero()
    assert (e1 - e1).to_text() == "0"


def test_scalars_and_unit(gens):
    e1 = gens.gen("E1")
    assert e1 * 0 == gens.zero()
    assert gens.one() * e1 == e1
    assert (e1 + 1).coefficient([]) == ONE
    assert FreeElement.parse(gens, "(2)*1") == gens.scalar(2)


def test_weights(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    assert (e1 * e2 * e1).weight() == (2, 1)
    assert not (e1 + e1 * e2).is_homogeneous()
    with pytest.raises(InvalidInputError):
        (e1 + e1 * e2).weight()
    assert set((e1 + e1 * e2).homogeneous_parts()) == {(1, 0), (1, 1)}


def test_star_reverses_words(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    u = e1 * e2 * qpow(3) + e2 * e2 * e1
    assert u.star() == e2 * e1 * qpow(3) + e1 * e2 * e2
    assert u.star().star() == u


def test_relabel_swaps_letters(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    assert (e1 * e1 * e2).relabel({0: 1, 1: 0}) == e2 * e2 * e1


def test_leading_and_coefficient(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    u = e1 + e2 * e1 * qint(3)
    assert u.leading() == ((1, 0), qint(3))
    assert u.coefficient(["E2", "E1"]) == qint(3)
    assert u.coefficient(["E1", "E2"]) == 0
    with pytest.raises(InvalidInputError):
        gens.zero().leading()


def test_adjoint_action_is_q_commutator(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    assert ad_action("E1", e2) == e1 * e2 - e2 * e1 * qpow(-1)
    assert ad_action("E1", e2) == qcommutator(e1, e2, qpow(-1))
    assert ad_action("E1", e2, side="right") == e2 * e1 - e1 * e2 * qpow(-1)
    with pytest.raises(InvalidInputError):
        ad_action("E1", e2, side="middle")


def test_second_adjoint_power_is_the_serre_element(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    serre = e1 ** 2 * e2 - e1 * e2 * e1 * qint(2) + e2 * e1 ** 2
    assert ad_power("E1", e2, 2, divided=False) == serre
    assert ad_power("E1", e2, 2) == serre / qint(2)


def test_divided_power_of_a_product(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    a, b = e2, e1 * e2
    assert ad_power_of_product("E1", 2, a, b) == ad_power("E1", a * b, 2)


def test_divided_power(gens):
    e1 = gens.gen("E1")
    assert divided_power(gens, "E1", 2) * qint(2) == e1 * e1


def test_substitute_into_coefficients(gens):
    e1, e2 = gens.gen("E1"), gens.gen("E2")
    u = e1 * e2 + e2 * 3
    assert u.substitute([qpow(1), qpow(2)], ONE) == qpow(3) + qpow(2) * 3


def test_generator_set_validation():
    with pytest.raises(InvalidInputError):
        GeneratorSet(["a", "a"], [[1], [1]], [[2]])
    with pytest.raises(InvalidInputError):
        GeneratorSet(["a", "b"], [[1, 0], [0, 1]], [[2, -1], [0, 2]])
    with pytest.raises(InvalidInputError):
        GeneratorSet(["a"], [[1, 0]], [[2]])


def test_unknown_generator(gens):
    with pytest.raises(InvalidInputError):
        gens.gen("E3")
    with pytest.raises(InvalidInputError):
        FreeElement.parse(gens, "E1.E2")

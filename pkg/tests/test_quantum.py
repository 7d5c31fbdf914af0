import numpy as np
import pytest

from config.settings import settings
from core.errors import InvalidInputError, VerificationError
from core.qrat import hbar, qpow
from quantum.oracle import oracle_agreement, random_ideal_element
from quantum.pbw import braid_into_plus, pbw_elements, pbw_presentation
from quantum.uqfull import is_zero_plus, oracle_is_zero_plus, quasi_r, words_of_weight
from rewrite.diamond import check_diamond


def test_serre_elements_vanish(sl3, sl4):
    assert is_zero_plus(sl3, sl3.serre_element(0, 1))
    assert is_zero_plus(sl3, sl3.serre_element(1, 0))
    assert is_zero_plus(sl4, sl4.serre_element(0, 2))
    e1, e2 = sl3.plus.gen(0), sl3.plus.gen(1)
    assert not is_zero_plus(sl3, e1 * e2)
    assert not is_zero_plus(sl3, e1 * e2 - e2 * e1)


def test_commuting_generators_of_distant_nodes(sl4):
    e1, e3 = sl4.plus.gen(0), sl4.plus.gen(2)
    assert is_zero_plus(sl4, e1 * e3 - e3 * e1)
    assert oracle_is_zero_plus(sl4, e1 * e3 - e3 * e1)


def test_quasi_derivation(sl3):
    e1, e2 = sl3.plus.gen(0), sl3.plus.gen(1)
    assert quasi_r(0, e1 * e2) == e2 * qpow(1)
    assert quasi_r(0, e1 * e2, side="left") == e2
    with pytest.raises(InvalidInputError):
        quasi_r(0, e1, side="up")


def test_words_of_weight(sl3):
    assert len(list(words_of_weight(sl3.e_gens, (2, 1)))) == 3
    assert list(words_of_weight(sl3.e_gens, (-1, 1))) == []


def test_e_f_commutator(sl3):
    lhs = sl3.E(0) * sl3.F(0) - sl3.F(0) * sl3.E(0)
    rhs = (sl3.K(0) - sl3.K(0, -1)) / hbar()
    assert sl3.is_zero(lhs - rhs)
    assert sl3.is_zero(sl3.E(0) * sl3.F(1) - sl3.F(1) * sl3.E(0))


def test_braid_inverse_undoes_braid(sl3):
    image = sl3.braid(0, sl3.E(1))
    assert sl3.is_zero(sl3.braid(0, image, inverse=True) - sl3.E(1))


def test_braid_moves_simple_root_to_simple_root(sl3):
    assert is_zero_plus(sl3, braid_into_plus(sl3, (0, 1), sl3.plus.gen(0), verify=True) - sl3.plus.gen(1))


def test_pbw_generators_of_sl3(sl3):
    x1, x2, x3 = pbw_elements(sl3, (0, 1, 0), verify=True)
    e1, e2 = sl3.plus.gen(0), sl3.plus.gen(1)
    assert x1 == e1
    assert is_zero_plus(sl3, x3 - e2)
    assert is_zero_plus(sl3, x2 - (e2 * e1 - e1 * e2 * qpow(-1)) / hbar())


def test_pbw_presentation_of_sl3(sl3):
    p = pbw_presentation(sl3, (0, 1, 0)).presentation
    gens = p.gens
    assert p.degrees == (1, 2, 1)
    assert p.rules[(0, 1)] == gens.word(["X1", "X2"]) * qpow(1)
    assert p.rules[(0, 2)] == gens.word(["X1", "X3"]) * qpow(-1) + gens.gen("X2") * hbar()
    assert check_diamond(p).ok


def test_verify_setting_certifies_every_projection(sl4, monkeypatch):
    monkeypatch.setattr(settings, "VERIFY_PBW", True)
    xs = pbw_elements(sl4, (0, 1, 0, 2, 1, 0))
    assert len(xs) == 6
    assert is_zero_plus(sl4, xs[5] - sl4.plus.gen(2))
    with pytest.raises(VerificationError):
        braid_into_plus(sl4, (0,), sl4.plus.gen(0))


def test_non_reduced_word_rejected(sl3):
    with pytest.raises(InvalidInputError):
        pbw_elements(sl3, (0, 0))


def test_zero_tests_agree_on_random_elements(sl3):
    report = oracle_agreement(sl3, samples=12, max_degree=3, seed=7)
    assert report.ok
    assert report.samples == 12


def test_ideal_elements_are_zero_for_both_tests(sl3):
    rng = np.random.default_rng(3)
    u = random_ideal_element(sl3, rng, 4)
    assert u is not None
    assert is_zero_plus(sl3, u)
    assert oracle_is_zero_plus(sl3, u)
    assert random_ideal_element(sl3, rng, 2) is None

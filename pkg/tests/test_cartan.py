import numpy as np
import pytest

from core.errors import InvalidInputError
from lie.cartan import (
    DiagramAut,
    WeylGroup,
    datum_from_entries,
    fold_cartan,
    hat_lift,
    maps_simple_to_simple,
    parse_cartan,
    parse_word,
)


@pytest.mark.parametrize("name,count", [("A2", 3), ("A3", 6), ("C2", 4), ("D4", 12), ("G2", 6), ("A2xA2", 6)])
def test_positive_root_counts(name, count):
    weyl = WeylGroup(parse_cartan(name))
    assert len(weyl.positive_roots()) == count
    w0 = weyl.longest_element()
    assert len(w0) == count
    assert weyl.is_reduced(w0)
    assert weyl.length(w0) == count


def test_centred_d4_labels():
    d4 = parse_cartan("D4")
    assert d4.labels == ("0", "1", "2", "3")
    assert d4.index("0") == 0
    assert d4.index(2) == 2
    assert d4.matrix[0].tolist() == [2, -1, -1, -1]


def test_product_primes_labels_and_splits_components():
    datum = parse_cartan("A2xA2")
    assert datum.labels == ("1", "2", "1'", "2'")
    assert datum.components() == [[0, 1], [2, 3]]


def test_g2_symmetrizer():
    g2 = parse_cartan("G2")
    assert g2.d == (1, 3)
    assert g2.symmetrized.tolist() == [[2, -3], [-3, 6]]


def test_invalid_data_rejected():
    with pytest.raises(InvalidInputError):
        parse_cartan("E6")
    with pytest.raises(InvalidInputError):
        datum_from_entries(["a", "b"], [[2, 1], [1, 2]])
    with pytest.raises(InvalidInputError):
        datum_from_entries(["a", "b"], [[2, -1], [-2, 2]])


def test_fold_d4_by_triality():
    d4 = parse_cartan("D4")
    folding = fold_cartan(d4, DiagramAut.parse("(1 2 3)", d4))
    assert folding.orbits == [[0], [1, 2, 3]]
    assert folding.c_sigma.tolist() == [[2, -3], [-3, 6]]
    assert folding.folded.matrix.tolist() == [[2, -3], [-1, 2]]
    assert folding.folded.d == (1, 3)
    assert np.array_equal(folding.c_sigma, folding.d_sigma @ folding.a_prime.T)


def test_fold_a3_by_flip():
    a3 = parse_cartan("A3")
    folding = fold_cartan(a3, DiagramAut.parse("(1 3)", a3))
    assert folding.orbits == [[0, 2], [1]]
    assert folding.c_sigma.tolist() == [[4, -2], [-2, 2]]
    assert folding.folded.d == (2, 1)


def test_fold_rejects_bad_input():
    a2 = parse_cartan("A2")
    with pytest.raises(InvalidInputError):
        fold_cartan(a2, DiagramAut.parse("(1 2)", a2))
    g2 = parse_cartan("G2")
    with pytest.raises(InvalidInputError):
        fold_cartan(g2, DiagramAut.identity(2))
    with pytest.raises(InvalidInputError):
        DiagramAut.parse("(1 5)", a2)


def test_reduced_words_of_the_longest_element():
    weyl = WeylGroup(parse_cartan("A2"))
    assert weyl.all_reduced_words((0, 1, 0)) == [(0, 1, 0), (1, 0, 1)]
    assert not weyl.is_reduced((0, 0))


def test_parse_word_positions():
    a3 = parse_cartan("A3")
    assert parse_word("121", a3) == (0, 1, 0)
    assert parse_word("1,3", a3) == (0, 2)
    with pytest.raises(InvalidInputError):
        parse_word("14", a3)


def test_hat_lift_of_g2_longest_word():
    d4 = parse_cartan("D4")
    folding = fold_cartan(d4, DiagramAut.parse("(1 2 3)", d4))
    lifted = hat_lift((0, 1, 0, 1, 0, 1), folding)
    assert len(lifted) == 12
    assert lifted[:4] == (0, 1, 2, 3)
    assert WeylGroup(d4).is_reduced(lifted)


def test_longest_element_sends_simple_roots_to_negatives():
    weyl = WeylGroup(parse_cartan("A2"))
    assert maps_simple_to_simple(weyl, (0, 1), 0) == 1
    assert maps_simple_to_simple(weyl, (0, 1, 0), 0) is None

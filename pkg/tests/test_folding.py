import pytest

from core.errors import InvalidInputError
from core.linalg import determinant
from folding.context import compare_reduced_words, fold_context, hat_pbw, iota, iota_report, named_aut
from folding.diagonal import diag_z, diagonal_elements, unenhanced_spanning, z0_matrix
from lie.cartan import parse_cartan
from quantum.uqfull import is_zero_plus


def test_named_automorphisms():
    assert named_aut("cyc123", parse_cartan("D4")).perm == (0, 2, 3, 1)
    assert named_aut("swap", parse_cartan("A2xA2")).perm == (2, 3, 0, 1)
    assert named_aut("flip", parse_cartan("A3")).perm == (2, 1, 0)
    assert named_aut("id", parse_cartan("A3")).perm == (0, 1, 2)
    assert named_aut("swap", parse_cartan("D3")).perm == (0, 2, 1)
    with pytest.raises(InvalidInputError):
        named_aut("twist", parse_cartan("A3"))


def test_context_parsing_errors():
    with pytest.raises(InvalidInputError):
        fold_context("A2xA2")
    with pytest.raises(InvalidInputError):
        fold_context("A2/(1 2)/1")
    with pytest.raises(InvalidInputError):
        fold_context("A2xA2/swap/12")


def test_hat_roots_of_the_swap_context():
    ctx = fold_context("A2xA2/swap/121")
    assert ctx.hat_word == (0, 2, 1, 3, 0, 2)
    assert ctx.hat_roots() == [(1, 0, 1, 0), (1, 1, 1, 1), (0, 1, 0, 1)]


def test_longest_word_default():
    ctx = fold_context("A3/flip/wo")
    assert ctx.length == 4


def test_swap_hat_generators_are_orbit_products():
    ctx = fold_context("A2xA2/swap/121")
    x1, _, x3 = hat_pbw(ctx)
    plus = ctx.ambient.plus
    assert is_zero_plus(ctx.ambient, x1 - plus.gen(0) * plus.gen(2))
    assert is_zero_plus(ctx.ambient, x3 - plus.gen(1) * plus.gen(3))


def test_iota_images_are_sigma_fixed():
    ctx = fold_context("A2xA2/swap/121")
    for exps in [(1, 0, 0), (0, 1, 0), (1, 0, 1), (2, 1, 0)]:
        assert ctx.is_sigma_fixed(iota(ctx, exps))
    with pytest.raises(InvalidInputError):
        iota(ctx, (1, 0))


def test_change_of_word_requires_the_same_folding():
    with pytest.raises(InvalidInputError):
        compare_reduced_words(fold_context("A2xA2/swap/121"), fold_context("A3/flip/1212"))


def test_identical_words_compare_trivially():
    ctx = fold_context("A2xA2/swap/121")
    report = compare_reduced_words(ctx, fold_context("A2xA2/swap/121"))
    assert report.case == "identical"
    assert report.expressions["X'2"] == "X2"


@pytest.mark.parametrize("source, target", [("A3/flip/1212", "A3/flip/2121"), ("A3/flip/2121", "A3/flip/1212")])
def test_change_of_word_with_orbit_sizes_two_and_one(source, target):
    report = compare_reduced_words(fold_context(source), fold_context(target))
    assert report.case in ("orbit sizes (2, 1)", "orbit sizes (1, 2)")
    assert report.ok, report.identities
    assert len(report.identities) == 8
    assert sorted(report.expressions) == ["X'1", "X'2", "X'3", "X'4"]


def test_change_of_word_with_orbit_sizes_two_and_two():
    report = compare_reduced_words(fold_context("A2xA2/swap/121"), fold_context("A2xA2/swap/212"))
    assert report.case == "orbit sizes (2, 2)"
    assert report.identities["X'2 = X2 + q^-1 h^-1 [X1, X3]"]
    assert report.identities["X'2 is a polynomial in the X"]
    assert report.ok, report.identities


def test_change_of_word_without_folded_orbits_is_rejected():
    with pytest.raises(InvalidInputError):
        compare_reduced_words(fold_context("A2/id/121"), fold_context("A2/id/212"))


@pytest.mark.parametrize("n", [2, pytest.param(3, marks=pytest.mark.slow), pytest.param(4, marks=pytest.mark.slow)])
def test_z_family_relations(n):
    report = diag_z(n)
    assert report.ok, report.checks
    assert "Z0 Z1 = Z1 Z0" in report.checks


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_z0_matrix_is_nonsingular(n):
    assert determinant(z0_matrix(n))


def test_single_factor_z_family():
    elems = diagonal_elements(1)
    assert elems.y21 == elems.e21[0]
    assert elems.y12 == elems.e12[0]
    assert diag_z(1, commuting=False).ok


def test_z0_matrix_shape():
    m = z0_matrix(2)
    assert len(m) == 3 and all(len(row) == 3 for row in m)


def test_diagonal_needs_a_factor():
    with pytest.raises(InvalidInputError):
        diagonal_elements(0)


def test_unenhanced_generators_span_only_for_one_factor():
    assert unenhanced_spanning(1, degree_cap=3).spanning_all
    assert unenhanced_spanning(2, degree_cap=4).first_failure() is not None


@pytest.mark.slow
def test_unenhanced_generators_stop_spanning_for_three_factors():
    report = unenhanced_spanning(3, degree_cap=4)
    assert report.first_failure() is not None
    assert report.first_failure() <= 4


@pytest.mark.parametrize("name", ["D3/swap/1212", "D3/swap/2121"])
def test_d_type_hat_generators_are_sigma_fixed(name):
    ctx = fold_context(name)
    xs = hat_pbw(ctx)
    assert len(xs) == 4
    assert all(ctx.is_sigma_fixed(x) for x in xs)
    assert iota_report(ctx, max_degree=2).ok


@pytest.mark.slow
@pytest.mark.parametrize(
    "name", ["D3/swap/1212", "D3/swap/2121", "D4/cyc123/121212", "D4/cyc123/212121", "A2xA2/swap/121"]
)
def test_iota_images_up_to_degree_four(name):
    ctx = fold_context(name)
    assert all(ctx.is_sigma_fixed(x) for x in hat_pbw(ctx))
    report = iota_report(ctx, max_degree=4)
    assert report.ok, report.failures

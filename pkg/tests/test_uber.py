import pytest

from core.errors import InvalidInputError, VerificationError
from core.qrat import hbar
from rewrite.diamond import check_diamond
from uber import g2
from uber.aq import (
    a_of_z_report,
    aq3_pbw,
    aq4_dimension_report,
    aq4_pbw,
    mu_report,
    splitting_report,
    y2i_from_chevalley,
)
from uber.crossprod import dimension_report, sqvv_cross_product, vv_classical_dimensions
from uber.dn_pbw import dn_explicit_pbw
from uber.gelfand import gelfand_report, printed_block_orientation
from uber.obstruction import naive_obstruction
from uber.presentations import available, named_presentation, parse_identifier
from uber.psi import PsiOperator, braided_factorial, build_psi, flip_braiding
from uber.sqvv import family_report
from uber.uqn import braid_report, structural_maps


# ==================== Ψ AND THE GELFAND MODEL ====================
def test_psi_for_two_dimensional_v():
    report = build_psi(2)
    assert report.ok, report.checks
    assert report.rank_psi_minus_one == report.expected_rank == 6


def test_psi_needs_two_letters():
    with pytest.raises(InvalidInputError):
        PsiOperator(1)


def test_gelfand_model_of_s4():
    report = gelfand_report(4)
    assert report.ok, report.checks
    assert report.block_ranks[2] == 0


def test_printed_gelfand_block_lists_images_as_rows():
    assert printed_block_orientation() == "rows"


def test_gelfand_model_hecke_relations_only():
    report = gelfand_report(3)
    assert report.ok
    assert report.block_ranks == {}


def test_braided_factorial_of_the_flip():
    assert braided_factorial(flip_braiding(["a", "b"]), 2).kernel_dim == 1
    assert braided_factorial(flip_braiding(["a", "b"], sign=-1), 2).kernel_dim == 3


# ==================== S_q(V⊗V) ====================
def test_sqvv_is_confluent_with_full_quadratic_part(sqvv2):
    p = sqvv2
    assert len(p.gens) == 4
    assert check_diamond(p).ok
    assert p.graded_dimension(2) == 10


def test_sqvv_relation_families():
    report = family_report(2)
    assert report.ok, report.failures


def test_cross_product_counts_match_the_classical_limit():
    cp = sqvv_cross_product(2)
    assert check_diamond(cp.presentation).ok
    counts = dimension_report(cp, max_degree=3)
    assert counts[1] == (5, 5)
    assert counts[2] == (15, 15)
    for d, (ours, classical) in counts.items():
        assert ours == classical, d


def test_classical_dimensions_come_from_n_alone():
    assert vv_classical_dimensions(2) == {1: 5}
    assert vv_classical_dimensions(3) == {1: 11, 2: 1}
    assert vv_classical_dimensions(4) == {1: 19, 2: 2, 3: 1}


# ==================== 𝒰_{q,n} ====================
def test_uqn_serre_like_relations_hold_in_the_pbw_presentation():
    named = named_presentation("Uqn:2")
    assert named.serre_check().ok


def test_uqn_structural_maps():
    report = structural_maps(2)
    assert report.ok, {k: r.failures for k, r in report.homs.items()}


@pytest.mark.slow
def test_uqn_braid_action_commutes_with_structural_maps():
    assert braid_report(2).ok


# ==================== 𝒜_q ====================
@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_aq3_is_confluent(n):
    assert check_diamond(aq3_pbw(n)).ok


def test_aq3_serre_like_relations():
    assert named_presentation("Aq3:2", verify=True).identifier == "Aq3:2"


def test_aq3_maps():
    assert mu_report(2).ok
    assert a_of_z_report(2).ok
    assert splitting_report(2).ok


def test_aq4_serre_like_relations():
    named = named_presentation("Aq4")
    assert named.partial
    assert named.serre_check().ok


def test_aq4_graded_dimensions():
    for d, (ours, classical) in aq4_dimension_report(4).items():
        assert ours == classical, d


def test_aq4_y2i_needs_an_outer_index():
    with pytest.raises(InvalidInputError):
        y2i_from_chevalley(aq4_pbw(), 2)


# ==================== OBSTRUCTION AND D-TYPE PBW ====================
def test_naive_folding_obstruction():
    report = naive_obstruction()
    assert report.determinant == -(hbar() ** 6)
    assert report.checks["det = -(q - q^-1)^6"]
    assert report.checks["u2^2 u1 - [2] u2 u1 u2 + u1 u2^2 = 0"]
    assert report.checks["u1^j u2 u1^(3-j) independent"]


def test_d_type_pbw_identities():
    report = dn_explicit_pbw(2)
    assert report.checks["y_nn = E_n"]
    assert report.checks["x_nn = E_n E_n+1"]
    assert all(report.checks.values()), report.checks


# ==================== G_2 ====================
def test_g2_iota_hat_is_a_homomorphism():
    assert g2.iota_hat_report().ok


@pytest.mark.slow
def test_g2_mu_respects_the_quartic_relation():
    assert g2.mu_report([g2.QUARTIC]).ok


def test_g2_lie_table():
    table = g2.g2_lie_table()
    assert table.dim == 13
    assert table.bracket_of("w2", "z1") == {"z5": -1}
    assert table.bracket_of("z1", "w2") == {"z5": 1}
    assert table.lower_central_dims() == [13, 5, 0]


def test_g2_presentation_is_partial_without_rules():
    named = named_presentation("G2partial")
    assert named.partial
    assert named.presentation.rules == {}
    assert g2.QUARTIC in named.relations


# ==================== REGISTRY ====================
def test_parse_identifier():
    assert parse_identifier("Aq3:4") == ("Aq3", 4)
    assert parse_identifier(" Aq4 ") == ("Aq4", None)
    with pytest.raises(InvalidInputError):
        parse_identifier("Aq3:x")


@pytest.mark.parametrize("identifier", ["Nope", "Aq3", "Aq4:2", "Uqn:1"])
def test_registry_rejects_bad_identifiers(identifier):
    with pytest.raises(InvalidInputError):
        named_presentation(identifier)


def test_registry_lists_every_family():
    assert available() == ["Uqn:n", "Aq3:n", "SqVV:n", "SqVVxU:n", "Aq4", "G2partial"]


def test_verification_error_carries_a_witness():
    err = VerificationError("boom", witness="E1.E2")
    assert err.witness == "E1.E2"

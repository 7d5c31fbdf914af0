import pytest
import sympy

from core.errors import InvalidInputError
from core.qrat import hbar
from poisson.bracket import PoissonTable, extract_poisson, jacobi_report, latex_name
from poisson.ideals import lambda2_generators, poisson_quotient_check, s2_generators
from poisson.specialize import FAILS, OPTIMAL, SPECIALIZABLE, rescale_presentation, specialize_presentation
from poisson.tables import aq4_missing_supplement, aq4_poisson_table, compare_tables, table_candidates, vv_candidates
from rewrite.presentation import Presentation, polynomial_presentation
from uber.aq import aq3_pbw, aq4_pbw
from uber.sqvv import sqvv_presentation


def _with_rule(rhs_scale):
    base = polynomial_presentation(["x", "y"])
    x, y = base.gen("x"), base.gen("y")
    return Presentation(base.gens, {(0, 1): x * y * rhs_scale}, name="plane")


# ==================== SPECIALIZATION ====================
def test_quantum_plane_is_optimal():
    p = polynomial_presentation(["x", "y"], q_power={(0, 1): 1})
    assert specialize_presentation(p).status == OPTIMAL
    table = extract_poisson(p)
    x, y = table.sym("x"), table.sym("y")
    assert sympy.expand(table.get("y", "x") - x * y) == 0
    assert sympy.expand(table.get("x", "y") + x * y) == 0


def test_pole_at_one_fails():
    result = specialize_presentation(_with_rule(hbar().inverse()))
    assert result.status == FAILS
    assert result.p0 is None
    assert result.offender.startswith("yx")


def test_non_commuting_limit_is_only_specializable():
    p = _with_rule(2)
    result = specialize_presentation(p)
    assert result.status == SPECIALIZABLE
    assert not result.optimal
    with pytest.raises(InvalidInputError):
        extract_poisson(p)


def test_rescaling_renames_generators():
    p = rescale_presentation(aq3_pbw(2), {"u21": hbar(), "z1": hbar()})
    assert p.gens.names == ("u2", "u21~", "u1", "z1~")
    with pytest.raises(InvalidInputError):
        rescale_presentation(aq3_pbw(2), {"nope": hbar()})


def test_aq3_needs_rescaling_to_be_optimal():
    assert specialize_presentation(aq3_pbw(2)).status == SPECIALIZABLE


# ==================== EXTRACTION AND JACOBI ====================
def test_aq3_tilde_bracket():
    p = rescale_presentation(aq3_pbw(2), {"u21": hbar(), "z1": hbar()})
    assert specialize_presentation(p).optimal
    table = extract_poisson(p)
    u1, u2 = table.sym("u1"), table.sym("u2")
    u21, z1 = table.sym("u21~"), table.sym("z1~")
    assert u21 == sympy.Symbol("u21t")
    assert sympy.expand(table.get("u1", "u2") - (-2 * u1 * u2 + 2 * u21 + 2 * z1)) == 0
    assert sympy.expand(table.get("u1", "u21~") - 2 * u1 * u21) == 0
    assert table.get("z1~", "u1") == 0
    assert jacobi_report(table).ok


def test_sqvv_bracket_and_its_ideals(sqvv2):
    p = sqvv2
    assert specialize_presentation(p).optimal
    table = extract_poisson(p)
    assert not table.missing
    assert jacobi_report(table).ok
    assert poisson_quotient_check(table, lambda2_generators(table, 2)).ok
    assert poisson_quotient_check(table, s2_generators(table, 2)).ok


def test_aq4_extraction_with_supplement():
    table = extract_poisson(aq4_pbw(), aq4_missing_supplement())
    assert table.missing == []
    s = table.sym
    expected = -2 * s("Y2") * s("Y1") + 4 * s("Y21") + 2 * s("Z21")
    assert sympy.expand(table.get("Y1", "Y2") - expected) == 0


def test_aq4_extraction_matches_transcribed_table():
    extracted = extract_poisson(aq4_pbw(), aq4_missing_supplement())
    comparison = compare_tables(extracted, table_candidates(aq4_poisson_table()))
    assert comparison.disagree == {}
    assert len(comparison.agree) == 66


def test_aq4_cross_brackets_follow_the_rules():
    table = aq4_poisson_table()
    s = table.sym
    expected = 2 * s("Y21") * s("Z123") - 2 * s("Z21") * s("Y13")
    assert sympy.expand(table.get("Y21", "Z13") - expected) == 0
    expected = 2 * (s("Y2") * s("Z321") * s("Y1") - s("Y21") * s("Z23") * s("Y1") + s("Y21") * s("Z13") - s("Z21") * s("Z321"))
    assert sympy.expand(table.get("Z21", "Z13") - expected) == 0


@pytest.mark.parametrize("transcribed", [False, True])
def test_aq4_tables_satisfy_jacobi(transcribed):
    if transcribed:
        table = aq4_poisson_table()
    else:
        table = extract_poisson(aq4_pbw(), aq4_missing_supplement())
    report = jacobi_report(table)
    assert report.ok, f"{report.witness}: {report.residue}"
    assert report.checked == report.total == 220


def test_sqvv_extraction_matches_printed_patterns(sqvv2):
    names, transcribed = vv_candidates(2)
    assert names == ["X22", "X12", "X21", "X11"]
    comparison = compare_tables(extract_poisson(sqvv2), transcribed)
    assert comparison.disagree == {}
    assert len(comparison.agree) == 6


def test_printed_patterns_are_stored_in_extraction_orientation():
    _, transcribed = vv_candidates(2)
    x21, x22 = sympy.Symbol("X21"), sympy.Symbol("X22")
    assert transcribed[("X12", "X22")] == [2 * x21 * x22]


@pytest.mark.slow
def test_sqvv3_extraction_matches_printed_patterns():
    comparison = compare_tables(extract_poisson(sqvv_presentation(3)), vv_candidates(3)[1])
    assert comparison.disagree == {}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_aq3_tilde_tables_satisfy_jacobi(n):
    factors = {"u21": hbar()}
    factors.update({f"z{k}": hbar() for k in range(1, n)})
    table = extract_poisson(rescale_presentation(aq3_pbw(n), factors))
    assert table.missing == []
    assert jacobi_report(table).ok


def test_jacobi_witness():
    table = PoissonTable(["x", "y", "z"], name="broken")
    x, y, z = table.symbols
    table.set("x", "y", z)
    table.set("z", "x", x)
    report = jacobi_report(table)
    assert not report.ok
    assert report.witness == ("x", "y", "z")
    assert report.residue


def test_linear_bracket_satisfies_jacobi():
    table = PoissonTable(["x", "y", "z"])
    x, y, z = table.symbols
    table.set("x", "y", z)
    table.set("y", "z", x)
    table.set("z", "x", y)
    assert jacobi_report(table).ok


def test_table_storage():
    table = PoissonTable(["x", "y"])
    with pytest.raises(InvalidInputError):
        table.set("x", "x", 1)
    with pytest.raises(InvalidInputError):
        table.sym("w")
    table.set("y", "x", "x*y")
    assert table.to_text().splitlines()[-1] == "{x, y} = -x*y"


def test_latex_names():
    assert latex_name("X12") == "X_{12}"
    assert latex_name("u21~") == "\\tilde u_{21}"
    assert latex_name("w") == "w"


# ==================== IDEALS ====================
def test_poisson_ideal_check():
    table = PoissonTable(["x", "y"], name="affine")
    x, y = table.symbols
    table.set("x", "y", x)
    assert poisson_quotient_check(table, [x]).ok
    report = poisson_quotient_check(table, [y])
    assert not report.ok
    assert report.witness[1] == "x"


def test_ideal_generators_must_be_linear():
    table = PoissonTable(["x", "y"])
    x, y = table.symbols
    with pytest.raises(InvalidInputError):
        poisson_quotient_check(table, [x * y])
    with pytest.raises(InvalidInputError):
        poisson_quotient_check(table, [x + 1])

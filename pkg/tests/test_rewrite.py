import json

import pytest

from core.errors import InvalidInputError
from core.freealg import GeneratorSet
from core.qrat import qpow
from quantum.pbw import pbw_elements
from rewrite.diamond import check_diamond, replay, save_checkpoint, triples
from rewrite.presentation import Presentation, lie_enveloping_counts, polynomial_presentation
from rewrite.subpbw import subpbw_analysis


def _lie_like(brackets):
    """Zero-weight generators a < b < c with rules X'X -> XX' + bracket."""
    gens = GeneratorSet(["a", "b", "c"], [[0], [0], [0]], [[0]])
    rules = {}
    for (x, y), extra in brackets.items():
        rules[(x, y)] = gens.word([x, y]) + extra(gens)
    return Presentation(gens, rules, name="lie")


def test_q_polynomial_ring_normal_form():
    p = polynomial_presentation(["x", "y"], q_power={(0, 1): 1})
    x, y = p.gen("x"), p.gen("y")
    assert p.normal_form(y * x) == x * y * qpow(1)
    assert p.normal_form(y * y * x) == x * y * y * qpow(2)
    assert p.reduces_to_zero(y * x - x * y * qpow(1))


def test_graded_dimension_counts_weighted_monomials():
    p = polynomial_presentation(["x", "y"], degrees=[1, 2])
    assert p.graded_dimension(4) == 3
    assert len(list(p.ordered_monomials(4))) == 3
    assert p.graded_dimension(-1) == 0


def test_lie_enveloping_counts():
    assert lie_enveloping_counts({1: 2, 2: 1}, 2) == 4
    assert lie_enveloping_counts({1: 1}, 5) == 1


def test_rules_must_lower():
    gens = GeneratorSet(["a", "b"], [[0], [0]], [[0]])
    with pytest.raises(InvalidInputError):
        Presentation(gens, {(0, 1): gens.word(["b", "a"])})


def test_missing_rule_rejected_unless_partial():
    gens = GeneratorSet(["a", "b"], [[0], [0]], [[0]])
    with pytest.raises(InvalidInputError):
        Presentation(gens, {})
    p = Presentation(gens, {}, partial=True)
    assert p.normal_form(gens.word(["b", "a"])) == gens.word(["b", "a"])


def test_from_relations_solves_for_the_leading_pair():
    gens = GeneratorSet(["x", "y"], [[0], [0]], [[0]])
    rel = gens.word(["y", "x"]) * 2 - gens.word(["x", "y"]) * qpow(1)
    p = Presentation.from_relations(gens, [rel])
    assert p.rule(1, 0) == gens.word(["x", "y"]) * qpow(1) / 2


def test_text_form_round_trip():
    p = polynomial_presentation(["x", "y", "z"], q_power={(0, 1): 1, (1, 2): -2})
    again = Presentation.from_text(p.to_text())
    assert again.rules == p.rules
    assert again.degrees == p.degrees
    assert again.to_text() == p.to_text()


def test_q_polynomial_ring_is_confluent():
    p = polynomial_presentation(["w", "x", "y", "z"], q_power={(0, 1): 1, (0, 2): 2, (1, 3): -1})
    report = check_diamond(p)
    assert report.ok
    assert report.checked == report.total == len(list(triples(p))) == 4


def test_jacobi_failure_gives_replayable_witness():
    p = _lie_like({
        (0, 1): lambda g: g.gen("a"),
        (1, 2): lambda g: g.gen("b"),
        (0, 2): lambda g: g.zero(),
    })
    report = check_diamond(p)
    assert report.status == "counterexample"
    assert report.witness.triple == ("c", "b", "a")
    assert replay(p, report.witness)


def test_heisenberg_is_confluent():
    p = _lie_like({
        (0, 1): lambda g: g.zero(),
        (1, 2): lambda g: g.gen("a"),
        (0, 2): lambda g: g.zero(),
    })
    assert check_diamond(p).ok


def test_checkpoint_written_and_resumed(tmp_path):
    p = polynomial_presentation(["w", "x", "y", "z"])
    path = tmp_path / "sweep.ckpt.json"
    report = check_diamond(p, checkpoint=path, checkpoint_every=1)
    assert report.ok
    assert json.loads(path.read_text())["processed"] == 4

    save_checkpoint(path, p.name, 2, 4)
    resumed = check_diamond(p, checkpoint=path, checkpoint_every=1)
    assert resumed.ok
    assert "resumed at overlap 2" in resumed.notes


# ==================== SUB-PBW ====================
def test_pbw_generators_are_tame(sl3):
    xs = pbw_elements(sl3, [0, 1, 0])
    report = subpbw_analysis(sl3.plus, xs, degree_cap=3)
    assert report.spanning_all
    assert report.pair_degrees == {"X2.X1": 2, "X3.X1": 2, "X3.X2": 2}
    assert report.d0 == 2
    assert report.tame


def test_chevalley_generators_alone_do_not_span(sl3):
    gens = [sl3.plus.gen("1"), sl3.plus.gen("2")]
    report = subpbw_analysis(sl3.plus, gens, degree_cap=2, names=["E1", "E2"])
    assert report.filtration_dims[2] == 7
    assert report.ordered_ranks[2] == 6
    assert report.first_failure() == 2


def test_subpbw_needs_degree_two(sl3):
    with pytest.raises(InvalidInputError):
        subpbw_analysis(sl3.plus, [sl3.plus.gen("1")], degree_cap=1)

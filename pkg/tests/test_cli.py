import json

import pytest

from cli.export import (
    element_from_json,
    element_to_json,
    export_coefficient,
    export_element,
    presentation_from_json,
    presentation_to_json,
    ratq_from_json,
    ratq_to_json,
)
from cli.main import main
from cli.tasks import EXIT_INVALID, EXIT_OK, TaskReport, TaskSpec, replay_spec
from core.errors import InvalidInputError
from core.freealg import chevalley_generators
from core.qrat import hbar, qint
from uber.aq import aq3_pbw


# ==================== TASKS ====================
def test_task_hash_ignores_parameter_order():
    a = TaskSpec(command="verify psi", params={"n": 2, "no_braid": True})
    b = TaskSpec(command="verify psi", params={"no_braid": True, "n": 2})
    assert a.task_hash() == b.task_hash()
    assert a.task_hash() != TaskSpec(command="verify psi", params={"n": 3}).task_hash()


def test_replay_spec():
    spec = TaskSpec(command="cartan", target="A2", format="json")
    assert replay_spec(spec.canonical_json()) == spec
    with pytest.raises(InvalidInputError):
        replay_spec("{}")
    with pytest.raises(InvalidInputError):
        replay_spec("not json")


def test_report_outcome():
    report = TaskReport(task=TaskSpec(command="cartan"))
    assert report.exit_code == EXIT_OK
    report.merge("hom: ", {"a": True, "b": False}, {"b": "E1.E2"})
    assert not report.ok
    assert report.witnesses == {"hom: b": "E1.E2"}
    assert "witness: E1.E2" in report.to_text()


# ==================== EXPORT ====================
def test_export_coefficient():
    assert export_coefficient(qint(2), "text") == "q + q^-1\n"
    assert json.loads(export_coefficient(qint(2), "json")) == ratq_to_json(qint(2))
    with pytest.raises(InvalidInputError):
        export_coefficient(qint(2), "yaml")


def test_coefficient_json():
    c = hbar() / qint(3)
    assert ratq_from_json(ratq_to_json(c)) == c


def test_element_json():
    gens = chevalley_generators(["E1", "E2"], [[2, -1], [-1, 2]])
    u = gens.gen("E1") * gens.gen("E2") * qint(2) - gens.gen("E2") * gens.gen("E1")
    data = element_to_json(u)
    assert data["weight"] == [1, 1]
    assert element_from_json(gens, data) == u
    data["weight"] = [2, 0]
    with pytest.raises(InvalidInputError):
        element_from_json(gens, data)
    assert export_element(u, "text") == u.to_text() + "\n"


def test_presentation_json():
    p = aq3_pbw(2)
    restored = presentation_from_json(presentation_to_json(p))
    assert restored.gens.names == p.gens.names
    assert restored.degrees == p.degrees
    assert restored.to_text() == p.to_text()


# ==================== COMMAND LINE ====================
def test_fold_cartan_json(capsys):
    code = main(["fold", "cartan", "--type", "D4", "--aut", "(1 2 3)", "--format", "json"])
    assert code == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["data"]["c_sigma"] == [[2, -3], [-3, 6]]
    assert report["data"]["folded_symmetrizers"] == [1, 3]
    assert all(report["checks"].values())


def test_cartan_text(capsys):
    assert main(["cartan", "A2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "all checks passed" in out


def test_export_coeff_command(capsys):
    assert main(["export", "coeff", "--qint", "2"]) == EXIT_OK
    assert capsys.readouterr().out == "q + q^-1\n"


def test_unknown_presentation_is_invalid_input():
    assert main(["verify", "diamond", "--alg", "Nope"]) == EXIT_INVALID


def test_latex_needs_a_latex_command():
    assert main(["verify", "obstruction", "--format", "latex"]) == EXIT_INVALID


def test_replay_from_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["cartan", "A2", "--format", "json", "--out", str(out)]) == EXIT_OK
    first = json.loads(out.read_text(encoding="utf-8"))
    capsys.readouterr()
    assert main(["replay", str(out)]) == EXIT_OK
    again = json.loads(capsys.readouterr().out)
    assert again["data"] == first["data"]


def test_replay_rejects_missing_reports(tmp_path):
    assert main(["replay", str(tmp_path / "missing.json")]) == EXIT_INVALID

"""
qfold Command Line
------------------
Front end for the quantum-folding verifier: Cartan data, PBW presentations,
foldings, verification suites, Poisson tables and exports.

Every invocation becomes a TaskSpec; the spec is embedded in the report so
the same run can be replayed later with `replay REPORT.json`.

Exit codes:
    0  every check passed
    1  a check failed (the report carries a witness)
    2  invalid input

Usage:
    python src/cli/main.py cartan D4
    python src/cli/main.py fold cartan --type D4 --aut "(1 2 3)"
    python src/cli/main.py verify psi --n 2
    python src/cli/main.py verify diamond --alg Aq3:3
    python src/cli/main.py poisson jacobi --alg SqVV:2 --format json
    python src/cli/main.py export coeff --qint 2
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

# Add src to path
sys.path.append(str(Path(__file__).parent.parent))

from cli.export import (
    export_coefficient,
    export_element,
    export_poisson,
    export_presentation,
    poisson_to_json,
    presentation_to_json,
    presentation_to_latex,
)
from cli.tasks import EXIT_FAILED, EXIT_INVALID, TaskReport, TaskSpec, replay_spec
from config.settings import settings
from core.errors import InvalidInputError, NotSpecializableError, VerificationError
from core.qrat import RatQ, hbar, qint
from folding.context import compare_reduced_words, fold_context, hat_pbw, iota_report, named_aut
from folding.diagonal import diag_z, unenhanced_spanning
from lie.cartan import WeylGroup, fold_cartan, parse_cartan, parse_word
from poisson.bracket import PoissonTable, extract_poisson, jacobi_report
from poisson.ideals import lambda2_generators, poisson_quotient_check, s2_generators
from poisson.specialize import FAILS, rescale_presentation, specialize_presentation
from poisson.tables import aq4_missing_supplement, aq4_poisson_table, compare_tables, table_candidates, vv_candidates
from quantum.oracle import oracle_agreement
from quantum.pbw import pbw_presentation
from quantum.uqfull import UqAlgebra
from rewrite.diamond import check_diamond
from rewrite.presentation import Presentation
from rewrite.subpbw import SubPBWReport, subpbw_analysis
from uber import aq, g2, uqn
from uber.crossprod import dimension_report, sqvv_cross_product
from uber.dn_pbw import dn_explicit_pbw
from uber.gelfand import gelfand_report, printed_block_orientation
from uber.obstruction import naive_obstruction
from uber.presentations import available, named_presentation, parse_identifier
from uber.psi import build_psi
from uber.sqvv import family_report

logger = logging.getLogger("qfold")

# overlap sweeps above this size only run with --long
LONG_OVERLAPS = 2000

# latex output exists for these commands only
LATEX_COMMANDS = ("pbw", "poisson extract", "export coeff", "export element", "export presentation", "export poisson")

# argparse destinations that do not change the result of a task
RUNTIME_KEYS = ("command", "action", "format", "out", "jobs", "resume", "verbose", "target", "report")


@dataclass
class RunOptions:
    jobs: int = 1
    resume: bool = False
    progress: bool = False


Handler = Callable[[TaskSpec, TaskReport, RunOptions], None]


def print_header(title):
    """Print section header."""
    print("\n" + "=" * 70)
    print(f" {title}")
    print("=" * 70 + "\n")


def _param(task: TaskSpec, key: str, default=None):
    value = task.params.get(key)
    return default if value is None else value


def _require_target(task: TaskSpec) -> str:
    if not task.target:
        raise InvalidInputError(f"{task.command} needs a target")
    return task.target


# ==================== CARTAN AND PBW ====================
def run_cartan(task: TaskSpec, report: TaskReport, opts: RunOptions):
    datum = parse_cartan(_require_target(task))
    weyl = WeylGroup(datum)
    roots = weyl.positive_roots()
    w0 = weyl.longest_element()
    report.data["labels"] = list(datum.labels)
    report.data["cartan"] = datum.matrix.tolist()
    report.data["symmetrizers"] = list(datum.d)
    report.data["symmetrized"] = datum.symmetrized.tolist()
    report.data["positive_roots"] = [list(r) for r in roots]
    report.data["longest_word"] = [datum.labels[i] for i in w0]
    report.checks["longest word is reduced"] = weyl.is_reduced(w0)
    report.checks["length of w0 = number of positive roots"] = len(w0) == len(roots)


def run_pbw(task: TaskSpec, report: TaskReport, opts: RunOptions):
    datum = parse_cartan(_require_target(task))
    alg = UqAlgebra(datum)
    word_text = _param(task, "word")
    word = parse_word(word_text, datum) if word_text else WeylGroup(datum).longest_element()
    pbw = pbw_presentation(alg, word, name=f"PBW {datum.name}")
    p = pbw.presentation
    report.data["word"] = [datum.labels[i] for i in word]
    report.data["roots"] = [list(r) for r in pbw.roots]
    if _param(task, "check", False):
        _confluence(p, report, opts, checkpoint=None)
    if task.format == "json":
        report.data["presentation"] = presentation_to_json(p)
    elif task.format == "latex":
        report.data["document"] = presentation_to_latex(p)
    else:
        report.data["presentation"] = p.to_text()


# ==================== FOLDING ====================
def run_fold_cartan(task: TaskSpec, report: TaskReport, opts: RunOptions):
    datum = parse_cartan(_require_target(task))
    folding = fold_cartan(datum, named_aut(_param(task, "aut", "id"), datum))
    c = folding.c_sigma
    report.data["orbits"] = [[datum.labels[i] for i in orb] for orb in folding.orbits]
    report.data["c_sigma"] = c.tolist()
    report.data["folded_cartan"] = folding.folded.matrix.tolist()
    report.data["folded_symmetrizers"] = list(folding.folded.d)
    report.checks["C^σ is symmetric"] = bool((c == c.T).all())
    for key, note in folding.notes.items():
        report.notes.append(f"{key}: {note}")


def run_fold_context(task: TaskSpec, report: TaskReport, opts: RunOptions):
    ctx = fold_context(_require_target(task))
    elements = hat_pbw(ctx)
    report.data["hat_word"] = [ctx.folding.datum.labels[i] for i in ctx.hat_word]
    report.data["hat_pbw"] = [x.to_text() for x in elements]
    result = iota_report(ctx, max_degree=_param(task, "degree", 4))
    report.checks["ι images are σ-fixed"] = result.sigma_fixed
    report.checks["ι is injective on PBW monomials"] = result.injective
    report.data["monomials"] = result.monomials
    if result.failures:
        report.data["failures"] = result.failures


def run_fold_words(task: TaskSpec, report: TaskReport, opts: RunOptions):
    other = _param(task, "other")
    if not other:
        raise InvalidInputError("fold words needs --other CONTEXT")
    result = compare_reduced_words(fold_context(_require_target(task)), fold_context(other))
    report.merge("", result.identities)
    report.checks["every X̂' is a polynomial in the X̂"] = bool(result.expressions)
    report.data["case"] = result.case
    report.data["expressions"] = result.expressions


# ==================== VERIFY ====================
def _confluence(p: Presentation, report: TaskReport, opts: RunOptions, checkpoint: Optional[Path]):
    result = check_diamond(
        p,
        jobs=opts.jobs,
        checkpoint=checkpoint,
        checkpoint_every=settings.CHECKPOINT_EVERY,
        progress=opts.progress,
    )
    label = f"{p.name} is confluent"
    report.checks[label] = result.ok
    if result.witness:
        w = result.witness
        report.witnesses[label] = f"{'.'.join(w.triple)}: {w.left} != {w.right}"
    report.data["overlaps"] = f"{result.checked}/{result.total}"
    report.notes.extend(result.notes)


def run_verify_psi(task: TaskSpec, report: TaskReport, opts: RunOptions):
    result = build_psi(_param(task, "n", 2), braid=not _param(task, "no_braid", False))
    report.merge("", result.checks)
    report.data["rank(Ψ - 1)"] = result.rank_psi_minus_one
    report.data["expected rank"] = result.expected_rank


def run_verify_diamond(task: TaskSpec, report: TaskReport, opts: RunOptions):
    named = named_presentation(_require_target(task))
    p = named.presentation
    if not p.rules:
        raise InvalidInputError(f"{named.identifier} has no rewriting rules; confluence is undefined")
    m = len(p.gens)
    total = m * (m - 1) * (m - 2) // 6
    long_job = _param(task, "long", False)
    if total > LONG_OVERLAPS and not long_job:
        raise InvalidInputError(f"{named.identifier} has {total} overlaps; rerun with --long")
    checkpoint = None
    if long_job:
        checkpoint = task.checkpoint_path()
        if checkpoint.exists() and not opts.resume:
            checkpoint.unlink()
        report.notes.append(f"checkpoint file {checkpoint.name}")
    report.notes.extend(named.notes)
    _confluence(p, report, opts, checkpoint)


def _merge_hom(report: TaskReport, prefix: str, result):
    report.merge(prefix, result.checks, result.failures)


def run_verify_hom(task: TaskSpec, report: TaskReport, opts: RunOptions):
    key, n = parse_identifier(_require_target(task))
    if key == "Uqn" and n:
        result = uqn.structural_maps(n)
        for label, hom in result.homs.items():
            _merge_hom(report, f"{label}: ", hom)
        report.merge("", result.checks)
    elif key == "Aq3" and n:
        _merge_hom(report, "μ: ", aq.mu_report(n))
        _merge_hom(report, "A(z): ", aq.a_of_z_report(n))
        report.merge("ĩ: ", aq.splitting_report(n, max_degree=_param(task, "degree", 2)).checks)
    elif key == "Aq4" and n is None:
        named = named_presentation("Aq4")
        _merge_hom(report, "Serre-like: ", named.serre_check())
        for i in (1, 3):
            report.data[f"Y2{i} from Chevalley"] = aq.y2i_from_chevalley(named.presentation, i).to_text()
    elif key == "G2partial" and n is None:
        _merge_hom(report, "", g2.iota_hat_report())
        if _param(task, "long", False):
            _merge_hom(report, "", g2.mu_report())
        else:
            _merge_hom(report, "", g2.mu_report(labels=[g2.QUARTIC]))
            report.notes.append("μ checked on the quartic u-w relation only; --long checks every relation")
    else:
        raise InvalidInputError(f"no homomorphisms registered for {task.target!r}")


def run_verify_braid(task: TaskSpec, report: TaskReport, opts: RunOptions):
    key, n = parse_identifier(_require_target(task))
    if key == "Uqn" and n:
        report.merge("", uqn.braid_report(n, braid_relations=_param(task, "relations", False)).checks)
    elif key == "G2partial" and n is None:
        result = g2.braid_report()
        report.merge("", {label: v != "none" for label, v in result.checks.items()})
        report.data["matches"] = dict(result.checks)
    else:
        raise InvalidInputError(f"no braid action registered for {task.target!r}")


def _merge_subpbw(report: TaskReport, result: SubPBWReport, expect_failure: bool):
    if expect_failure:
        report.checks[f"ordered monomials fail to span by degree {result.cap}"] = not result.spanning_all
    else:
        report.merge("", {f"degree {k} spans": ok for k, ok in sorted(result.spanning.items())})
    report.data["first failure"] = result.first_failure()
    report.data["d0"] = result.d0
    report.data["tame"] = result.tame
    report.data["filtration dims"] = dict(result.filtration_dims)
    report.notes.extend(result.notes)


def run_verify_subpbw(task: TaskSpec, report: TaskReport, opts: RunOptions):
    cap = _param(task, "cap", settings.DEGREE_CAP)
    diag = _param(task, "diag")
    if diag is not None:
        result = unenhanced_spanning(diag, degree_cap=cap)
    else:
        ctx = fold_context(_require_target(task))
        names = [f"X{k + 1}" for k in range(ctx.length)]
        result = subpbw_analysis(ctx.ambient.plus, hat_pbw(ctx), degree_cap=cap, names=names)
    _merge_subpbw(report, result, _param(task, "expect_failure", False))


def run_verify_gelfand(task: TaskSpec, report: TaskReport, opts: RunOptions):
    n = _param(task, "n", 4)
    result = gelfand_report(n)
    report.merge("", result.checks)
    report.data["rank(Ψ - 1) per block"] = dict(result.block_ranks)
    if n == 4:
        report.checks["Ψ = id on 𝒱_4^(2)"] = result.block_ranks.get(2) == 0
        orientation = printed_block_orientation()
        report.checks["Ψ on 𝒱_4^(1) equals the published matrix"] = orientation == "rows"
        if orientation != "rows":
            report.witnesses["Ψ on 𝒱_4^(1) equals the published matrix"] = f"orientation: {orientation}"


def run_verify_obstruction(task: TaskSpec, report: TaskReport, opts: RunOptions):
    result = naive_obstruction()
    report.merge("", result.checks)
    report.data["determinant"] = str(result.determinant)


def run_verify_g2table(task: TaskSpec, report: TaskReport, opts: RunOptions):
    table = g2.g2_lie_table()
    dims = table.lower_central_dims()
    report.checks["antisymmetry and Jacobi on every triple"] = True
    report.checks["lower central series 13, 5, 0"] = dims == [13, 5, 0]
    report.data["lower central dims"] = dims
    report.data["centre dim"] = table.centre_dim()


def run_verify_diagonal(task: TaskSpec, report: TaskReport, opts: RunOptions):
    result = diag_z(_param(task, "n", 2), commuting=not _param(task, "no_commuting", False))
    report.merge("", result.checks)
    report.checks["det Z0 matrix != 0"] = bool(result.z0_determinant)
    report.data["det Z0 matrix"] = str(result.z0_determinant)


def run_verify_families(task: TaskSpec, report: TaskReport, opts: RunOptions):
    result = family_report(_param(task, "n", 2))
    report.merge("", result.families)
    for family, indices in result.failures.items():
        report.witnesses[family] = f"(i, j, k, l) = {indices}"


def run_verify_dpbw(task: TaskSpec, report: TaskReport, opts: RunOptions):
    result = dn_explicit_pbw(_param(task, "n", 2))
    report.merge("", result.checks)
    report.data["y matches"] = {f"{i}{j}": v for (i, j), v in result.y_matches.items()}
    report.data["x matches"] = {f"{i}{j}": v for (i, j), v in result.x_matches.items()}


def run_verify_dims(task: TaskSpec, report: TaskReport, opts: RunOptions):
    key, n = parse_identifier(_require_target(task))
    degree = _param(task, "degree", 4)
    if key == "Aq4" and n is None:
        counts = aq.aq4_dimension_report(degree)
    elif key == "SqVVxU" and n:
        counts = dimension_report(sqvv_cross_product(n), degree)
    else:
        raise InvalidInputError(f"no classical dimension count registered for {task.target!r}")
    for d, (ours, classical) in sorted(counts.items()):
        report.checks[f"degree {d}: {ours} ordered monomials = dim U(n)_{d}"] = ours == classical
        if ours != classical:
            report.witnesses[f"degree {d}: {ours} ordered monomials = dim U(n)_{d}"] = f"classical {classical}"


def run_verify_oracle(task: TaskSpec, report: TaskReport, opts: RunOptions):
    alg = UqAlgebra(parse_cartan(_require_target(task)))
    result = oracle_agreement(
        alg,
        samples=_param(task, "samples", 50),
        max_degree=_param(task, "degree", 4),
        seed=_param(task, "seed", 0),
        progress=opts.progress,
    )
    label = "quasi-derivation and elimination zero tests agree"
    report.checks[label] = result.ok
    if result.disagreements:
        report.witnesses[label] = result.disagreements[0]
    report.data["samples"] = result.samples
    report.data["zero samples"] = result.zeros


# ==================== POISSON ====================
def _poisson_source(task: TaskSpec) -> Tuple[Presentation, Optional[Dict]]:
    key, n = parse_identifier(_require_target(task))
    p = named_presentation(task.target).presentation
    supplement = aq4_missing_supplement() if key == "Aq4" else None
    if _param(task, "tilde", False):
        if key != "Aq3" or not n:
            raise InvalidInputError("--tilde rescales Aq3:n only")
        factors = {"u21": hbar()}
        factors.update({f"z{k}": hbar() for k in range(1, n)})
        p = rescale_presentation(p, factors)
    return p, supplement


def _extracted_table(task: TaskSpec, report: TaskReport) -> Optional[PoissonTable]:
    p, supplement = _poisson_source(task)
    spec = specialize_presentation(p)
    report.checks[f"{p.name} specializes at q = 1"] = spec.status != FAILS
    report.checks[f"{p.name} is optimal"] = spec.optimal
    if spec.offender:
        label = f"{p.name} specializes at q = 1" if spec.status == FAILS else f"{p.name} is optimal"
        report.witnesses[label] = spec.offender
    if not spec.optimal:
        return None
    table = extract_poisson(p, supplement)
    if table.missing:
        report.notes.append(f"{len(table.missing)} generator pairs have no rule and no supplement")
    return table


def _table(task: TaskSpec, report: TaskReport) -> Optional[PoissonTable]:
    if _param(task, "transcribed", False):
        if task.target != "Aq4":
            raise InvalidInputError("--transcribed is available for Aq4 only")
        return aq4_poisson_table()
    return _extracted_table(task, report)


def run_poisson_extract(task: TaskSpec, report: TaskReport, opts: RunOptions):
    table = _table(task, report)
    if table is None:
        return
    if task.format == "json":
        report.data["table"] = poisson_to_json(table)
    elif task.format == "latex":
        report.data["document"] = table.to_latex() + "\n"
    else:
        report.data["table"] = table.to_text()


def run_poisson_jacobi(task: TaskSpec, report: TaskReport, opts: RunOptions):
    table = _table(task, report)
    if table is None:
        return
    result = jacobi_report(table, progress=opts.progress)
    label = f"Jacobi on all {result.total} generator triples"
    report.checks[label] = result.ok
    if result.witness:
        report.witnesses[label] = f"{result.witness}: {result.residue}"
    report.notes.extend(result.notes)


def run_poisson_compare(task: TaskSpec, report: TaskReport, opts: RunOptions):
    key, n = parse_identifier(_require_target(task))
    if key == "SqVV" and n:
        _, transcribed = vv_candidates(n)
    elif key == "Aq4" and n is None:
        transcribed = table_candidates(aq4_poisson_table())
    else:
        raise InvalidInputError(f"no transcribed table for {task.target!r}")
    table = _extracted_table(task, report)
    if table is None:
        return
    result = compare_tables(table, transcribed)
    label = "extracted table matches the transcription"
    report.checks[label] = result.ok
    if result.disagree:
        (a, b), (ours, theirs) = next(iter(result.disagree.items()))
        report.witnesses[label] = f"{{{a}, {b}}} = {ours}, transcribed {theirs}"
    report.data["agreeing pairs"] = len(result.agree)
    report.data["differing pairs"] = len(result.disagree)


def run_poisson_ideals(task: TaskSpec, report: TaskReport, opts: RunOptions):
    key, n = parse_identifier(_require_target(task))
    if key != "SqVV" or not n:
        raise InvalidInputError("ideal checks are defined for SqVV:n")
    table = _extracted_table(task, report)
    if table is None:
        return
    for name, gens in (("Λ²V", lambda2_generators(table, n)), ("S²V", s2_generators(table, n))):
        result = poisson_quotient_check(table, gens, name=name)
        label = f"{name} generates a Poisson ideal"
        report.checks[label] = result.ok
        if result.witness:
            report.witnesses[label] = "{%s, %s} = %s" % result.witness


# ==================== EXPORT ====================
def run_export_coeff(task: TaskSpec, report: TaskReport, opts: RunOptions):
    n = _param(task, "qint")
    expr = _param(task, "expr")
    if n is not None:
        c = qint(n)
    elif expr:
        c = RatQ.parse(expr)
    else:
        raise InvalidInputError("export coeff needs --expr or --qint")
    report.data["document"] = export_coefficient(c, task.format)


def run_export_element(task: TaskSpec, report: TaskReport, opts: RunOptions):
    expr = _param(task, "expr")
    if not expr:
        raise InvalidInputError("export element needs --expr")
    p = named_presentation(_require_target(task)).presentation
    report.data["document"] = export_element(p.normal_form(p.element(expr)), task.format)


def run_export_presentation(task: TaskSpec, report: TaskReport, opts: RunOptions):
    report.data["document"] = export_presentation(named_presentation(_require_target(task)).presentation, task.format)


def run_export_poisson(task: TaskSpec, report: TaskReport, opts: RunOptions):
    table = _table(task, report)
    if table is None:
        raise InvalidInputError(f"{task.target} is not optimal; nothing to export")
    report.data["document"] = export_poisson(table, task.format)


HANDLERS: Dict[str, Handler] = {
    "cartan": run_cartan,
    "pbw": run_pbw,
    "fold cartan": run_fold_cartan,
    "fold context": run_fold_context,
    "fold words": run_fold_words,
    "verify psi": run_verify_psi,
    "verify diamond": run_verify_diamond,
    "verify hom": run_verify_hom,
    "verify braid": run_verify_braid,
    "verify subpbw": run_verify_subpbw,
    "verify gelfand": run_verify_gelfand,
    "verify obstruction": run_verify_obstruction,
    "verify g2table": run_verify_g2table,
    "verify diagonal": run_verify_diagonal,
    "verify families": run_verify_families,
    "verify dpbw": run_verify_dpbw,
    "verify dims": run_verify_dims,
    "verify oracle": run_verify_oracle,
    "poisson extract": run_poisson_extract,
    "poisson jacobi": run_poisson_jacobi,
    "poisson compare": run_poisson_compare,
    "poisson ideals": run_poisson_ideals,
    "export coeff": run_export_coeff,
    "export element": run_export_element,
    "export presentation": run_export_presentation,
    "export poisson": run_export_poisson,
}


# ==================== RUN ====================
def run(task: TaskSpec, opts: Optional[RunOptions] = None) -> Tuple[int, str, TaskReport]:
    """
    Execute a task.

    Args:
        task: What to run
        opts: Worker count, resume flag and progress bars

    Returns:
        (exit code, rendered document, report)

    Raises:
        InvalidInputError: for unknown commands, targets or formats
        VerificationError: for hard failures such as a broken Jacobi identity
    """
    opts = opts or RunOptions()
    handler = HANDLERS.get(task.command)
    if handler is None:
        raise InvalidInputError(f"unknown command {task.command!r}")
    if task.format == "latex" and task.command not in LATEX_COMMANDS:
        raise InvalidInputError(f"latex output is not available for {task.command}")
    report = TaskReport(task=task)
    logger.info("running %s", task.canonical_json())
    handler(task, report, opts)
    return report.exit_code, render(report), report


def render(report: TaskReport) -> str:
    document = report.data.get("document")
    if document is not None:
        return document
    if report.task.format == "json":
        return report.to_json() + "\n"
    return report.to_text()


def _hard_failure(task: TaskSpec, error: Exception, witness) -> Tuple[int, str, TaskReport]:
    report = TaskReport(task=task)
    report.checks[str(error)] = False
    if witness is not None:
        report.witnesses[str(error)] = str(witness)
    return EXIT_FAILED, render(report), report


# ==================== ARGUMENTS ====================
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")
    common.add_argument("--out", help="write the report to FILE instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default from QFOLD_JOBS)")
    common.add_argument("--long", action="store_true", help="allow long jobs and keep checkpoints")
    common.add_argument("--resume", action="store_true", help="continue a --long job from its checkpoint")
    common.add_argument("--verbose", action="store_true")
    return common


def _group(sub, name: str, help_text: str):
    parser = sub.add_parser(name, help=help_text)
    return parser.add_subparsers(dest="action", required=True)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="qfold", description="Exact verification of quantum foldings and uberalgebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cartan", parents=[common], help="Cartan matrix, roots and longest word")
    p.add_argument("target", metavar="TYPE", help='e.g. "A3", "D4", "G2", "A2xA2"')

    p = sub.add_parser("pbw", parents=[common], help="PBW presentation of U_q^+ for a reduced word")
    p.add_argument("--type", dest="target", required=True)
    p.add_argument("--word", help="1-based node positions, e.g. 121 (default: a word of w0)")
    p.add_argument("--check", action="store_true", help="also certify confluence")

    fold = _group(sub, "fold", "Folded Cartan data, hat-PBW elements and ι")
    p = fold.add_parser("cartan", parents=[common])
    p.add_argument("--type", dest="target", required=True)
    p.add_argument("--aut", default="id", help='automorphism name or cycles, e.g. "(1 2 3)"')
    p = fold.add_parser("context", parents=[common])
    p.add_argument("--context", dest="target", required=True, help='e.g. "D4/cyc123/121212"')
    p.add_argument("--degree", type=int, help="largest PBW monomial degree for ι")
    p = fold.add_parser("words", parents=[common])
    p.add_argument("--context", dest="target", required=True)
    p.add_argument("--other", required=True, help="context with a second reduced word")

    verify = _group(sub, "verify", "Verification suites")
    p = verify.add_parser("psi", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--no-braid", action="store_true", help="skip the braid equation on Y^(x)3")
    p = verify.add_parser("diamond", parents=[common])
    p.add_argument("--alg", dest="target", required=True, help=", ".join(available()))
    p = verify.add_parser("hom", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p.add_argument("--degree", type=int, help="monomial degree for the ĩ splitting check")
    p = verify.add_parser("braid", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p.add_argument("--relations", action="store_true", help="also check the braid relations")
    p = verify.add_parser("subpbw", parents=[common])
    p.add_argument("--context", dest="target")
    p.add_argument("--diag", type=int, help="unenhanced diagonal image for sl_3^n")
    p.add_argument("--cap", type=int)
    p.add_argument("--expect-failure", action="store_true")
    p = verify.add_parser("gelfand", parents=[common])
    p.add_argument("--n", type=int, default=4)
    verify.add_parser("obstruction", parents=[common])
    verify.add_parser("g2table", parents=[common])
    p = verify.add_parser("diagonal", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--no-commuting", action="store_true")
    p = verify.add_parser("families", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p = verify.add_parser("dpbw", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p = verify.add_parser("dims", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p.add_argument("--degree", type=int)
    p = verify.add_parser("oracle", parents=[common])
    p.add_argument("--type", dest="target", required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--seed", type=int)

    poisson = _group(sub, "poisson", "Semiclassical limits")
    for action in ("extract", "jacobi", "compare", "ideals"):
        p = poisson.add_parser(action, parents=[common])
        p.add_argument("--alg", dest="target", required=True)
        p.add_argument("--tilde", action="store_true", help="rescale u21 and z_k by q - q^-1 (Aq3:n)")
        if action in ("extract", "jacobi"):
            p.add_argument("--transcribed", action="store_true", help="use the transcribed Aq4 table")

    export = _group(sub, "export", "Canonical text, JSON and LaTeX forms")
    p = export.add_parser("coeff", parents=[common])
    p.add_argument("--expr")
    p.add_argument("--qint", type=int)
    p = export.add_parser("element", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p.add_argument("--expr", required=True, help='e.g. "(1)*u1.u2 + (-q^-2)*u2.u1"')
    p = export.add_parser("presentation", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p = export.add_parser("poisson", parents=[common])
    p.add_argument("--alg", dest="target", required=True)
    p.add_argument("--tilde", action="store_true")
    p.add_argument("--transcribed", action="store_true")

    p = sub.add_parser("replay", parents=[common], help="rerun the task embedded in a JSON report")
    p.add_argument("report", metavar="REPORT")
    return ap


def task_from_args(args: argparse.Namespace) -> TaskSpec:
    """Everything but runtime switches goes into the spec."""
    if args.command == "replay":
        path = Path(args.report)
        if not path.exists():
            raise InvalidInputError(f"report {path} does not exist")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"{path} is not JSON: {e}") from e
        if "task" not in data:
            raise InvalidInputError(f"{path} is not a JSON report (no 'task' field)")
        return replay_spec(json.dumps(data["task"]))
    command = args.command if getattr(args, "action", None) is None else f"{args.command} {args.action}"
    params = {k: v for k, v in vars(args).items() if k not in RUNTIME_KEYS and v not in (None, False)}
    return TaskSpec(command=command, target=getattr(args, "target", None) or "", params=params, format=args.format)


def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    if not settings.validate():
        return EXIT_INVALID

    opts = RunOptions(jobs=args.jobs or settings.JOBS, resume=args.resume, progress=sys.stderr.isatty())
    try:
        task = task_from_args(args)
        code, document, report = run(task, opts)
    except InvalidInputError as e:
        print(f"❌ Invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except VerificationError as e:
        code, document, report = _hard_failure(task, e, e.witness)
    except NotSpecializableError as e:
        code, document, report = _hard_failure(task, e, e.offender)

    if args.out:
        Path(args.out).write_text(document, encoding="utf-8")
        print(f"💾 Report written to {args.out} ({'✅ passed' if report.ok else '❌ failed'})")
    else:
        if task.format == "text" and "document" not in report.data:
            print_header(f"🧮 {task.command} {task.target}".rstrip())
        print(document, end="")
    return code


if __name__ == "__main__":
    sys.exit(main())

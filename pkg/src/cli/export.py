"""
Export Module
-------------
Canonical text, JSON and LaTeX forms of coefficients, free-algebra elements,
presentations and Poisson tables.

JSON schema of an element:
    {"weight": [...], "terms": [{"coeff": {"num": "...", "den": "..."}, "word": ["E1", ...]}]}
Terms are listed in descending word order, so equal elements export to
identical bytes.
"""

import json
import logging
from typing import Any, Dict

import sympy

from core.errors import InvalidInputError
from core.freealg import FreeElement, GeneratorSet
from core.qrat import RatQ
from poisson.bracket import PoissonTable, latex_name
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "latex")

_Q = sympy.Symbol("q")


def _check_format(fmt: str):
    if fmt not in FORMATS:
        raise InvalidInputError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ==================== COEFFICIENTS ====================
def ratq_to_json(c: RatQ) -> Dict[str, str]:
    return {"num": str(RatQ.from_laurent(c.numer)), "den": str(RatQ.from_laurent(c.denom))}


def ratq_from_json(data: Dict[str, str]) -> RatQ:
    return RatQ.parse(data["num"]) / RatQ.parse(data["den"])


def ratq_to_sympy(c: RatQ) -> sympy.Expr:
    num = sum((k * _Q ** e for e, k in c.numer.items()), sympy.Integer(0))
    den = sum((k * _Q ** e for e, k in c.denom.items()), sympy.Integer(0))
    return sympy.factor(num / den)


def export_coefficient(c: RatQ, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "json":
        return _dump(ratq_to_json(c))
    if fmt == "latex":
        return sympy.latex(ratq_to_sympy(c)) + "\n"
    return str(c) + "\n"


# ==================== ELEMENTS ====================
def element_to_json(u: FreeElement) -> Dict[str, Any]:
    weight = list(u.weight()) if u.is_homogeneous() else None
    terms = [{"coeff": ratq_to_json(c), "word": [u.gens.names[x] for x in w]} for w, c in u.sorted_terms()]
    return {"weight": weight, "terms": terms}


def element_from_json(gens: GeneratorSet, data: Dict[str, Any]) -> FreeElement:
    """
    Inverse of element_to_json.

    Raises:
        InvalidInputError: on an unknown generator or a weight that disagrees with the terms
    """
    out = gens.zero()
    for term in data.get("terms", []):
        out = out + gens.word(term["word"]) * ratq_from_json(term["coeff"])
    weight = data.get("weight")
    if weight is not None and out and list(out.weight()) != list(weight):
        raise InvalidInputError(f"recorded weight {weight} does not match the terms")
    return out


def _word_latex(gens: GeneratorSet, word) -> str:
    if not word:
        return "1"
    return " ".join(latex_name(gens.names[x]) for x in word)


def element_to_latex(u: FreeElement) -> str:
    if not u:
        return "0"
    parts = []
    for w, c in u.sorted_terms():
        coeff = sympy.latex(ratq_to_sympy(c))
        parts.append(f"\\left({coeff}\\right) {_word_latex(u.gens, w)}")
    return " + ".join(parts)


def export_element(u: FreeElement, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "json":
        return _dump(element_to_json(u))
    if fmt == "latex":
        return element_to_latex(u) + "\n"
    return u.to_text() + "\n"


# ==================== PRESENTATIONS ====================
def presentation_to_json(p: Presentation) -> Dict[str, Any]:
    gens = p.gens
    return {
        "name": p.name,
        "partial": p.partial,
        "pairing": [[int(x) for x in row] for row in gens.pairing.tolist()],
        "generators": [
            {"name": nm, "weight": list(gens.weights[i]), "degree": p.degrees[i]} for i, nm in enumerate(gens.names)
        ],
        "rules": [
            {"upper": gens.names[y], "lower": gens.names[x], "rhs": element_to_json(p.rules[(x, y)])}
            for (x, y) in sorted(p.rules, key=lambda pair: (pair[1], pair[0]))
        ],
    }


def presentation_from_json(data: Dict[str, Any]) -> Presentation:
    gens = GeneratorSet(
        [g["name"] for g in data["generators"]],
        [g["weight"] for g in data["generators"]],
        data["pairing"],
    )
    rules = {}
    for rule in data["rules"]:
        rules[(gens.lookup(rule["lower"]), gens.lookup(rule["upper"]))] = element_from_json(gens, rule["rhs"])
    degrees = [g["degree"] for g in data["generators"]]
    return Presentation(gens, rules, degrees, name=data.get("name", ""), partial=bool(data.get("partial")))


def presentation_to_latex(p: Presentation) -> str:
    rows = []
    for (x, y) in sorted(p.rules, key=lambda pair: (pair[1], pair[0])):
        lhs = f"{latex_name(p.gens.names[y])} {latex_name(p.gens.names[x])}"
        rows.append(f"{lhs} &= {element_to_latex(p.rules[(x, y)])}")
    return "\\begin{align*}\n" + "\\\\\n".join(rows) + "\n\\end{align*}\n"


def export_presentation(p: Presentation, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "json":
        return _dump(presentation_to_json(p))
    if fmt == "latex":
        return presentation_to_latex(p)
    return p.to_text()


# ==================== POISSON TABLES ====================
def poisson_to_json(table: PoissonTable) -> Dict[str, Any]:
    rename = {s: sympy.Symbol(n) for s, n in zip(table.symbols, table.names)}
    return {
        "name": table.name,
        "generators": list(table.names),
        "brackets": [
            {"a": a, "b": b, "value": sympy.sstr(v.xreplace(rename))} for (a, b), v in table.nonzero().items()
        ],
        "missing": [list(pair) for pair in table.missing],
    }


def export_poisson(table: PoissonTable, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "json":
        return _dump(poisson_to_json(table))
    if fmt == "latex":
        return table.to_latex() + "\n"
    return table.to_text() + "\n"

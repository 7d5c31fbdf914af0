"""
Transcribed Bracket Tables
--------------------------
Literal bracket tables kept independent of any derivation, for comparison
with extract_poisson output.

The S(V⊗V) table is given by twelve pattern formulas over 1 ≤ i ≤ j ≤ k ≤ l ≤ n.
When indices coincide several patterns can name the same generator pair, so
each pair keeps every candidate value. The patterns are printed with
{a, b} = lim (ba - ab)/(q - 1), the reverse of extract_poisson, and are
negated on the way in.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Tuple

import sympy

from poisson.bracket import PoissonTable
from uber.aq import AQ4_ORDER
from uber.sqvv import ordered_pairs, pair_name

logger = logging.getLogger(__name__)

Candidates = Dict[Tuple[str, str], List[sympy.Expr]]


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


# ==================== S(V⊗V) ====================
def _vv_patterns(X: Callable[[int, int], sympy.Symbol]):
    """(first pair, second pair, value) per pattern, as functions of (i, j, k, l)."""

    def plus4(i, j, k, l):
        return _d(i, k) + _d(i, l) + _d(j, k) + _d(j, l)

    def mixed(i, j, k, l):
        return _d(i, j) + _d(i, l) - _d(j, k) + _d(k, l)

    def outer(i, j, k, l):
        return _d(i, j) + _d(i, k) - _d(j, l) - _d(k, l)

    return [
        (lambda i, j, k, l: ((i, j), (k, l), plus4(i, j, k, l) * X(i, j) * X(k, l) - 2 * (X(i, l) * X(k, j) + X(k, i) * X(l, j)))),
        (lambda i, j, k, l: ((i, j), (l, k), plus4(i, j, k, l) * X(i, j) * X(l, k) - 2 * (X(k, j) * X(l, i) + X(i, k) * X(l, j)))),
        (lambda i, j, k, l: ((j, i), (k, l), plus4(i, j, k, l) * X(j, i) * X(k, l) - 2 * (X(j, l) * X(k, i) + X(k, j) * X(l, i)))),
        (lambda i, j, k, l: ((j, i), (l, k), plus4(i, j, k, l) * X(j, i) * X(l, k) - 2 * (X(j, k) * X(l, i) + X(k, i) * X(l, j)))),
        (lambda i, j, k, l: ((i, k), (j, l), mixed(i, j, k, l) * X(i, k) * X(j, l) - 2 * (X(i, l) * X(j, k) - X(i, j) * X(k, l) + X(j, i) * X(l, k)))),
        (lambda i, j, k, l: ((i, k), (l, j), mixed(i, j, k, l) * X(i, k) * X(l, j) - 2 * X(j, k) * X(l, i))),
        (lambda i, j, k, l: ((k, i), (j, l), mixed(i, j, k, l) * X(j, l) * X(k, i) - 2 * X(j, k) * X(l, i))),
        (lambda i, j, k, l: ((k, i), (l, j), mixed(i, j, k, l) * X(k, i) * X(l, j) - 2 * X(k, j) * X(l, i))),
        (lambda i, j, k, l: ((i, l), (j, k), outer(i, j, k, l) * X(i, l) * X(j, k) + 2 * (X(i, j) * X(l, k) - X(j, i) * X(k, l)))),
        (lambda i, j, k, l: ((i, l), (k, j), outer(i, j, k, l) * X(i, l) * X(k, j) + 2 * (X(i, k) * X(l, j) - X(j, l) * X(k, i)))),
        (lambda i, j, k, l: ((l, i), (k, j), outer(i, j, k, l) * X(k, j) * X(l, i))),
        (lambda i, j, k, l: ((l, i), (j, k), outer(i, j, k, l) * X(j, k) * X(l, i))),
    ]


def vv_candidates(n: int) -> Tuple[List[str], Candidates]:
    """
    Every value the pattern formulas assign to each ordered generator pair,
    in extract_poisson orientation.

    Returns:
        (generator names in ≺ order, {(a, b): [candidate {a, b}, ...]})
    """
    names = [pair_name(n, p) for p in ordered_pairs(n)]
    syms = {p: sympy.Symbol(pair_name(n, p)) for p in ordered_pairs(n)}

    def X(a: int, b: int) -> sympy.Symbol:
        return syms[(a, b)]

    out: Candidates = {}
    for i, j, k, l in combinations_with_replacement(range(1, n + 1), 4):
        for pattern in _vv_patterns(X):
            first, second, value = pattern(i, j, k, l)
            if first == second:
                continue
            a, b = pair_name(n, first), pair_name(n, second)
            value = sympy.expand(-value)
            if (b, a) in out:
                a, b, value = b, a, -value
            bucket = out.setdefault((a, b), [])
            if not any(sympy.expand(value - v) == 0 for v in bucket):
                bucket.append(value)
    return names, out


# ==================== 𝒜_{q,4} ====================
def _aq4_entries() -> List[Tuple[str, str, str]]:
    """
    The sl_4-diagonal bracket table, i ∈ {1, 3}, j = 4 - i.

    Printed names Y_{i2}, Z_{i2} and Z_{2132} are read as Y_{2i}, Z_{2i} and Z_{1232}.
    Entries printed for i = 1 only are written in i and j. {Y_{2i}, Z_{13}} carries
    Y_{2i} Z_{i2j} and {Z_{1232}, Z_{i2j}} carries Y_{2j} Z_{2i} Y_{13}, as the
    rewriting rules and Jacobi require.
    """
    rows: List[Tuple[str, str, str]] = [
        ("Y2", "Y13", "-4*Y21*Y23 - 2*Z1232"),
        ("Y2", "Z13", "2*Y2*Z123 + 2*Y2*Z13 + 2*Y2*Z321 - 2*Y21*Z23 - 2*Y23*Z21 - 2*Z21*Z23"),
        ("Y2", "Z1232", "-2*Y2*Z1232"),
        ("Y13", "Z13", "-2*Y13*Z13 + 2*Z123*Z321"),
        ("Y13", "Z1232", "2*Y13*Z1232"),
        ("Z21", "Z23", "-2*Y2*Z123 + 2*Y2*Z321 - 2*Y21*Z23 + 2*Y23*Z21"),
        (
            "Z13",
            "Z1232",
            "2*(Y21*Y23*Z123 - Y2*Y13*Z123 - Y2*Z123*Z321 - Y2*Y13*Z321 + Z21*Z23*Y13 + Y21*Y23*Z321)",
        ),
    ]
    for i in (1, 3):
        j = 4 - i
        s = {
            "i": str(i),
            "j": str(j),
            "Yi": f"Y{i}",
            "Yj": f"Y{j}",
            "Y2i": f"Y2{i}",
            "Y2j": f"Y2{j}",
            "Z2i": f"Z2{i}",
            "Z2j": f"Z2{j}",
            "Zi2j": f"Z{i}2{j}",
            "Zj2i": f"Z{j}2{i}",
        }
        templates = [
            ("Y2", "{Yi}", "2*Y2*{Yi} - 4*{Y2i} - 2*{Z2i}"),
            ("Y2", "{Y2i}", "-2*{Y2i}*Y2"),
            ("Y2", "{Zi2j}", "-2*{Z2i}*{Y2j} + 2*Z1232"),
            ("{Yi}", "{Y2i}", "2*{Yi}*{Y2i}"),
            ("{Yj}", "{Y2i}", "-2*{Y2i}*{Yj} + 4*Y13 + 2*{Zj2i}"),
            ("{Y2i}", "Y13", "-2*{Y2i}*Y13"),
            ("{Y2i}", "{Z2j}", "2*{Y2i}*{Z2j} - 2*Z1232"),
            ("{Y2i}", "{Zi2j}", "-2*{Y2i}*{Zi2j}"),
            ("{Y2i}", "Z13", "2*{Y2i}*{Zi2j} - 2*{Z2i}*Y13"),
            ("{Yi}", "Y13", "2*Y13*{Yi}"),
            ("{Yi}", "{Z2j}", "-2*{Z2j}*{Yi} + 4*{Zj2i} + 2*Z13"),
            ("Y13", "{Z2i}", "2*{Y2i}*{Zi2j}"),
            ("{Z2i}", "{Zi2j}", "2*Z1232*{Yi} + 2*{Y2i}*{Zi2j} - 2*{Z2i}*{Zi2j} - 2*{Z2i}*Y13"),
            ("{Z2i}", "Z13", "2*(Y2*{Zj2i}*{Yi} - {Y2i}*{Z2j}*{Yi} + {Y2i}*Z13 - {Z2i}*{Zj2i})"),
            ("{Z2i}", "{Zj2i}", "-2*{Y2i}*{Zi2j} - 2*{Y2i}*Z13 + 2*{Z2i}*Y13 + 2*{Z2i}*{Zj2i}"),
            ("{Z2i}", "Z1232", "-2*Y2*{Y2i}*{Zi2j} - 2*{Y2i}*Z1232 + 2*Y21*Y23*{Z2i}"),
            ("Z13", "{Zi2j}", "2*{Z2j}*Y13*{Yi} - 2*{Y2j}*{Zj2i}*{Yi} + 2*Z123*Z321 - 2*Y13*Z13"),
            ("{Yi}", "{Zj2i}", "2*{Yi}*{Zj2i}"),
            ("Z1232", "{Yi}", "2*{Y2i}*{Zi2j} - 2*Y13*{Z2i}"),
            ("Z1232", "{Zi2j}", "2*Y21*Y23*{Zi2j} - 2*{Y2j}*{Z2i}*Y13 + 2*Y13*Z1232"),
        ]
        rows += [(a.format(**s), b.format(**s), v.format(**s)) for a, b, v in templates]
    return rows


def aq4_poisson_table() -> PoissonTable:
    """The transcribed bracket on the specialization of 𝒜_{q,4}; unlisted pairs are zero."""
    table = PoissonTable(AQ4_ORDER, name="Aq4 (transcribed)")
    local = {n: s for n, s in zip(table.names, table.symbols)}
    for a, b, v in _aq4_entries():
        table.set(a, b, sympy.sympify(v, locals=local))
    return table


def aq4_missing_supplement() -> Dict[Tuple[str, str], str]:
    """Brackets for the two pairs the rewriting rules leave out."""
    return {(a, b): v for a, b, v in _aq4_entries() if a == "Y2" and b in ("Z123", "Z321")}


# ==================== COMPARISON ====================
@dataclass
class TableComparison:
    """
    Attributes:
        agree: Pairs whose extracted value matches a transcribed candidate
        disagree: Pair -> (extracted, transcribed candidates) as text
    """

    name: str
    agree: List[Tuple[str, str]] = field(default_factory=list)
    disagree: Dict[Tuple[str, str], Tuple[str, List[str]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagree


def compare_tables(extracted: PoissonTable, transcribed: Candidates, name: str = "") -> TableComparison:
    """
    Compare on every generator pair; a pair the transcription omits counts as
    the single candidate 0. Symbols are matched by name.
    """
    report = TableComparison(name or extracted.name)
    rename = {s: sympy.Symbol(n) for s, n in zip(extracted.symbols, extracted.names)}
    for a_idx in range(len(extracted)):
        for b_idx in range(a_idx + 1, len(extracted)):
            a, b = extracted.names[a_idx], extracted.names[b_idx]
            value = sympy.expand(extracted.pair(a_idx, b_idx).xreplace(rename))
            if (a, b) in transcribed:
                cands = transcribed[(a, b)]
            elif (b, a) in transcribed:
                cands = [sympy.expand(-v) for v in transcribed[(b, a)]]
            else:
                cands = [sympy.Integer(0)]
            if any(sympy.expand(value - c) == 0 for c in cands):
                report.agree.append((a, b))
            else:
                report.disagree[(a, b)] = (sympy.sstr(value), [sympy.sstr(c) for c in cands])
    logger.info("%s: %d pairs agree, %d differ", report.name, len(report.agree), len(report.disagree))
    return report


def table_candidates(table: PoissonTable) -> Candidates:
    """A PoissonTable as single-candidate data for compare_tables."""
    rename = {s: sympy.Symbol(n) for s, n in zip(table.symbols, table.names)}
    return {pair: [sympy.expand(v.xreplace(rename))] for pair, v in table.nonzero().items()}

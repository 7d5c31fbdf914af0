"""
Poisson Bracket Module
----------------------
Quadratic-and-higher Poisson brackets on polynomial rings k[X_A], stored on
generator pairs and extended by the Leibniz rule.

Features:
- PoissonTable on sympy symbols; {X', X} stored, {X, X'} by negation
- extract_poisson: first-order Taylor coefficients at q = 1 of an optimal
  PBW presentation
- Jacobi on every generator triple, with the first failing triple as witness
- Text and LaTeX rendering
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from tqdm import tqdm

from core.errors import InvalidInputError, NotSpecializableError
from core.freealg import Word
from core.qrat import taylor_at_1
from poisson.specialize import normalized_rules, rule_text
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)


def _symbol_name(name: str) -> str:
    return name.replace("~", "t")


class PoissonTable:
    """Bracket values on generator pairs of a commutative polynomial ring."""

    def __init__(self, names: Sequence[str], name: str = ""):
        """
        Initialize an empty (zero) table.

        Args:
            names: Generators in their fixed order
            name: Identifier used in reports
        """
        self.names: Tuple[str, ...] = tuple(names)
        self.name = name
        self.symbols: Tuple[sympy.Symbol, ...] = tuple(sympy.Symbol(_symbol_name(n)) for n in self.names)
        self.index = {n: k for k, n in enumerate(self.names)}
        self._values: Dict[Tuple[int, int], sympy.Expr] = {}
        self.missing: List[Tuple[str, str]] = []

    def __len__(self) -> int:
        return len(self.names)

    def sym(self, name: str) -> sympy.Symbol:
        return self.symbols[self.lookup(name)]

    def lookup(self, name: str) -> int:
        if name not in self.index:
            raise InvalidInputError(f"unknown generator {name!r} in {self.name or 'table'}")
        return self.index[name]

    def monomial(self, word: Word) -> sympy.Expr:
        out = sympy.Integer(1)
        for x in word:
            out = out * self.symbols[x]
        return out

    # ==================== VALUES ====================
    def set(self, a: str, b: str, value):
        """Record {a, b} = value (and {b, a} = -value)."""
        i, j = self.lookup(a), self.lookup(b)
        if i == j:
            raise InvalidInputError(f"{{{a}, {a}}} is zero by antisymmetry")
        value = sympy.expand(sympy.sympify(value))
        if i < j:
            self._values[(i, j)] = value
        else:
            self._values[(j, i)] = sympy.expand(-value)

    def get(self, a: str, b: str) -> sympy.Expr:
        return self.pair(self.lookup(a), self.lookup(b))

    def pair(self, i: int, j: int) -> sympy.Expr:
        if i == j:
            return sympy.Integer(0)
        if i < j:
            return self._values.get((i, j), sympy.Integer(0))
        return -self._values.get((j, i), sympy.Integer(0))

    def nonzero(self) -> Dict[Tuple[str, str], sympy.Expr]:
        return {(self.names[i], self.names[j]): v for (i, j), v in sorted(self._values.items()) if v != 0}

    # ==================== LEIBNIZ ====================
    def bracket(self, f, g) -> sympy.Expr:
        """{f, g} = Σ_{a,b} ∂f/∂x_a ∂g/∂x_b {x_a, x_b}."""
        f, g = sympy.sympify(f), sympy.sympify(g)
        df = {k: sympy.diff(f, s) for k, s in enumerate(self.symbols) if s in f.free_symbols}
        dg = {k: sympy.diff(g, s) for k, s in enumerate(self.symbols) if s in g.free_symbols}
        out = sympy.Integer(0)
        for a, fa in df.items():
            for b, gb in dg.items():
                v = self.pair(a, b)
                if v != 0:
                    out += fa * gb * v
        return sympy.expand(out)

    def jacobiator(self, a: int, b: int, c: int) -> sympy.Expr:
        x, y, z = self.symbols[a], self.symbols[b], self.symbols[c]
        return sympy.expand(
            self.bracket(self.bracket(x, y), z) + self.bracket(self.bracket(y, z), x) + self.bracket(self.bracket(z, x), y)
        )

    # ==================== TEXT FORMS ====================
    def to_text(self) -> str:
        lines = [f"poisson {self.name or '-'}", "generators " + " ".join(self.names)]
        for (a, b), v in self.nonzero().items():
            lines.append(f"{{{a}, {b}}} = {sympy.sstr(v)}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        rows = []
        for (a, b), v in self.nonzero().items():
            rows.append(f"&\\{{{latex_name(a)},{latex_name(b)}\\}}={sympy.latex(v, symbol_names=self._latex_symbols())}")
        return "\\begin{align*}\n" + "\\\\\n".join(rows) + "\n\\end{align*}"

    def _latex_symbols(self) -> Dict[sympy.Symbol, str]:
        return {s: latex_name(n) for s, n in zip(self.symbols, self.names)}


def latex_name(name: str) -> str:
    """X12 -> X_{12}, z1 -> z_{1}, u21~ -> \\tilde u_{21}."""
    tilde = name.endswith("~")
    base = name.rstrip("~")
    head = base.rstrip("0123456789_")
    tail = base[len(head):].replace("_", "")
    out = f"{head}_{{{tail}}}" if tail else head
    return f"\\tilde {out}" if tilde else out


# ==================== EXTRACTION ====================
def extract_poisson(p: Presentation, supplement: Optional[Dict[Tuple[str, str], str]] = None) -> PoissonTable:
    """
    {X', X} = Σ_M (∂c^M_{X,X'}/∂t)|_{t=0} M with q = 1 + t.

    Args:
        p: Optimal specializable PBW presentation
        supplement: Bracket values {a, b} (sympy-parsable text) for pairs a
            partial presentation has no rule for

    Returns:
        PoissonTable; pairs neither ruled nor supplemented are listed in .missing

    Raises:
        InvalidInputError: if p is not optimal
        NotSpecializableError: if a coefficient has a pole at q = 1
    """
    table = PoissonTable(p.gens.names, name=p.name)
    for (x, y), rhs in normalized_rules(p).items():
        if (x, y) not in rhs.terms:
            raise InvalidInputError(f"{p.name} is not optimal: {rule_text(p, x, y, rhs)}")
        value = sympy.Integer(0)
        for w, c in rhs.terms.items():
            try:
                a0, a1 = taylor_at_1(c, 1)
            except NotSpecializableError as e:
                raise NotSpecializableError(f"{p.name}: pole at q = 1 in {rule_text(p, x, y, rhs)}", e.offender) from e
            if a0 != (1 if w == (x, y) else 0):
                raise InvalidInputError(f"{p.name} is not optimal: {rule_text(p, x, y, rhs)}")
            if a1:
                value += sympy.Rational(a1.numerator, a1.denominator) * table.monomial(w)
        table.set(p.gens.names[y], p.gens.names[x], value)
    supplement = supplement or {}
    local = {_symbol_name(n): s for n, s in zip(table.names, table.symbols)}
    for y in range(len(p.gens)):
        for x in range(y):
            if (x, y) in p.rules:
                continue
            a, b = p.gens.names[x], p.gens.names[y]
            if (a, b) in supplement:
                table.set(a, b, sympy.sympify(supplement[(a, b)], locals=local))
            elif (b, a) in supplement:
                table.set(b, a, sympy.sympify(supplement[(b, a)], locals=local))
            else:
                table.missing.append((a, b))
    logger.info("%s: %d nonzero brackets, %d pairs missing", p.name, len(table.nonzero()), len(table.missing))
    return table


# ==================== JACOBI ====================
@dataclass
class JacobiReport:
    name: str
    checked: int = 0
    total: int = 0
    witness: Optional[Tuple[str, str, str]] = None
    residue: str = ""
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.witness is None and self.checked == self.total


def jacobi_report(table: PoissonTable, progress: bool = False, stop_at_first: bool = True) -> JacobiReport:
    """{{a,b},c} + {{b,c},a} + {{c,a},b} = 0 on every generator triple."""
    triples = list(combinations(range(len(table)), 3))
    report = JacobiReport(table.name, total=len(triples))
    if table.missing:
        report.notes.append(f"{len(table.missing)} generator pairs have no bracket and count as zero")
    for a, b, c in tqdm(triples, desc=f"Jacobi {table.name}", disable=not progress):
        j = table.jacobiator(a, b, c)
        report.checked += 1
        if j != 0 and report.witness is None:
            report.witness = (table.names[a], table.names[b], table.names[c])
            report.residue = sympy.sstr(j)
            logger.warning("%s: Jacobi fails on %s", table.name, report.witness)
            if stop_at_first:
                break
    return report

"""
Poisson Ideal Module
--------------------
Decide whether the ideal generated by linear forms is a Poisson ideal.

For an ideal J = (ℓ_1, ..., ℓ_r) with linear ℓ's, the Leibniz rule reduces
{J, k[X]} ⊆ J to {ℓ_a, X} ∈ J for every ℓ_a and every generator X; membership
in J is tested by eliminating one pivot variable per independent ℓ.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from core.errors import InvalidInputError
from poisson.bracket import PoissonTable
from uber.sqvv import pair_name

logger = logging.getLogger(__name__)


@dataclass
class IdealReport:
    name: str
    checks: Dict[str, bool] = field(default_factory=dict)
    witness: Optional[Tuple[str, str, str]] = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _elimination(table: PoissonTable, gens: Sequence[sympy.Expr]) -> Dict[sympy.Symbol, sympy.Expr]:
    """Pivot substitutions x_p -> (rest) that send every element of the ideal's linear span to zero."""
    syms = list(table.symbols)
    rows = []
    for g in gens:
        poly = sympy.Poly(g, *syms)
        if poly.total_degree() > 1 or poly.coeff_monomial(1) != 0:
            raise InvalidInputError(f"ideal generator {g} is not a linear form")
        rows.append([poly.coeff_monomial(s) for s in syms])
    rref, pivots = sympy.Matrix(rows).rref()
    subs = {}
    for r, p in enumerate(pivots):
        rest = sum((-rref[r, c] * syms[c] for c in range(len(syms)) if c != p), sympy.Integer(0))
        subs[syms[p]] = rest
    return subs


def in_ideal(expr, subs: Dict[sympy.Symbol, sympy.Expr]) -> bool:
    return sympy.expand(sympy.sympify(expr).xreplace(subs)) == 0


def poisson_quotient_check(table: PoissonTable, ideal_gens: Sequence, name: str = "") -> IdealReport:
    """
    TRUE iff {ℓ, X} lies in the ideal for every ℓ in ideal_gens and every generator X.

    Args:
        table: Poisson bracket on generators
        ideal_gens: Linear forms in the table's symbols
        name: Identifier used in reports

    Raises:
        InvalidInputError: if some generator of the ideal is not linear
    """
    gens = [sympy.sympify(g) for g in ideal_gens]
    subs = _elimination(table, gens)
    report = IdealReport(name or f"ideal in {table.name}")
    for g in gens:
        for x, s in zip(table.names, table.symbols):
            ok = in_ideal(table.bracket(g, s), subs)
            report.checks[f"{{{sympy.sstr(g)}, {x}}}"] = ok
            if not ok and report.witness is None:
                report.witness = (sympy.sstr(g), x, sympy.sstr(table.bracket(g, s)))
    logger.info("%s: %s", report.name, "Poisson ideal" if report.ok else "not Poisson")
    return report


def lambda2_generators(table: PoissonTable, n: int) -> List[sympy.Expr]:
    """Λ²V = span{X_ij - X_ji}."""
    return [table.sym(pair_name(n, (i, j))) - table.sym(pair_name(n, (j, i))) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def s2_generators(table: PoissonTable, n: int) -> List[sympy.Expr]:
    """S²V = span{X_ij + X_ji}, i ≤ j."""
    return [table.sym(pair_name(n, (i, j))) + table.sym(pair_name(n, (j, i))) for i in range(1, n + 1) for j in range(i, n + 1)]

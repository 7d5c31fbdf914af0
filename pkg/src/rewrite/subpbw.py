"""
Sub-PBW Analysis Module
-----------------------
Spanning and tameness tests for ordered generating sets inside an algebra
that can express its elements in exact linear coordinates.

The filtration is A_k = span of all products of at most k generators.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Protocol, Sequence, Tuple

from config.settings import settings
from core.errors import InvalidInputError
from core.linalg import EchelonBasis, Vector

logger = logging.getLogger(__name__)


class CoordinateAlgebra(Protocol):
    """Anything whose elements multiply and map injectively to sparse vectors."""

    def coordinates(self, u) -> Vector: ...

    def one(self): ...


@dataclass
class SubPBWReport:
    names: List[str]
    cap: int
    spanning: Dict[int, bool] = field(default_factory=dict)
    filtration_dims: Dict[int, int] = field(default_factory=dict)
    ordered_ranks: Dict[int, int] = field(default_factory=dict)
    pair_degrees: Dict[str, int] = field(default_factory=dict)
    d0: Optional[int] = None
    tame: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    @property
    def spanning_all(self) -> bool:
        return all(self.spanning.values())

    def first_failure(self) -> Optional[int]:
        bad = [k for k, ok in sorted(self.spanning.items()) if not ok]
        return bad[0] if bad else None


def _snapshot(basis: EchelonBasis) -> EchelonBasis:
    copy = EchelonBasis(basis.order)
    copy.rows = dict(basis.rows)
    return copy


def subpbw_analysis(
    ambient: CoordinateAlgebra,
    gens: Sequence,
    degree_cap: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
    stop_at_failure: bool = False,
) -> SubPBWReport:
    """
    Test whether ordered monomials in `gens` span the subalgebra they generate.

    Args:
        ambient: Algebra providing coordinates() and one()
        gens: Generators in their chosen total order
        degree_cap: Largest filtration degree examined (defaults to settings)
        names: Labels used in the report
        stop_at_failure: Return as soon as some degree fails to span

    Returns:
        SubPBWReport with per-degree spanning flags, d(X, X'), d0 and tameness
    """
    cap = settings.DEGREE_CAP if degree_cap is None else degree_cap
    if cap < 2:
        raise InvalidInputError(f"degree cap {cap} is too small to determine d0 (need at least 2)")
    m = len(gens)
    labels = list(names) if names else [f"X{k + 1}" for k in range(m)]
    report = SubPBWReport(labels, cap)

    one = ambient.one()
    products: Dict[Tuple[int, ...], object] = {(): one}

    def value(word: Tuple[int, ...]):
        if word not in products:
            products[word] = value(word[:-1]) * gens[word[-1]]
        return products[word]

    def coords(word: Tuple[int, ...]) -> Vector:
        return ambient.coordinates(value(word))

    full = EchelonBasis()
    ordered = EchelonBasis()
    full.add(coords(()))
    ordered.add(coords(()))
    frontier: List[Tuple[int, ...]] = [()]
    levels: List[EchelonBasis] = [_snapshot(full)]
    ordered_count = 1

    for k in range(1, cap + 1):
        new_frontier = []
        for w in frontier:
            for x in range(m):
                word = w + (x,)
                if full.add(coords(word)):
                    new_frontier.append(word)
        frontier = new_frontier
        for word in combinations_with_replacement(range(m), k):
            ordered.add(coords(word))
            ordered_count += 1
        report.filtration_dims[k] = full.rank
        report.ordered_ranks[k] = ordered.rank
        report.spanning[k] = ordered.rank == full.rank
        if k <= 2:
            levels.append(_snapshot(full))
        logger.debug("degree %d: dim A_k=%d, ordered rank=%d", k, full.rank, ordered.rank)
        if stop_at_failure and not report.spanning[k]:
            report.notes.append(f"stopped at degree {k}")
            break
        if not frontier:
            # A_k = A_{k-1}: the filtration is stable from here on
            for rest in range(k + 1, cap + 1):
                report.filtration_dims[rest] = full.rank
            report.notes.append(f"filtration stabilizes at degree {k}")
            for rest in range(k + 1, cap + 1):
                for word in combinations_with_replacement(range(m), rest):
                    ordered.add(coords(word))
                report.ordered_ranks[rest] = ordered.rank
                report.spanning[rest] = ordered.rank == full.rank
            break

    if m < 2:
        report.notes.append("fewer than two generators: d0 undefined")
        return report

    while len(levels) < 3:
        levels.append(_snapshot(full))
    for x in range(m):
        for y in range(x + 1, m):
            v = coords((y, x))
            d = next(d for d in range(3) if levels[d].contains(v))
            report.pair_degrees[f"{labels[y]}.{labels[x]}"] = d
    report.d0 = max(report.pair_degrees.values())

    # M(X_A) ∩ A_{d0}, scanning ordered monomials up to the cap
    inside = EchelonBasis()
    independent = True
    for length in range(0, cap + 1):
        for word in combinations_with_replacement(range(m), length):
            v = coords(word)
            if levels[report.d0].contains(v) and not inside.add(v):
                independent = False
    report.tame = independent
    return report

"""
Oracle Cross-Check Module
-------------------------
Compare the quasi-derivation zero test with Serre-ideal elimination on seeded
random homogeneous elements of U_q^+.

Half of the samples are built inside the Serre ideal (word · Serre element ·
word), so both outcomes of the zero test are exercised.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from core.freealg import FreeElement, intern_word
from core.qrat import RatQ, qpow
from quantum.uqfull import UqAlgebra, is_zero_plus, oracle_is_zero_plus, words_of_weight

logger = logging.getLogger(__name__)


@dataclass
class OracleReport:
    datum: str
    samples: int = 0
    zeros: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _random_weight(rng: np.random.Generator, rank: int, degree: int) -> List[int]:
    cuts = np.sort(rng.integers(0, degree + 1, size=rank - 1))
    return [int(x) for x in np.diff(np.concatenate(([0], cuts, [degree])))]


def _random_coeff(rng: np.random.Generator) -> RatQ:
    c = 0
    while c == 0:
        c = int(rng.integers(-3, 4))
    return RatQ(c) * qpow(int(rng.integers(-2, 3)))


def random_element(alg: UqAlgebra, rng: np.random.Generator, degree: int, terms: int = 4) -> FreeElement:
    """A few random words of one random weight of the given degree."""
    words = list(words_of_weight(alg.e_gens, _random_weight(rng, alg.rank, degree)))
    picks = rng.choice(len(words), size=min(terms, len(words)), replace=False)
    return FreeElement(alg.e_gens, {words[int(k)]: _random_coeff(rng) for k in picks})


def _random_word(rng: np.random.Generator, rank: int, length: int) -> Tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(0, rank, size=length))


def random_ideal_element(alg: UqAlgebra, rng: np.random.Generator, degree: int) -> Optional[FreeElement]:
    """c · w_1 · S_ij · w_2 for a random Serre element fitting in the degree, else None."""
    pairs = [(i, j) for i in range(alg.rank) for j in range(alg.rank) if i != j and 2 - alg.a[i][j] <= degree]
    if not pairs:
        return None
    i, j = pairs[int(rng.integers(0, len(pairs)))]
    serre = alg.serre_element(i, j)
    rest = degree - serre.degree()
    cut = int(rng.integers(0, rest + 1))
    left = FreeElement(alg.e_gens, {intern_word(_random_word(rng, alg.rank, cut)): _random_coeff(rng)})
    right = FreeElement(alg.e_gens, {intern_word(_random_word(rng, alg.rank, rest - cut)): _random_coeff(rng)})
    return left * serre * right


def oracle_agreement(
    alg: UqAlgebra,
    samples: int = 50,
    max_degree: int = 4,
    seed: int = 0,
    progress: bool = False,
) -> OracleReport:
    """
    Run both zero tests on `samples` seeded elements of degree 2..max_degree.

    Returns:
        OracleReport listing every element on which the tests disagree
    """
    rng = np.random.default_rng(seed)
    report = OracleReport(alg.datum.name)
    for k in tqdm(range(samples), desc=f"oracle {alg.datum.name}", disable=not progress):
        degree = int(rng.integers(2, max_degree + 1))
        u = random_ideal_element(alg, rng, degree) if k % 2 else None
        if u is None:
            u = random_element(alg, rng, degree)
        fast, slow = is_zero_plus(alg, u), oracle_is_zero_plus(alg, u)
        report.samples += 1
        report.zeros += int(slow)
        if fast != slow:
            report.disagreements.append(u.to_text())
            logger.warning("%s: zero tests disagree on %s", alg.datum.name, u.to_text())
    logger.info("oracle %s: %d samples, %d zero, %d disagreements", report.datum, report.samples, report.zeros, len(report.disagreements))
    return report

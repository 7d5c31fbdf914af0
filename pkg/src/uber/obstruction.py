"""
Naive Folding Obstruction Module
--------------------------------
Shows that the additive folding so_5 ⊂ sl_4 has no quantum deformation:
u_1 = E_1 + E_3 and u_2 = E_2 satisfy the q-Serre relation of degree (1, 2)
but no relation Σ_j c_j u_1^j u_2 u_1^{3-j} = 0.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from core.freealg import FreeElement
from core.linalg import Vector, determinant, rank_of
from core.qrat import RatQ, hbar, qpow
from lie.cartan import type_a
from quantum.uqfull import UqAlgebra, is_zero_plus, quasi_r

logger = logging.getLogger(__name__)


def obstruction_matrix() -> List[List[RatQ]]:
    """Coefficient matrix of the r_2, r_2 r_1 system on c_0..c_3."""
    q = qpow
    return [
        [q(0), q(-1), q(-2), q(-3)],
        [q(2) * 3, q(1) * (q(2) + 2), q(2) * 2 + 1, q(1) * 3],
        [q(2) + q(0) + q(-2), q(1) + q(-1) * 2, q(0) * 2 + q(-2), q(1) + q(-1) + q(-3)],
        [(q(2) + 1) * 3, q(1) * 5 + q(-1), q(2) + 5, (q(1) + q(-1)) * 3],
    ]


def cubic_monomials(alg: UqAlgebra) -> List[FreeElement]:
    """u_1^j u_2 u_1^{3-j}, j = 0..3."""
    plus = alg.plus
    u1 = plus.gen("1") + plus.gen("3")
    u2 = plus.gen("2")
    return [u1 ** j * u2 * u1 ** (3 - j) for j in range(4)]


def _system_vector(alg: UqAlgebra, m: FreeElement) -> Vector:
    """Coordinates of r_2(m) and r_2 r_1(m), tagged apart."""
    k1, k2 = alg.datum.index("1"), alg.datum.index("2")
    out: Vector = {}
    for tag, image in (("r2", quasi_r(k2, m)), ("r2r1", quasi_r(k2, quasi_r(k1, m)))):
        for key, c in alg.coordinates(image).items():
            out[(tag, key)] = c
    return out


@dataclass
class ObstructionReport:
    determinant: RatQ
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def naive_obstruction() -> ObstructionReport:
    alg = UqAlgebra(type_a(3))
    plus = alg.plus
    u1 = plus.gen("1") + plus.gen("3")
    u2 = plus.gen("2")
    det = determinant(obstruction_matrix())
    report = ObstructionReport(det)
    report.checks["det = -(q - q^-1)^6"] = det == -(hbar() ** 6)
    serre = u2 * u2 * u1 - u2 * u1 * u2 * (qpow(1) + qpow(-1)) + u1 * u2 * u2
    report.checks["u2^2 u1 - [2] u2 u1 u2 + u1 u2^2 = 0"] = is_zero_plus(alg, serre)
    monomials = cubic_monomials(alg)
    report.checks["u1^j u2 u1^(3-j) independent"] = rank_of(alg.coordinates(m) for m in monomials) == 4
    report.checks["r_2, r_2 r_1 system has full rank"] = rank_of(_system_vector(alg, m) for m in monomials) == 4
    logger.info("naive folding obstruction: det %s, %s", det, "ok" if report.ok else "FAIL")
    return report

"""
Diagonal Folding Module
-----------------------
The diagonal embedding of U_q^+(sl_3) into U_q^+(sl_3^{×n}) and the elements
Z_{k,n} that enhance its image.

E_{21,i} = (E_{1,i}E_{2,i} - q^{-1}E_{2,i}E_{1,i}) / (q - q^{-1}) and
E_{12,i} = (E_{2,i}E_{1,i} - q^{-1}E_{1,i}E_{2,i}) / (q - q^{-1}) live in the
i-th factor. Z_{k,n} is the sum over all ways of taking E_{12} in k factors
and E_{21} in the others, so Z_{0,n} = Y_{21,n} and Z_{n,n} = Y_{12,n}.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List

from core.errors import InvalidInputError
from core.freealg import FreeElement
from core.linalg import determinant
from core.qrat import RatQ, hbar, qint, qpow
from lie.cartan import parse_cartan
from quantum.uqfull import UqAlgebra, is_zero_plus
from rewrite.subpbw import SubPBWReport, subpbw_analysis

logger = logging.getLogger(__name__)


@dataclass
class DiagonalElements:
    """Y_1, Y_2, Y_21, Y_12 and Z_0..Z_n inside U_q^+(sl_3^{×n})."""

    n: int
    alg: UqAlgebra
    e1: List[FreeElement]
    e2: List[FreeElement]
    e21: List[FreeElement]
    e12: List[FreeElement]
    y1: FreeElement
    y2: FreeElement
    z: List[FreeElement]

    @property
    def y21(self) -> FreeElement:
        return self.z[0]

    @property
    def y12(self) -> FreeElement:
        return self.z[self.n]


def diagonal_elements(n: int) -> DiagonalElements:
    if n < 1:
        raise InvalidInputError(f"need at least one factor, got {n}")
    alg = UqAlgebra(parse_cartan("x".join(["A2"] * n)))
    plus = alg.plus
    e1 = [plus.gen(2 * i) for i in range(n)]
    e2 = [plus.gen(2 * i + 1) for i in range(n)]
    h_inv = hbar().inverse()
    q_inv = qpow(-1)
    e21 = [(a * b - b * a * q_inv) * h_inv for a, b in zip(e1, e2)]
    e12 = [(b * a - a * b * q_inv) * h_inv for a, b in zip(e1, e2)]

    y1, y2 = plus.one(), plus.one()
    for a, b in zip(e1, e2):
        y1, y2 = y1 * a, y2 * b

    z = []
    for k in range(n + 1):
        total = plus.zero()
        for chosen in combinations(range(n), k):
            term = plus.one()
            for i in range(n):
                term = term * (e12[i] if i in chosen else e21[i])
            total = total + term
        z.append(total)
    return DiagonalElements(n, alg, e1, e2, e21, e12, y1, y2, z)


def z_recursion(elems: DiagonalElements) -> List[FreeElement]:
    """Z_{k,n} rebuilt through Z_{i,k} = Z_{i,k-1}E_{21,k} + Z_{i-1,k-1}E_{12,k}."""
    plus = elems.alg.plus
    row = [elems.e21[0], elems.e12[0]]
    for k in range(1, elems.n):
        nxt = []
        for i in range(k + 2):
            val = plus.zero()
            if i <= k:
                val = val + row[i] * elems.e21[k]
            if i >= 1:
                val = val + row[i - 1] * elems.e12[k]
            nxt.append(val)
        row = nxt
    return row


@dataclass
class DiagonalReport:
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)
    z0_determinant: RatQ = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and bool(self.z0_determinant)


def z0_matrix(n: int) -> List[List[RatQ]]:
    """Rows s = 1..n+1, columns k = 0..n, entries q^{ns + k(1-2s)}."""
    return [[qpow(n * s + k * (1 - 2 * s)) for k in range(n + 1)] for s in range(1, n + 2)]


def diag_z(n: int, commuting: bool = True) -> DiagonalReport:
    """
    Verify the commutation and expansion identities of the Z-family.

    Args:
        n: Number of sl_3 factors
        commuting: Also check Z_k Z_l = Z_l Z_k (the most expensive part)
    """
    elems = diagonal_elements(n)
    alg = elems.alg
    y1, y2, z = elems.y1, elems.y2, elems.z
    report = DiagonalReport(n)

    def zero(name: str, u: FreeElement):
        report.checks[name] = is_zero_plus(alg, u)

    for k in range(n + 1):
        zero(f"Y1 Z{k} = q^{n - 2 * k} Z{k} Y1", y1 * z[k] - z[k] * y1 * qpow(n - 2 * k))
        zero(f"Y2 Z{k} = q^{2 * k - n} Z{k} Y2", y2 * z[k] - z[k] * y2 * qpow(2 * k - n))
    if commuting:
        for k in range(n + 1):
            for l in range(k + 1, n + 1):
                zero(f"Z{k} Z{l} = Z{l} Z{k}", z[k] * z[l] - z[l] * z[k])

    y1y2 = sum((z[k] * qpow(n - k) for k in range(n + 1)), alg.plus.zero())
    y2y1 = sum((z[k] * qpow(k) for k in range(n + 1)), alg.plus.zero())
    zero("Y1 Y2 = Σ q^{n-k} Z_k", y1 * y2 - y1y2)
    zero("Y2 Y1 = Σ q^k Z_k", y2 * y1 - y2y1)
    rhs = y2 * y1 * qpow(-n) + z[0] * (qpow(n) - qpow(-n))
    for k in range(1, n):
        rhs = rhs + z[k] * (qpow(n - k) - qpow(k - n))
    zero("Y1 Y2 = q^-n Y2 Y1 + (q^n - q^-n) Y21 + Σ (q^{n-k} - q^{k-n}) Z_k", y1 * y2 - rhs)
    rec = z_recursion(elems)
    report.checks["Z recursion"] = all(is_zero_plus(alg, a - b) for a, b in zip(rec, z))

    report.z0_determinant = determinant(z0_matrix(n))
    logger.info("diagonal n=%d: %d checks, det Z0 = %s", n, len(report.checks), report.z0_determinant)
    return report


def a_of_z(elems: DiagonalElements) -> List[FreeElement]:
    """Images of u_1, u_2, z_1..z_{n-1} under u_i -> Y_i, z_k -> [k]_q (q^{n-k} - q^{k-n}) Z_k."""
    n = elems.n
    images = [elems.y1, elems.y2]
    for k in range(1, n):
        images.append(elems.z[k] * (qint(k) * (qpow(n - k) - qpow(k - n))))
    return images


def unenhanced_spanning(n: int, degree_cap: int = 4) -> SubPBWReport:
    """Sub-PBW analysis of {Y_1, Y_12, Y_2} alone; spanning fails once n >= 2."""
    elems = diagonal_elements(n)
    gens = [elems.y1, elems.y12, elems.y2]
    return subpbw_analysis(elems.alg.plus, gens, degree_cap=degree_cap, names=["Y1", "Y12", "Y2"], stop_at_failure=True)

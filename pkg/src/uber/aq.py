"""
Diagonal Uberalgebras Module
----------------------------
The enhanced uberalgebra 𝒜_{q,3}^{(n)} of the cyclic folding of sl_3^{×n}
and the algebra 𝒜_{q,4} of the folding of sl_4 × sl_4.

Features:
- Chevalley-like generators u_1, u_2, z_1..z_{n-1} with their Serre-like relations
- PBW presentation on u_2 < u_21 < u_1 < z_1 < ... < z_{n-1}
- A(z): u_i -> Y_i, z_k -> [k]_q (q^{n-k} - q^{k-n}) Z_k into U_q^+(sl_3^{×n})
- μ: u_i -> E_i, z_k -> 0 into U_q^+(sl_3) with q replaced by q^n
- The splitting ĩ with Â∘ĩ = ι on the modified PBW monomials
- 𝒜_{q,4} on twelve ordered generators (a partial rule list: Z_{123}Y_2 and
  Z_{321}Y_2 have no printed rule) with its Chevalley-like relations
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, List, Tuple

from core.errors import InvalidInputError
from core.freealg import FreeElement, GeneratorSet, qcommutator
from core.qrat import ONE, RatQ, hbar, qint, qpow
from folding.diagonal import a_of_z, diagonal_elements
from lie.cartan import datum_from_entries
from quantum.uqfull import UqAlgebra, is_zero_plus
from rewrite.presentation import Presentation, lie_enveloping_counts
from uber.homs import HomReport, plus_target, verify_hom
from uber.named import NamedPresentation

logger = logging.getLogger(__name__)


def _check_n(n: int):
    if n < 2:
        raise InvalidInputError(f"𝒜_q,3 needs n >= 2, got {n}")


def h_n(n: int) -> RatQ:
    return qpow(n) - qpow(-n)


def _a2_pairing(n: int) -> List[List[int]]:
    return [[2 * n, -n], [-n, 2 * n]]


# ==================== 𝒜_{q,3}^{(n)} ====================
def aq3_generators(n: int) -> GeneratorSet:
    """u_1, u_2, z_1..z_{n-1}; wt z_k = α_1 + α_2."""
    _check_n(n)
    names = ["u1", "u2"] + [f"z{k}" for k in range(1, n)]
    weights = [[1, 0], [0, 1]] + [[1, 1]] * (n - 1)
    return GeneratorSet(names, weights, _a2_pairing(n))


def aq3_relations(n: int) -> Tuple[GeneratorSet, Dict[str, FreeElement]]:
    """
    Serre-like relations of 𝒜_{q,3}^{(n)}.

    With z_{k,1} = z_{n-k,2} = z_k:
        z_k z_l = z_l z_k
        u_i z_{k,i} = q^{n-2k} z_{k,i} u_i
        u_i²u_j - (q^n + q^{-n}) u_i u_j u_i + u_j u_i² = (q^{-1} - q) u_i Σ_k q^k z_{k,i}
    """
    gens = aq3_generators(n)
    u = {1: gens.gen("u1"), 2: gens.gen("u2")}
    z = {k: gens.gen(f"z{k}") for k in range(1, n)}
    rels: Dict[str, FreeElement] = {}
    for k in range(1, n):
        for l in range(k + 1, n):
            rels[f"[z{k},z{l}]"] = qcommutator(z[k], z[l])
    for k in range(1, n):
        rels[f"u1 z{k} - q^{n - 2 * k} z{k} u1"] = qcommutator(u[1], z[k], qpow(n - 2 * k))
        rels[f"u2 z{n - k} - q^{n - 2 * k} z{n - k} u2"] = qcommutator(u[2], z[n - k], qpow(n - 2 * k))
    h = hbar()
    for i, j in ((1, 2), (2, 1)):
        lhs = u[i] * u[i] * u[j] - u[i] * u[j] * u[i] * (qpow(n) + qpow(-n)) + u[j] * u[i] * u[i]
        tail = gens.zero()
        for k in range(1, n):
            tail = tail + z[k if i == 1 else n - k] * qpow(k)
        rels[f"u{i}^2 u{j} - [2]_q^{n} u{i} u{j} u{i} + u{j} u{i}^2"] = lhs + u[i] * tail * h
    return gens, rels


def aq3_pbw(n: int) -> Presentation:
    """
    PBW presentation on u_2 < u_21 < u_1 < z_1 < ... < z_{n-1}, where
    u_21 = u_1u_2 - q^{-n}u_2u_1 - Σ_k [k]_q^{-1} z_k.
    """
    _check_n(n)
    names = ["u2", "u21", "u1"] + [f"z{k}" for k in range(1, n)]
    weights = [[0, 1], [1, 1], [1, 0]] + [[1, 1]] * (n - 1)
    gens = GeneratorSet(names, weights, _a2_pairing(n))
    u2, u21, u1 = gens.gen("u2"), gens.gen("u21"), gens.gen("u1")
    z = {k: gens.gen(f"z{k}") for k in range(1, n)}
    rules: Dict[Tuple[int, int], FreeElement] = {
        (1, 2): u21 * u1 * qpow(n),
        (0, 1): u2 * u21 * qpow(n),
    }
    tail = gens.zero()
    for k in range(1, n):
        zk = 2 + k
        rules[(2, zk)] = u1 * z[k] * qpow(2 * k - n)
        rules[(0, zk)] = u2 * z[k] * qpow(n - 2 * k)
        rules[(1, zk)] = u21 * z[k]
        for l in range(k + 1, n):
            rules[(zk, 2 + l)] = z[k] * z[l]
        tail = tail + z[k] / qint(k)
    rules[(0, 2)] = u2 * u1 * qpow(-n) + u21 + tail
    return Presentation(gens, rules, [2, 3, 2] + [3] * (n - 1), name=f"Aq3({n})")


@lru_cache(maxsize=None)
def aq3_presentation(n: int) -> NamedPresentation:
    gens, rels = aq3_relations(n)
    p = aq3_pbw(n)
    images = [p.gen("u1"), p.gen("u2")] + [p.gen(f"z{k}") for k in range(1, n)]
    return NamedPresentation(f"Aq3:{n}", p, gens, rels, images)


def u21_expression(n: int) -> FreeElement:
    """u_21 written in the Chevalley-like generators."""
    gens = aq3_generators(n)
    u1, u2 = gens.gen("u1"), gens.gen("u2")
    out = u1 * u2 - u2 * u1 * qpow(-n)
    for k in range(1, n):
        out = out - gens.gen(f"z{k}") / qint(k)
    return out


# ==================== MAPS ====================
def folded_sl3(n: int) -> UqAlgebra:
    """U_q(sl_3) with q_i = q^n, the target of μ."""
    return UqAlgebra(datum_from_entries(["1", "2"], [[2, -1], [-1, 2]], [n, n]))


def a_of_z_report(n: int) -> HomReport:
    """Serre-like relations vanish under A(z) inside U_q^+(sl_3^{×n})."""
    _, rels = aq3_relations(n)
    elems = diagonal_elements(n)
    return verify_hom(rels, a_of_z(elems), plus_target(elems.alg), name=f"A(z): Aq3({n}) -> U_q^+(A2^{n})")


def mu_report(n: int) -> HomReport:
    _, rels = aq3_relations(n)
    alg = folded_sl3(n)
    plus = alg.plus
    images = [plus.gen("1"), plus.gen("2")] + [plus.zero()] * (n - 1)
    return verify_hom(rels, images, plus_target(alg), name=f"mu: Aq3({n}) -> U_q^+(A2, q^{n})")


@dataclass
class SplittingReport:
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def iota_tilde(n: int, exponents: Tuple[int, int, int]) -> FreeElement:
    """ĩ(y_1^a y_21^b y_2^c) = u_1^a (u_21 / h_n)^b u_2^c over the Chevalley-like generators."""
    gens = aq3_generators(n)
    a, b, c = exponents
    root = u21_expression(n) / h_n(n)
    return gens.gen("u1") ** a * root ** b * gens.gen("u2") ** c


def splitting_report(n: int, max_degree: int = 2) -> SplittingReport:
    """
    Check Â∘ĩ = ι on every modified PBW monomial y_1^a y_21^b y_2^c with
    a + b + c <= max_degree, where ι(y_21) = Y_21 = Z_0.
    """
    elems = diagonal_elements(n)
    alg, plus = elems.alg, elems.alg.plus
    images = a_of_z(elems)
    report = SplittingReport(n)
    for a, b, c in cartesian(range(max_degree + 1), repeat=3):
        if not 0 < a + b + c <= max_degree:
            continue
        lifted = iota_tilde(n, (a, b, c)).substitute(images, plus.one())
        target = elems.y1 ** a * elems.y21 ** b * elems.y2 ** c
        report.checks[f"y1^{a} y21^{b} y2^{c}"] = is_zero_plus(alg, lifted - target)
    logger.info("splitting n=%d: %d monomials, %s", n, len(report.checks), "ok" if report.ok else "FAIL")
    return report


# ==================== 𝒜_{q,4} ====================
AQ4_ORDER = ("Y2", "Y21", "Y23", "Z21", "Z23", "Y13", "Z123", "Z321", "Z1232", "Z13", "Y3", "Y1")

# every rule lowers in this degree; Z_{1232} must stay below Y_{13}Y_2
AQ4_DEGREES = (13, 20, 20, 22, 22, 29, 30, 30, 41, 32, 10, 10)

# height in the 12-dimensional nilpotent Lie algebra n (deg u_i = 1, deg z_12 = deg z_23 = 2, deg z_13 = 3)
AQ4_HEIGHTS = (1, 2, 2, 2, 2, 3, 3, 3, 4, 3, 1, 1)
N4_DIMS = {1: 3, 2: 4, 3: 4, 4: 1}

_AQ4_WEIGHTS = {
    "Y1": [1, 0, 0], "Y2": [0, 1, 0], "Y3": [0, 0, 1],
    "Y21": [1, 1, 0], "Z21": [1, 1, 0], "Y23": [0, 1, 1], "Z23": [0, 1, 1],
    "Y13": [1, 1, 1], "Z123": [1, 1, 1], "Z321": [1, 1, 1], "Z13": [1, 1, 1],
    "Z1232": [1, 2, 1],
}


def _a3_pairing() -> List[List[int]]:
    return [[4, -2, 0], [-2, 4, -2], [0, -2, 4]]


def aq4_generators() -> GeneratorSet:
    return GeneratorSet(AQ4_ORDER, [_AQ4_WEIGHTS[x] for x in AQ4_ORDER], _a3_pairing())


def aq4_relations() -> List[FreeElement]:
    """PBW-type relations of 𝒜_{q,4}, each written as lhs - rhs."""
    g = aq4_generators()
    G = {x: g.gen(x) for x in AQ4_ORDER}
    Y2, Y13, Z13, Z1232 = G["Y2"], G["Y13"], G["Z13"], G["Z1232"]
    Z123, Z321 = G["Z123"], G["Z321"]
    Y21, Y23, Z21, Z23 = G["Y21"], G["Y23"], G["Z21"], G["Z23"]
    q, qi, q2, q2i = qpow(1), qpow(-1), qpow(2), qpow(-2)
    h1, h2 = hbar(), hbar(2)

    rels = [
        Z1232 * Y2 - Y2 * Z1232 * q2,
        Y13 * Y2 - Y2 * Y13 - Y21 * Y23 * h2 - Z1232 * h1,
        Y2 * Z13 - Z13 * Y2 * q2
        - (Y2 * Z123 + Y2 * Z321 * q2 - Y23 * Z21 * q2i - Z21 * Z23 * q - Y21 * Z23) * h1
        + Z1232 * (h1 * h2),
        Y23 * Y21 - Y21 * Y23,
        Z23 * Z21 - Z21 * Z23 - (Y2 * Z123 - Y2 * Z321 + Y21 * Z23 * q2i - Y23 * Z21 * q2i) * h1,
        Z13 * Y13 - Y13 * Z13 * q2 + Z123 * Z321 * (q * h1),
        Z1232 * Y13 - Y13 * Z1232 * q2i,
        Z321 * Z123 - Z123 * Z321,
        Z1232 * Z13 - Z13 * Z1232
        - (Y2 * Y13 * Z123 * qi + Y2 * Y13 * Z321 * q + Y2 * Z123 * Z321
           - Y21 * Y23 * Z123 - Y21 * Y23 * Z321 * qi - Z21 * Z23 * Y13) * h1
        - (Y23 * Z21 * Y13 * q2i - Y13 * Z1232 * qpow(-4)) * (h1 * h1),
        G["Y3"] * G["Y1"] - G["Y1"] * G["Y3"],
    ]
    for i in (1, 3):
        j = 4 - i
        Yi, Yj = G[f"Y{i}"], G[f"Y{j}"]
        Y2i, Y2j, Z2i, Z2j = G[f"Y2{i}"], G[f"Y2{j}"], G[f"Z2{i}"], G[f"Z2{j}"]
        Zi2j, Zj2i = G[f"Z{i}2{j}"], G[f"Z{j}2{i}"]
        rels += [
            Y2i * Y2 - Y2 * Y2i * q2,
            Z2i * Y2 - Y2 * Z2i,
            Yi * Y2 - Y2 * Yi * q2i - Y2i * h2 - Z2i * h1,
            Y2i * Z13 - Z13 * Y2i - (Y2i * Zi2j - Z2i * Y13) * h1,
            Z2i * Y2i - Y2i * Z2i,
            Y13 * Y2i - Y2i * Y13 * q2,
            Zj2i * Y2i - Y2i * Zj2i,
            Zi2j * Y2i - Y2i * Zi2j * q2,
            Z1232 * Y2i - Y2i * Z1232,
            Yi * Y2i - Y2i * Yi * q2,
            # the Z-term follows from the definition of Y_13
            Yi * Y2j - Y2j * Yi * q2i - Y13 * h2 - Zi2j * h1,
            Z2j * Y2i - Y2i * Z2j * q2i - Z1232 * (qi * h1),
            Y13 * Z2i - Z2i * Y13 - Y2i * Zi2j * (q * h1),
            Z2i * Zj2i - Zj2i * Z2i * q2 - (Z2i * Y13 - Y2i * Zi2j - Y2i * Z13 * q) * h1,
            Zi2j * Z2i - Z2i * Zi2j * q2 - (Z2i * Y13 - Y2i * Zi2j - Z1232 * Yi) * h1,
            Z1232 * Z2i - Z2i * Z1232
            - (Y2 * Y2i * Zi2j * q2 + Y2i * Z1232 * q2i - Y21 * Y23 * Z2i * q2i) * h1,
            # Y_2 Z_{j2i} Y_i enters with a minus sign; the other sign breaks Jacobi at q = 1
            Z13 * Z2i - Z2i * Z13
            - (-Y2 * Zj2i * Yi * q + Y2i * Z2j * Yi * qi - Y2i * Z13 + Z2i * Zj2i) * (h1 * q2i)
            - (Z1232 * Yi + Y2i * Zi2j - Z2i * Y13) * (h1 * h1 * q2i),
            Yi * Z2j - Z2j * Yi * q2i - Z13 * h1 - Zj2i * h2,
            Yi * Z2i - Z2i * Yi,
            Zi2j * Y13 - Y13 * Zi2j,
            Yi * Y13 - Y13 * Yi * q2,
            Z1232 * Zi2j - Zi2j * Z1232 - (Y21 * Y23 * Zi2j - Y2j * Z2i * Y13 + Y13 * Z1232 * q2i) * h1,
            Zi2j * Z13 - Z13 * Zi2j
            - (Y13 * Z13 - Z123 * Z321 + Y2j * Zj2i * Yi * qi - Z2j * Y13 * Yi * qi) * h1,
            Yi * Z1232 - Z1232 * Yi + (Y2i * Zi2j - Z2i * Y13) * (h1 * q),
            Yi * Zi2j - Zi2j * Yi,
            Yi * Zj2i - Zj2i * Yi * q2,
            Z13 * Yi - Yi * Z13,
        ]
    return rels


def aq4_pbw() -> Presentation:
    return Presentation.from_relations(aq4_generators(), aq4_relations(), AQ4_DEGREES, name="Aq4", partial=True)


def aq4_chevalley_generators() -> GeneratorSet:
    names = ["u1", "u2", "u3", "z12", "z23", "z13"]
    weights = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]]
    return GeneratorSet(names, weights, _a3_pairing())


def aq4_chevalley_relations() -> Dict[str, FreeElement]:
    """Serre-like relations of 𝒜_{q,4} in u_1, u_2, u_3 and z_12 = z_21, z_23 = z_32, z_13."""
    g = aq4_chevalley_generators()
    u = {i: g.gen(f"u{i}") for i in (1, 2, 3)}
    z12, z23, z13 = g.gen("z12"), g.gen("z23"), g.gen("z13")
    z2 = {1: z12, 3: z23}
    zpair = {(1, 2): z12, (2, 1): z12, (2, 3): z23, (3, 2): z23, (1, 3): z13, (3, 1): z13}
    q2, q2i = qpow(2), qpow(-2)
    h = hbar()
    qc = qcommutator
    rels: Dict[str, FreeElement] = {}

    # u_i commutes with z_ij for every i != j
    for (i, j), zij in zpair.items():
        rels[f"[u{i},z{min(i, j)}{max(i, j)}]"] = qc(u[i], zij)
    rels["[u1,u3]"] = qc(u[1], u[3])
    for i, j in ((1, 2), (2, 1), (2, 3), (3, 2)):
        rels[f"[u{i},[u{i},u{j}]_q^2]_q^-2 - h u{i} z{min(i, j)}{max(i, j)}"] = (
            qc(u[i], qc(u[i], u[j], q2), q2i) - u[i] * zpair[(i, j)] * h
        )
    for i in (1, 3):
        j = 4 - i
        rels[f"[u{i},[u{i},z{j}2]_q^2]_q^-2 - h u{i} z13"] = qc(u[i], qc(u[i], z2[j], q2), q2i) - u[i] * z13 * h
    rels["[2][z12,z23] - [u2,[z12,u3]_q^-2]_q^2 + [u2,[z23,u1]_q^-2]_q^2"] = (
        qc(z12, z23) * qint(2) - qc(u[2], qc(z12, u[3], q2i), q2) + qc(u[2], qc(z23, u[1], q2i), q2)
    )
    for i in (1, 3):
        j = 4 - i
        zi, zj = z2[i], z2[j]
        rels[f"[u2,z13] + [z{i}2,z{j}2] - h(...)"] = (
            qc(u[2], z13) + qc(zi, zj) - (zj * u[i] * u[2] - u[2] * u[i] * zj) * h
        )
        cubic = (
            u[i] * u[2] * u[j] * (qpow(2) + ONE + qpow(-2))
            - u[j] * u[2] * u[i] - u[i] * u[j] * u[2] - u[2] * u[i] * u[j]
        )
        rels[f"2[z{i}2,[z{i}2,u{j}]_q^-2]_q^2 + ... - h{{z{i}2, ...}}"] = (
            qc(zi, qc(zi, u[j], q2i), q2) * 2
            + qc(zi, qc(u[i], zj, q2i), q2)
            + qc(u[i], qc(zi, zj, q2i), q2)
            - (zi * (z13 + cubic) + (z13 + cubic) * zi) * h
        )
        rels[f"[z{i}2,z13] - [u{i},[u2,[u{j},z{i}2]]] - h(...) - h^2(...)"] = (
            qc(zi, z13)
            - qc(u[i], qc(u[2], qc(u[j], zi)))
            - (u[i] * zj * zi - zi * zj * u[i]) * h
            - (u[i] * u[2] * u[j] * zi - zi * u[j] * u[2] * u[i]) * (h * h)
        )
    return rels


def aq4_chevalley_images(p: Presentation) -> List[FreeElement]:
    """u_i -> Y_i, z_{i2} -> (1 - q²) Z_{2i}, z_13 -> (1 - q²)² Z_13."""
    s = ONE - qpow(2)
    return [p.gen("Y1"), p.gen("Y2"), p.gen("Y3"), p.gen("Z21") * s, p.gen("Z23") * s, p.gen("Z13") * (s * s)]


@lru_cache(maxsize=None)
def aq4_presentation() -> NamedPresentation:
    p = aq4_pbw()
    notes = [
        "partial: no printed rule for Z123.Y2 or Z321.Y2",
        "Serre-like relations that pass through those words stay unreduced",
    ]
    return NamedPresentation("Aq4", p, aq4_chevalley_generators(), aq4_chevalley_relations(), aq4_chevalley_images(p), notes)


def y2i_from_chevalley(p: Presentation, i: int) -> FreeElement:
    """(u_i u_2 - q^{-2} u_2 u_i + q^{-1} z_{i2}) / (q² - q^{-2}), reduced to normal form."""
    if i not in (1, 3):
        raise InvalidInputError(f"Y_2i needs i in (1, 3), got {i}")
    ui, u2 = p.gen(f"Y{i}"), p.gen("Y2")
    zi2 = p.gen(f"Z2{i}") * (ONE - qpow(2))
    return p.normal_form((ui * u2 - u2 * ui * qpow(-2) + zi2 * qpow(-1)) / hbar(2))


def aq4_dimension_report(max_degree: int = 4) -> Dict[int, Tuple[int, int]]:
    """
    Ordered monomials of 𝒜_{q,4} graded by height against dim U(n)_d.

    Returns:
        {d: (monomial count, enveloping-algebra dimension)}
    """
    graded = Presentation(aq4_generators(), {}, AQ4_HEIGHTS, name="Aq4 by height", partial=True)
    return {d: (graded.graded_dimension(d), lie_enveloping_counts(N4_DIMS, d)) for d in range(max_degree + 1)}

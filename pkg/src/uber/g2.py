"""
G2 Uberalgebra Module
---------------------
The uberalgebra of the triality folding so_8 -> G_2 on the Chevalley-like
generators u, w, z_1, z_2, its known (incomplete) Serre-like relations and
the maps out of it, plus the 13-dimensional nilpotent Lie algebra n_G2.

Features:
- Partial relation list; no PBW rules are known, so the presentation is a
  bare ordered generator set flagged partial
- ι̂: w -> E_1, z_j -> 0 into U_q^+(G_2), u -> E_0
- μ: w -> E_1E_2E_3 and the printed z_j images into U_q^+(so_8)
- T_0 on words in w, z_1, z_2 and its comparison with Lusztig's T_0
  through ι̂ and μ
- n_G2 as numpy structure constants with antisymmetry, Jacobi and
  lower-central-series checks
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from core.errors import InvalidInputError, VerificationError
from core.freealg import FreeElement, GeneratorSet, qcommutator
from core.qrat import RatQ, hbar, qpow
from lie.cartan import datum_from_entries, type_d4_centered
from quantum.uqfull import UqAlgebra
from rewrite.presentation import Presentation
from uber.homs import HomReport, plus_target, verify_hom
from uber.named import NamedPresentation

logger = logging.getLogger(__name__)

# (α_0, α_0) = 2, (α_1, α_1) = 6 on the folded lattice
G2_PAIRING = [[2, -3], [-3, 6]]

# the one relation μ is known to respect
QUARTIC = "[u,[u,[u,[u,w]_q^-3]_q^-1]_q]_q^3"


def g2_generators() -> GeneratorSet:
    """u, w, z_1, z_2 of weights α_0, α_1, α_0 + α_1, α_0 + α_1."""
    return GeneratorSet(["u", "w", "z1", "z2"], [[1, 0], [0, 1], [1, 1], [1, 1]], G2_PAIRING)


def _chain(pieces: List[Tuple[str, FreeElement]]) -> Dict[str, FreeElement]:
    """a = b = c = ... as the differences against the last member."""
    last_label, last = pieces[-1]
    return {f"{label} = {last_label}": piece - last for label, piece in pieces[:-1]}


def g2_relations(gens: GeneratorSet = None) -> Dict[str, FreeElement]:
    """The known Serre-like relations; the longest ones are not part of the list."""
    gens = gens or g2_generators()
    u, w, z1, z2 = (gens.gen(x) for x in ("u", "w", "z1", "z2"))
    q = qpow(1)
    qi = qpow(-1)
    rels: Dict[str, FreeElement] = {}

    inner = qcommutator(u, w, qpow(-3))
    inner = qcommutator(u, inner, qi)
    inner = qcommutator(u, inner, q)
    rels[QUARTIC] = qcommutator(u, inner, qpow(3))

    rels.update(
        _chain(
            [
                ("[w,[w,u]_q^-3]_q^3", qcommutator(w, qcommutator(w, u, qpow(-3)), qpow(3))),
                ("[w,z1]_q^3", qcommutator(w, z1, qpow(3))),
                ("[z2,w]_q^3", qcommutator(z2, w, qpow(3))),
                ("q([z1,w]_q + [w,z2]_q)", (qcommutator(z1, w, q) + qcommutator(w, z2, q)) * q),
            ]
        )
    )

    wu = qcommutator(w, u, qpow(-3))
    rels["[z1,z2] - [2]_q [z1,[w,u]_q^-3] + [z2,[w,u]_q^-3]"] = (
        qcommutator(z1, z2) - qcommutator(z1, wu) * (q + qi) + qcommutator(z2, wu)
    )
    rels["[z1,[u,w]_q] - [[w,u]_q,z2]"] = qcommutator(z1, qcommutator(u, w, q)) - qcommutator(qcommutator(w, u, q), z2)

    z1u = qcommutator(z1, u, qi)
    z2u = qcommutator(z2, u, qi)
    lhs = qcommutator(z1, z1u, q)
    rels["[z1,[z1,u]_q^-1]_q - [z2,[z2,u]_q^-1]_q"] = lhs - qcommutator(z2, z2u, q)
    rhs = (qcommutator(z1, z2u, q) + qcommutator(z2, z1u, q)) * q + (z1u * z2 * q - z1 * z2u) * hbar()
    rels["[z1,[z1,u]_q^-1]_q - q(...) - (q - q^-1)(...)"] = lhs - rhs
    return rels


@lru_cache(maxsize=None)
def g2_presentation() -> NamedPresentation:
    gens = g2_generators()
    p = Presentation(gens, {}, name="G2partial", partial=True)
    return NamedPresentation(
        "G2partial",
        p,
        gens,
        g2_relations(gens),
        gens.gens(),
        notes=[
            "non-confluent by construction: no PBW rules are known",
            "the relation list is incomplete; relations of more than thirty terms are left out",
        ],
    )


# ==================== MAPS ====================
def folded_g2() -> UqAlgebra:
    """U_q(G_2) with node 0 short and node 1 long."""
    return UqAlgebra(datum_from_entries(["0", "1"], [[2, -3], [-1, 2]], [1, 3]))


def so8() -> UqAlgebra:
    return UqAlgebra(type_d4_centered())


def iota_hat_images(alg: UqAlgebra) -> List[FreeElement]:
    plus = alg.plus
    return [plus.gen("0"), plus.gen("1"), plus.zero(), plus.zero()]


def mu_constant() -> RatQ:
    """(q² + 1 + q^{-2}) / (q - q^{-1})²."""
    return (qpow(2) + qpow(0) + qpow(-2)) / hbar() ** 2


def mu_images(alg: UqAlgebra) -> List[FreeElement]:
    plus = alg.plus
    e0, e1, e2, e3 = (plus.gen(x) for x in ("0", "1", "2", "3"))
    qi = qpow(-1)
    w = e1 * e2 * e3
    nested1 = qcommutator(e1, qcommutator(e2, qcommutator(e3, e0, qi), qi), qi)
    nested2 = qcommutator(qcommutator(qcommutator(e0, e1, qi), e2, qi), e3, qi)
    z1 = qcommutator(w, e0, qpow(-3)) - nested1 * mu_constant()
    z2 = qcommutator(e0, w, qpow(-3)) - nested2 * mu_constant()
    return [e0, w, z1, z2]


def iota_hat_report() -> HomReport:
    alg = folded_g2()
    return verify_hom(g2_relations(), iota_hat_images(alg), plus_target(alg), name="G2 ι̂")


def mu_report(labels: List[str] = None) -> HomReport:
    """
    μ on the listed relations (all when labels is None).

    Only the quartic u-w relation is known to vanish; the rest is diagnostic.
    """
    alg = so8()
    rels = g2_relations()
    if labels is not None:
        rels = {k: v for k, v in rels.items() if k in labels}
    return verify_hom(rels, mu_images(alg), plus_target(alg), name="G2 μ")


# ==================== BRAID ====================
def t0_images(gens: GeneratorSet = None) -> List[FreeElement]:
    """
    Images of u, w, z_1, z_2 under T_0 restricted to the w, z part; u has no
    image inside the positive part and is left as u.
    """
    gens = gens or g2_generators()
    u, w, z1, z2 = (gens.gen(x) for x in ("u", "w", "z1", "z2"))
    tw = qcommutator(qcommutator(qcommutator(w, u, qpow(-3)), u, qpow(-1)), u, qpow(1))
    tw = tw / ((qpow(2) + qpow(0) + qpow(-2)) * (qpow(1) + qpow(-1)))
    return [u, tw, qcommutator(z1, u, qpow(-1)), qcommutator(z2, u, qpow(-1))]


def t0(x: FreeElement) -> FreeElement:
    """T_0 on an element written in w, z_1, z_2 only."""
    u_index = x.gens.lookup("u")
    if any(u_index in word for word in x.terms):
        raise InvalidInputError("T_0 is only defined here on words in w, z1, z2")
    return x.substitute(t0_images(x.gens), x.gens.one())


@dataclass
class BraidReport:
    checks: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v != "none" for v in self.checks.values())


def _compare(alg: UqAlgebra, image: FreeElement, braided) -> str:
    lifted = alg.from_plus(image)
    if alg.is_zero(lifted - braided):
        return "T"
    return "none"


def braid_report() -> BraidReport:
    """
    Compare φ(T_0(x)) with T_0(φ(x)) for x in w, z_1, z_2 and φ in ι̂, μ;
    "T" when they agree, "T^-1" against the inverse operator, else "none".
    """
    report = BraidReport()
    gens = g2_generators()
    images = t0_images(gens)
    for tag, alg, phi in (("ι̂", folded_g2(), iota_hat_images), ("μ", so8(), mu_images)):
        targets = phi(alg)
        one = alg.plus.one()
        for name in ("w", "z1", "z2"):
            k = gens.lookup(name)
            lhs = images[k].substitute(targets, one)
            key = f"{tag}: {name}"
            verdict = _compare(alg, lhs, alg.braid("0", targets[k]))
            if verdict == "none" and alg.is_zero(alg.from_plus(lhs) - alg.braid("0", targets[k], inverse=True)):
                verdict = "T^-1"
            report.checks[key] = verdict
            logger.info("G2 braid %s -> %s", key, verdict)
    return report


# ==================== n_G2 ====================
G2_LIE_BASIS = [f"w{i}" for i in range(1, 6)] + [f"z{i}" for i in range(1, 9)]

# [a, b] = Σ c * basis; only the printed nonzero brackets
_G2_BRACKETS: List[Tuple[str, str, Dict[str, int]]] = [
    ("w1", "w4", {"w5": -3}),
    ("w2", "w3", {"w5": 1}),
    ("w1", "z3", {"z5": 3}),
    ("w1", "z4", {"z5": 3}),
    ("w2", "z1", {"z5": -1}),
    ("w2", "z2", {"z5": -1}),
    ("z2", "z1", {"z5": -1}),
    ("w2", "z3", {"z6": 2}),
    ("w2", "z4", {"z6": 2}),
    ("z1", "w3", {"z6": 2}),
    ("z2", "w3", {"z6": 2}),
    ("w3", "z3", {"z7": 1}),
    ("w3", "z4", {"z7": 1}),
    ("z3", "z4", {"z7": 1}),
    ("w4", "z1", {"z7": -3}),
    ("w4", "z2", {"z7": -3}),
    ("z1", "z3", {"z8": 2}),
    ("z2", "z4", {"z8": 2}),
    ("z1", "z4", {"z6": 1, "z8": 1}),
    ("z2", "z3", {"z6": -1, "z8": 1}),
]


@dataclass
class LieTable:
    """Structure constants c[i, j, k] with [e_i, e_j] = Σ_k c[i, j, k] e_k."""

    basis: List[str]
    constants: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self.constants)

    def vector(self, name: str) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.basis.index(name)] = 1
        return v

    def bracket_of(self, a: str, b: str) -> Dict[str, int]:
        v = self.bracket(self.vector(a), self.vector(b))
        return {self.basis[k]: int(c) for k, c in enumerate(v) if c}

    def jacobiator(self) -> np.ndarray:
        """J[a,b,c,m] = cyclic sum of [[e_a, e_b], e_c] coordinates."""
        c = self.constants
        first = np.einsum("abk,kcm->abcm", c, c)
        return first + first.transpose(1, 2, 0, 3) + first.transpose(2, 0, 1, 3)

    def lower_central_dims(self) -> List[int]:
        """dim g, dim [g,g], dim [g,[g,g]], ... down to zero."""
        dims = [self.dim]
        span = np.eye(self.dim, dtype=np.int64)
        while span.shape[0]:
            images = np.einsum("ri,ijk->rjk", span, self.constants).reshape(-1, self.dim)
            rank = int(np.linalg.matrix_rank(images.astype(float))) if images.size else 0
            if rank == 0:
                dims.append(0)
                break
            dims.append(rank)
            span = _row_basis(images)
        return dims

    def centre_dim(self) -> int:
        ad = self.constants.reshape(self.dim, -1)
        return self.dim - int(np.linalg.matrix_rank(ad.astype(float)))


def _row_basis(rows: np.ndarray) -> np.ndarray:
    """Independent rows, kept greedily in order."""
    kept: List[np.ndarray] = []
    for row in rows:
        trial = np.array(kept + [row], dtype=float)
        if np.linalg.matrix_rank(trial) > len(kept):
            kept.append(row)
    return np.array(kept, dtype=np.int64).reshape(len(kept), rows.shape[1])


def g2_lie_table() -> LieTable:
    """
    n_G2 from its printed brackets.

    Raises:
        VerificationError: if the table is not antisymmetric or violates Jacobi
    """
    basis = G2_LIE_BASIS
    index = {b: k for k, b in enumerate(basis)}
    c = np.zeros((len(basis),) * 3, dtype=np.int64)
    for a, b, out in _G2_BRACKETS:
        for name, coeff in out.items():
            c[index[a], index[b], index[name]] += coeff
            c[index[b], index[a], index[name]] -= coeff
    table = LieTable(list(basis), c)
    if not np.array_equal(c, -c.transpose(1, 0, 2)):
        raise VerificationError("n_G2 structure constants are not antisymmetric")
    jac = table.jacobiator()
    if np.any(jac):
        a, b, cc, m = (int(x) for x in np.argwhere(jac)[0])
        raise VerificationError("n_G2 violates the Jacobi identity", witness=(basis[a], basis[b], basis[cc]))
    logger.info("n_G2: dim %d, lower central series %s", table.dim, table.lower_central_dims())
    return table

"""
Uberalgebra 𝒰_{q,n} Module
--------------------------
The algebra generated by U_q(sl_n) and two extra generators w, z, realised as
S_q(V⊗V) ⋊ U_q^+(sl_n), with its structural maps and braid group action.

Features:
- Serre-like relation list on E_1..E_{n-1}, w, z (E_2 = 0 when n = 2)
- PBW presentation through the cross product: E_i -> E_{n-i}, w -> X_nn,
  z -> q(X_{n-1,n} - q X_{n,n-1})
- μ into U_q^+(sp_2n) (w -> E_0, z -> 0) and ι̂ into U_q^+(so_{2n+2})
  (w -> E_0 E_{-1}), with F-invariance of the images
- Braid operators T_i on the full algebra, certified through ι̂ and μ
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InvalidInputError
from core.freealg import FreeElement, GeneratorSet, intern_word, qcommutator
from core.qrat import ZERO, hbar, qint, qpow
from lie.cartan import CartanDatum, datum_from_entries, type_a
from quantum.uqfull import TriangularElement, UqAlgebra
from uber.crossprod import sqvv_cross_product, vv_element
from uber.homs import HomReport, plus_target, verify_hom
from uber.named import NamedPresentation

logger = logging.getLogger(__name__)


def _check_n(n: int):
    if n < 2:
        raise InvalidInputError(f"𝒰_q,n needs n >= 2, got {n}")


# ==================== LATTICE ====================
def uqn_pairing(n: int) -> List[List[int]]:
    """sl_n Cartan matrix on α_1..α_{n-1}, then ω = wt(w) with (α_1, ω) = -2, (ω, ω) = 4."""
    c = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        c[i][i] = 2
        if i + 1 < n - 1:
            c[i][i + 1] = c[i + 1][i] = -1
    c[0][n - 1] = c[n - 1][0] = -2
    c[n - 1][n - 1] = 4
    return c


def _unit(n: int, k: int, sign: int = 1) -> List[int]:
    return [sign if j == k else 0 for j in range(n)]


def uqn_generators(n: int) -> GeneratorSet:
    """E_1..E_{n-1}, w, z with wt(z) = α_1 + ω."""
    _check_n(n)
    names = [f"E{i}" for i in range(1, n)] + ["w", "z"]
    weights = [_unit(n, i) for i in range(n - 1)] + [_unit(n, n - 1), [1 if j in (0, n - 1) else 0 for j in range(n)]]
    return GeneratorSet(names, weights, uqn_pairing(n))


# ==================== RELATIONS ====================
def uqn_relations(n: int) -> Tuple[GeneratorSet, Dict[str, FreeElement]]:
    """
    Serre-like relations of 𝒰^+_{q,n}.

    Returns:
        (generators, {label: relation element})
    """
    gens = uqn_generators(n)
    zero = gens.zero()

    def E(i: int) -> FreeElement:
        return gens.gen(f"E{i}") if 1 <= i < n else zero

    w, z = gens.gen("w"), gens.gen("z")
    q, qi, q2, q2i = qpow(1), qpow(-1), qpow(2), qpow(-2)
    h = hbar()
    qc = qcommutator
    rels: Dict[str, FreeElement] = {}

    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) == 1:
                rels[f"[E{i},[E{i},E{j}]_q]_q^-1"] = qc(E(i), qc(E(i), E(j), q), qi)
            elif i < j:
                rels[f"[E{i},E{j}]"] = qc(E(i), E(j))
    for i in range(2, n):
        rels[f"[E{i},w]"] = qc(E(i), w)
    for i in range(1, n):
        if i != 2:
            rels[f"[E{i},z]"] = qc(E(i), z)
    rels["[z,w]"] = qc(z, w)
    rels["[E1,[E1,[E1,w]_q^-2]]_q^2"] = qc(E(1), qc(E(1), qc(E(1), w, q2i)), q2)
    rels["[w,[w,E1]_q^2]_q^-2 + h wz"] = qc(w, qc(w, E(1), q2), q2i) + w * z * h
    if n >= 3:
        rels["[E2,[E2,z]_q]_q^-1"] = qc(E(2), qc(E(2), z, q), qi)
        rels["[z,[E2,[E1,w]_q^2]_q]_q - [w,[E1,[E2,z]_q]_q]_q^2"] = (
            qc(z, qc(E(2), qc(E(1), w, q2), q), q) - qc(w, qc(E(1), qc(E(2), z, q), q), q2)
        )
        rhs = (
            z * qc(E(1), E(2), q) * w
            + w * qc(E(2), E(1), qi) * z
            + w * E(1) * qc(z, E(2), q)
            + qc(E(2), z, qi) * E(1) * w
        )
        rels["2[z,[z,E2]_q]_q^-1 - h(...)"] = qc(z, qc(z, E(2), q), qi) * 2 - rhs * h
    return gens, rels


# ==================== PBW PRESENTATION ====================
@lru_cache(maxsize=None)
def uqn_presentation(n: int) -> NamedPresentation:
    """𝒰^+_{q,n} as S_q(V⊗V) ⋊ U_q^+(sl_n)."""
    gens, rels = uqn_relations(n)
    cp = sqvv_cross_product(n)
    images = [cp.e_generator(n - i) for i in range(1, n)]
    images.append(vv_element(cp, n, n))
    images.append((vv_element(cp, n - 1, n) - vv_element(cp, n, n - 1) * qpow(1)) * qpow(1))
    notes = ["E_i acts as E_{n-i} of the cross product"]
    if n == 2:
        notes.append("E_2 = 0")
    return NamedPresentation(f"Uqn:{n}", cp.presentation.with_name(f"Uqn({n})"), gens, rels, images, notes)


# ==================== STRUCTURAL MAPS ====================
def sp_datum(n: int) -> CartanDatum:
    """sp_2n with long node 0 attached to node 1."""
    labels = [str(i) for i in range(n)]
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    a[1][0] = -2
    return datum_from_entries(labels, a, [2] + [1] * (n - 1))


def so_datum(n: int) -> CartanDatum:
    """so_{2n+2} with nodes -1 and 0 both attached to node 1."""
    labels = ["-1"] + [str(i) for i in range(n)]
    m = n + 1
    a = [[0] * m for _ in range(m)]
    for i in range(m):
        a[i][i] = 2
    a[0][2] = a[2][0] = -1
    for i in range(1, m - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return datum_from_entries(labels, a)


def mu_images(n: int, alg: Optional[UqAlgebra] = None) -> Tuple[UqAlgebra, List[FreeElement]]:
    """w -> E_0, z -> 0."""
    alg = alg or UqAlgebra(sp_datum(n))
    plus = alg.plus
    return alg, [plus.gen(str(i)) for i in range(1, n)] + [plus.gen("0"), plus.zero()]


def iota_hat_images(n: int, alg: Optional[UqAlgebra] = None) -> Tuple[UqAlgebra, List[FreeElement]]:
    """w -> E_0 E_{-1}, z -> (qh)^{-1}([E_{-1},[E_1,E_0]_q]_q + [E_0,[E_1,E_{-1}]_q]_q)."""
    alg = alg or UqAlgebra(so_datum(n))
    plus = alg.plus
    e0, em, e1 = plus.gen("0"), plus.gen("-1"), plus.gen("1")
    q = qpow(1)
    zed = (qcommutator(em, qcommutator(e1, e0, q), q) + qcommutator(e0, qcommutator(e1, em, q), q)) / (q * hbar())
    return alg, [plus.gen(str(i)) for i in range(1, n)] + [e0 * em, zed]


@dataclass
class StructuralReport:
    n: int
    homs: Dict[str, HomReport] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and all(r.ok for r in self.homs.values())


def structural_maps(n: int) -> StructuralReport:
    """
    Certify μ and ι̂ on every Serre-like relation, plus F_i-invariance of the
    images of w and z inside the full quantum groups.
    """
    _, rels = uqn_relations(n)
    report = StructuralReport(n)
    for label, (alg, images) in (("mu", mu_images(n)), ("iota_hat", iota_hat_images(n))):
        report.homs[label] = verify_hom(rels, images, plus_target(alg), name=f"{label}: Uqn({n}) -> {alg.datum.name}")
        for gen_index, gname in ((n - 1, "w"), (n, "z")):
            x = alg.from_plus(images[gen_index])
            ok = all(alg.is_zero(alg.F(str(i)) * x - x * alg.F(str(i))) for i in range(1, n))
            report.checks[f"{label}: [F_i, {gname}] = 0"] = ok
    logger.info("structural maps n=%d: %s", n, "ok" if report.ok else "FAIL")
    return report


# ==================== BRAID ACTION ====================
class UqnFull:
    """
    Free letters of 𝒰_{q,n}: E_i, F_i, K_i, K_i^{-1} (named Ki<i>), w and z.

    Elements are free words; equalities are decided through ι̂ or μ.
    """

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        r = n - 1
        names = (
            [f"E{i}" for i in range(1, n)]
            + [f"F{i}" for i in range(1, n)]
            + [f"K{i}" for i in range(1, n)]
            + [f"Ki{i}" for i in range(1, n)]
            + ["w", "z"]
        )
        zero = [0] * n
        weights = (
            [_unit(n, i) for i in range(r)]
            + [_unit(n, i, -1) for i in range(r)]
            + [zero] * (2 * r)
            + [_unit(n, n - 1), [1 if j in (0, n - 1) else 0 for j in range(n)]]
        )
        self.gens = GeneratorSet(names, weights, uqn_pairing(n))
        self.sl = UqAlgebra(type_a(r))
        self._letter_cache: Dict[Tuple[int, int, bool], FreeElement] = {}

    def gen(self, label) -> FreeElement:
        return self.gens.gen(label)

    def from_triangular(self, x: TriangularElement) -> FreeElement:
        """F-word K^v E-word of U_q(sl_n) as a free word in the full letters."""
        r = self.n - 1
        terms: Dict = {}
        for (f, k, e), c in x.terms.items():
            letters = [r + j for j in f]
            for j, p in enumerate(k):
                letters.extend([(2 * r if p > 0 else 3 * r) + j] * abs(p))
            letters.extend(e)
            word = intern_word(letters)
            terms[word] = terms.get(word, ZERO) + c
        return FreeElement(self.gens, terms)

    def _letter_image(self, i: int, x: int, inverse: bool) -> FreeElement:
        key = (i, x, inverse)
        if key in self._letter_cache:
            return self._letter_cache[key]
        r, n = self.n - 1, self.n
        g = self.gens
        if x < 4 * r:
            kind, j = divmod(x, r)
            sl = self.sl
            src = (sl.E, sl.F, sl.K, lambda lab: sl.K(lab, -1))[kind](str(j + 1))
            img = self.from_triangular(sl.braid(str(i), src, inverse))
        elif g.names[x] == "w":
            w = g.gen("w")
            if i != 1:
                img = w
            elif inverse:
                e1 = g.gen("E1")
                img = qcommutator(e1, qcommutator(e1, w, qpow(-2))) / qint(2)
            else:
                e1 = g.gen("E1")
                img = qcommutator(qcommutator(w, e1, qpow(-2)), e1) / qint(2)
        else:
            z = g.gen("z")
            if i != 2 or n < 3:
                img = z
            elif inverse:
                img = qcommutator(g.gen("E2"), z, qpow(-1))
            else:
                img = qcommutator(z, g.gen("E2"), qpow(-1))
        self._letter_cache[key] = img
        return img

    def braid(self, i: int, u: FreeElement, inverse: bool = False) -> FreeElement:
        """T_i (or T_i^{-1}) extended multiplicatively from the letters."""
        if not 1 <= i < self.n:
            raise InvalidInputError(f"T_{i} is not a braid generator of sl_{self.n}")
        images = [self._letter_image(i, x, inverse) for x in range(len(self.gens))]
        return u.substitute(images, self.gens.one())

    def braid_word(self, word: Sequence[int], u: FreeElement, inverse: bool = False) -> FreeElement:
        out = u
        for i in reversed(list(word)):
            out = self.braid(i, out, inverse)
        return out

    # ==================== EVALUATION ====================
    def _evaluation(self, alg: UqAlgebra, w_img: FreeElement, z_img: FreeElement) -> List[TriangularElement]:
        n = self.n
        out = [alg.E(str(i)) for i in range(1, n)]
        out += [alg.F(str(i)) for i in range(1, n)]
        out += [alg.K(str(i)) for i in range(1, n)]
        out += [alg.K(str(i), -1) for i in range(1, n)]
        return out + [alg.from_plus(w_img), alg.from_plus(z_img)]

    def iota_hat(self, u: FreeElement, alg: Optional[UqAlgebra] = None) -> TriangularElement:
        alg, imgs = iota_hat_images(self.n, alg)
        return u.substitute(self._evaluation(alg, imgs[-2], imgs[-1]), alg.one())

    def mu(self, u: FreeElement, alg: Optional[UqAlgebra] = None) -> TriangularElement:
        alg, imgs = mu_images(self.n, alg)
        return u.substitute(self._evaluation(alg, imgs[-2], imgs[-1]), alg.one())


@lru_cache(maxsize=None)
def _full(n: int) -> UqnFull:
    return UqnFull(n)


def braid_on_uber(n: int, i: int, u: FreeElement, inverse: bool = False) -> FreeElement:
    """Apply T_i of the braid group of sl_n to an element of 𝒰_{q,n} over the UqnFull letters."""
    full = _full(n)
    if u.gens != full.gens:
        raise InvalidInputError("element is not over the letters of 𝒰_q,n")
    return full.braid(i, u, inverse)


@dataclass
class BraidReport:
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def braid_report(n: int, braid_relations: bool = False) -> BraidReport:
    """
    Certify the extended T_i through ι̂ and μ.

    Checks T_i T_i^{-1} = T_i^{-1} T_i = id on w and z, ι̂ ∘ T_i = T_i ∘ ι̂ and
    μ ∘ T_i = T_i ∘ μ on w and z, and optionally the braid relations of the
    T_i on w and z.
    """
    full = _full(n)
    so = UqAlgebra(so_datum(n))
    sp = UqAlgebra(sp_datum(n))
    report = BraidReport(n)
    letters = {"w": full.gen("w"), "z": full.gen("z")}

    def same(a: FreeElement, b: FreeElement) -> bool:
        return so.is_zero(full.iota_hat(a - b, so))

    for i in range(1, n):
        inv_ok = all(
            same(full.braid(i, full.braid(i, x, True)), x) and same(full.braid(i, full.braid(i, x), True), x)
            for x in letters.values()
        )
        report.checks[f"T_{i} T_{i}^-1 = id"] = inv_ok
        for name, x in letters.items():
            lhs = full.iota_hat(full.braid(i, x), so)
            rhs = so.braid(str(i), full.iota_hat(x, so))
            report.checks[f"ι̂ T_{i}({name}) = T_{i} ι̂({name})"] = so.is_zero(lhs - rhs)
            lhs = full.mu(full.braid(i, x), sp)
            rhs = sp.braid(str(i), full.mu(x, sp))
            report.checks[f"μ T_{i}({name}) = T_{i} μ({name})"] = sp.is_zero(lhs - rhs)

    if braid_relations:
        for i in range(1, n - 1):
            for name, x in letters.items():
                a = full.braid_word([i, i + 1, i], x)
                b = full.braid_word([i + 1, i, i + 1], x)
                report.checks[f"T_{i}T_{i + 1}T_{i}({name}) = T_{i + 1}T_{i}T_{i + 1}({name})"] = same(a, b)
        for i in range(1, n):
            for j in range(i + 2, n):
                for name, x in letters.items():
                    report.checks[f"T_{i}T_{j}({name}) = T_{j}T_{i}({name})"] = same(
                        full.braid_word([i, j], x), full.braid_word([j, i], x)
                    )
    logger.info("braid action on Uqn(%d): %s", n, report.checks)
    return report

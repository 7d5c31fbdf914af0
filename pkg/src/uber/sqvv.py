"""
Quantum Symmetric Algebra Module
--------------------------------
S_q(V⊗V) = T(Y)/⟨Im(Ψ - 1)⟩ with Y = V ⊗ V, as a PBW presentation on the
generators X_ij = X_i ⊗ X_j.

Features:
- Generator order ≺: larger min(i, j) first, then larger max(i, j), then X_ij before X_ji for i < j
- Weights δ + Σ_{m≥j} α_m + Σ_{m≥k} α_m on the lattice (α_1..α_{n-1}, δ)
- Relations read off a reduced echelon basis of Im(Ψ - 1)
- Cross-check of the closed-form relation families against Im(Ψ - 1)
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from core.errors import InvalidInputError
from core.freealg import FreeElement, GeneratorSet, intern_word
from core.linalg import EchelonBasis, Vector, vec_add
from core.qrat import ONE, RatQ, hbar, qpow
from rewrite.presentation import Presentation
from uber.psi import PsiOperator

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


# ==================== GENERATORS ====================
def pair_key(pair: Pair) -> Tuple[int, int, int]:
    """Ascending sort key of ≺."""
    a, b = pair
    return (-min(a, b), -max(a, b), 1 if a > b else 0)


def ordered_pairs(n: int) -> List[Pair]:
    return sorted(((a, b) for a in range(1, n + 1) for b in range(1, n + 1)), key=pair_key)


def pair_name(n: int, pair: Pair) -> str:
    a, b = pair
    return f"X{a}{b}" if n < 10 else f"X{a}_{b}"


def vv_weight(n: int, j: int, k: int) -> List[int]:
    w = [0] * n
    for m in range(j, n):
        w[m - 1] += 1
    for m in range(k, n):
        w[m - 1] += 1
    w[n - 1] = 1
    return w


def vv_pairing(n: int) -> List[List[int]]:
    """sl_n Cartan matrix on the α's, (α_i, δ) = -2δ_{i,n-1}, (δ, δ) = 4."""
    c = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        c[i][i] = 2
        if i + 1 < n - 1:
            c[i][i + 1] = c[i + 1][i] = -1
    c[n - 2][n - 1] = c[n - 1][n - 2] = -2
    c[n - 1][n - 1] = 4
    return c


def sqvv_generators(n: int) -> Tuple[GeneratorSet, List[Pair]]:
    if n < 2:
        raise InvalidInputError(f"S_q(V⊗V) needs n >= 2, got {n}")
    pairs = ordered_pairs(n)
    gens = GeneratorSet([pair_name(n, p) for p in pairs], [vv_weight(n, *p) for p in pairs], vv_pairing(n))
    return gens, pairs


# ==================== PRESENTATION ====================
def psi_minus_one_relations(n: int, psi: Optional[PsiOperator] = None) -> Tuple[GeneratorSet, List[FreeElement]]:
    """Reduced echelon basis of Im(Ψ - 1) as quadratic elements of T(Y)."""
    psi = psi or PsiOperator(n)
    gens, pairs = sqvv_generators(n)
    index = {p: i for i, p in enumerate(pairs)}
    basis = EchelonBasis(order=lambda w: w)
    for t in psi.basis(4):
        img = vec_add(psi.apply({t: ONE}), {t: ONE}, -ONE)
        basis.add({(index[(s[0], s[1])], index[(s[2], s[3])]): c for s, c in img.items()})
    relations = [FreeElement(gens, {intern_word(w): c for w, c in row.items()}) for row in basis.rows.values()]
    logger.info("Im(Ψ - 1) for n=%d has dimension %d", n, len(relations))
    return gens, relations


def sqvv_presentation(n: int, psi: Optional[PsiOperator] = None) -> Presentation:
    """
    PBW presentation of S_q(V⊗V) on the ≺-ordered X_ij.

    Raises:
        InvalidInputError: if some relation does not lead with an out-of-order pair
    """
    gens, relations = psi_minus_one_relations(n, psi)
    return Presentation.from_relations(gens, relations, name=f"SqVV({n})")


# ==================== RELATION FAMILIES ====================
def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


def _qm(a: int, b: int, c: int) -> RatQ:
    return qpow(-(_d(a, b) + _d(b, c)))


def _qpm(a: int, b: int, c: int) -> RatQ:
    return qpow(_d(a, b) - _d(b, c))


Quad = Tuple[Pair, Pair]
Family = Callable[[int, int, int, int], Tuple[Quad, List[Tuple[RatQ, Quad]]]]


def _families() -> Dict[str, Family]:
    h = hbar()
    q = qpow

    def f1(i, j, k, l):
        return ((i, j), (k, l)), [
            (_qm(i, k, j) * _qm(i, l, j), ((k, l), (i, j))),
            (h * q(-_d(i, j)) * _qm(i, k, j), ((k, j), (i, l))),
            (h * q(-_d(i, j)) * _qm(i, k, l) * _qm(i, l, j), ((l, j), (k, i))),
            (h ** 2 * _qm(i, k, l) * _qm(j, i, l), ((j, l), (k, i))),
            (h ** 2 * _qm(i, k, j) * _qm(j, i, l), ((k, j), (l, i))),
            (h ** 3 * q(-_d(i, k)) * _qm(j, i, l), ((j, k), (l, i))),
        ]

    def f2(i, j, k, l):
        return ((i, j), (l, k)), [
            (_qm(i, k, j) * _qm(i, l, j), ((l, k), (i, j))),
            (h * q(-_d(i, j)) * _qm(i, l, j), ((l, j), (i, k))),
            (h * q(-_d(i, j)) * _qm(i, k, j) * _qpm(k, l, i), ((k, j), (l, i))),
            (h ** 2 * _qm(j, i, l) * _qpm(l, k, i), ((j, k), (l, i))),
        ]

    def f3(i, j, k, l):
        return ((j, i), (k, l)), [
            (_qm(i, k, j) * _qm(i, l, j), ((k, l), (j, i))),
            (h * q(-_d(i, l)) * _qm(i, k, l), ((j, l), (k, i))),
            (h * q(-_d(i, l)) * _qm(i, k, j), ((k, j), (l, i))),
            (h ** 2 * _qm(k, i, l), ((j, k), (l, i))),
        ]

    def f4(i, j, k, l):
        return ((j, i), (l, k)), [
            (_qm(i, k, j) * _qm(i, l, j), ((l, k), (j, i))),
            (h * q(-_d(i, k)) * _qm(i, l, j), ((l, j), (k, i))),
            (h * q(-_d(i, k)) * _qpm(k, l, i), ((j, k), (l, i))),
        ]

    def f5(i, j, k, l):
        return ((i, k), (j, l)), [
            (_qm(j, i, l) * _qpm(j, k, l), ((j, l), (i, k))),
            (-h * q(-_d(i, k)) * _qm(i, l, j), ((k, l), (i, j))),
            (h * q(-_d(i, k)) * _qm(j, i, l) * _qm(j, l, k), ((l, k), (j, i))),
            (h * q(-_d(i, k)) * _qpm(k, j, i), ((j, k), (i, l))),
            (h ** 2 * _qm(j, i, k) * q(-_d(i, l) + _d(j, k)), ((j, k), (l, i))),
            (-h ** 2 * _qm(j, i, k), ((k, j), (i, l))),
            (h ** 2 * _qm(j, i, k) * _qm(i, l, j), ((k, l), (j, i))),
        ]

    def f6(i, j, k, l):
        return ((i, k), (l, j)), [
            (_qm(j, i, l) * _qpm(j, k, l), ((l, j), (i, k))),
            (h * q(-_d(i, j)) * _qpm(j, k, i) * _qpm(j, l, i), ((j, k), (l, i))),
        ]

    def f7(i, j, k, l):
        return ((k, i), (j, l)), [
            (_qm(j, i, l) * _qpm(j, k, l), ((j, l), (k, i))),
            (h * q(_d(j, k)) * _qm(j, i, l), ((j, k), (l, i))),
        ]

    def f8(i, j, k, l):
        return ((k, i), (l, j)), [
            (_qm(j, i, l) * _qpm(j, k, l), ((l, j), (k, i))),
            (h * q(-_d(i, j)) * _qpm(j, l, i), ((k, j), (l, i))),
        ]

    def f9(i, j, k, l):
        return ((i, l), (j, k)), [
            (_qpm(l, j, i) * _qpm(l, k, i), ((j, k), (i, l))),
            (h * q(-_d(i, l)) * _qm(i, k, j) * q(-_d(i, j) + _d(k, l)), ((k, l), (j, i))),
            (-h * q(-_d(i, l)) * _qm(i, k, j), ((l, k), (i, j))),
            (h ** 2 * _qm(j, i, l) * q(-_d(i, k) + _d(j, l)), ((j, l), (k, i))),
            (-h ** 2, ((l, j), (i, k))),
        ]

    def f10(i, j, k, l):
        return ((i, l), (k, j)), [
            (_qpm(l, j, i) * _qpm(l, k, i), ((k, j), (i, l))),
            (h * q(_d(j, k)) * _qm(j, i, l) * q(-_d(i, k) + _d(j, l)), ((j, l), (k, i))),
            (-h * q(_d(j, k)) * _qm(j, i, l), ((l, j), (i, k))),
        ]

    def f11(i, j, k, l):
        return ((l, i), (j, k)), [(_qpm(l, j, i) * _qpm(l, k, i), ((j, k), (l, i)))]

    def f12(i, j, k, l):
        return ((l, i), (k, j)), [(_qpm(l, j, i) * _qpm(l, k, i), ((k, j), (l, i)))]

    return {
        "XijXkl": f1, "XijXlk": f2, "XjiXkl": f3, "XjiXlk": f4,
        "XikXjl": f5, "XikXlj": f6, "XkiXjl": f7, "XkiXlj": f8,
        "XilXjk": f9, "XilXkj": f10, "XliXjk": f11, "XliXkj": f12,
    }


@dataclass
class FamilyReport:
    n: int
    families: Dict[str, bool] = field(default_factory=dict)
    failures: Dict[str, Tuple[int, int, int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.families.values())


def family_report(n: int, psi: Optional[PsiOperator] = None) -> FamilyReport:
    """
    Test each closed-form relation family against Im(Ψ - 1).

    A quadratic vector lies in Im(Ψ - 1) iff (Ψ + q^2)(Ψ + q^{-2}) kills it.
    """
    psi = psi or PsiOperator(n)
    report = FamilyReport(n)
    quads = [(i, j, k, l) for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1) for l in range(k, n + 1)]
    for name, family in _families().items():
        report.families[name] = True
        for idx in quads:
            (a, b), rhs = family(*idx)
            v: Vector = {a + b: ONE}
            for c, (x, y) in rhs:
                v = vec_add(v, {x + y: ONE}, -c)
            w = vec_add(psi.apply(v), v, qpow(-2))
            w = vec_add(psi.apply(w), w, qpow(2))
            if w:
                report.families[name] = False
                report.failures[name] = idx
                break
    logger.info("relation families for n=%d: %s", n, report.families)
    return report

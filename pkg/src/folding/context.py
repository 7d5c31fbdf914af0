"""
Folding Context Module
----------------------
Quantum foldings ι_i : U_q^+((g^σ)^∨) -> U_q^+(g) along a reduced word.

Features:
- Context names "D4/cyc123/121212", "A2xA2/swap/121", "D3/swap/2121", "A3/flip/1212"
- σ acting on E-words by index permutation
- Hat-PBW elements X̂_k = ĉ_k^{-1} T̂_{r_1}...T̂_{r_{k-1}}(Ê_{r_k}) with σ-fixedness checks
- ι on PBW monomials and on linear combinations in folded PBW coordinates
- Change of reduced word across one rank-2 braid move
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InvalidInputError, VerificationError
from core.freealg import FreeElement, qcommutator
from core.linalg import EchelonBasis
from core.qrat import ONE, RatQ, hbar, qpow
from lie.cartan import (
    CartanDatum,
    DiagramAut,
    Folding,
    WeylGroup,
    WeylWord,
    fold_cartan,
    hat_lift,
    parse_cartan,
    parse_word,
)
from quantum.pbw import braid_into_plus, exponent_vectors, express_in_monomials, pbw_monomial
from quantum.uqfull import UqAlgebra, is_zero_plus

logger = logging.getLogger(__name__)


# ==================== AUTOMORPHISM NAMES ====================
def named_aut(name: str, datum: CartanDatum) -> DiagramAut:
    """
    Resolve a short automorphism name.

    Args:
        name: "id", "swap"/"cyc" (cyclic shift of identical factors, or the fork
            swap of D_n), "cyc123" (outer nodes of the centred D4), "flip"
            (i -> n+1-i on A_n), or explicit cycle notation "(1 2 3)"
        datum: Datum the automorphism acts on
    """
    n = datum.rank
    if name in ("", "id"):
        return DiagramAut.identity(n)
    if name.startswith("("):
        return DiagramAut.parse(name, datum)
    comps = datum.components()
    if name in ("swap", "cyc") and len(comps) > 1:
        size = len(comps[0])
        if any(len(c) != size for c in comps):
            raise InvalidInputError(f"{datum.name}: factors differ in size")
        perm = [0] * n
        for f, comp in enumerate(comps):
            target = comps[(f + 1) % len(comps)]
            for i, j in zip(comp, target):
                perm[i] = j
        return DiagramAut(tuple(perm))
    if name == "swap" and datum.name.startswith("D"):
        perm = list(range(n))
        perm[n - 2], perm[n - 1] = n - 1, n - 2
        return DiagramAut(tuple(perm))
    if name == "cyc123":
        return DiagramAut.parse("(1 2 3)", datum)
    if name == "flip":
        return DiagramAut(tuple(n - 1 - i for i in range(n)))
    raise InvalidInputError(f"unknown automorphism {name!r} for {datum.name}")


# ==================== CONTEXT ====================
@dataclass
class FoldingContext:
    """Ambient algebra, folding data and a reduced word of w∘ on I/σ."""

    name: str
    folding: Folding
    ambient: UqAlgebra
    folded: UqAlgebra
    word: WeylWord
    hat_word: WeylWord
    _hat_pbw: Optional[List[FreeElement]] = field(default=None, repr=False)

    @property
    def aut(self) -> DiagramAut:
        return self.folding.aut

    @property
    def length(self) -> int:
        return len(self.word)

    def sigma(self, u: FreeElement) -> FreeElement:
        return u.relabel(dict(enumerate(self.aut.perm)))

    def is_sigma_fixed(self, u: FreeElement) -> bool:
        return is_zero_plus(self.ambient, self.sigma(u) - u)

    def orbit_product(self, r: int) -> FreeElement:
        """Ê_r = Π_{i ∈ O_r} E_i in ambient order."""
        out = self.ambient.plus.one()
        for i in self.folding.orbits[r]:
            out = out * self.ambient.plus.gen(i)
        return out

    def hat_roots(self) -> List[Tuple[int, ...]]:
        """ŵ_{k-1}(Σ_{i ∈ O_{r_k}} α_i): weights of the X̂_k."""
        weyl = WeylGroup(self.folding.datum)
        out, pos = [], 0
        for r in self.word:
            prefix = self.hat_word[:pos]
            vec = [0] * self.folding.datum.rank
            for i in self.folding.orbits[r]:
                vec[i] = 1
            out.append(weyl.act(prefix, vec))
            pos += len(self.folding.orbits[r])
        return out


def make_context(datum: CartanDatum, aut: DiagramAut, word: Sequence[int], name: str = "") -> FoldingContext:
    folding = fold_cartan(datum, aut)
    word = tuple(word)
    hat = hat_lift(word, folding)
    weyl = WeylGroup(folding.folded)
    if len(word) != len(weyl.positive_roots()):
        raise InvalidInputError(f"word {word} is not a reduced word of the longest element")
    ctx = FoldingContext(name or f"{datum.name}/{word}", folding, UqAlgebra(datum), UqAlgebra(folding.folded), word, hat)
    logger.info("context %s: hat word %s", ctx.name, hat)
    return ctx


_CONTEXT = re.compile(r"^([^/]+)/([^/]*)/([\d,]*|wo)$")


def fold_context(name: str) -> FoldingContext:
    """Parse "TYPE/AUT/WORD"; word digits are 1-based positions of the folded nodes."""
    m = _CONTEXT.match(name.strip())
    if not m:
        raise InvalidInputError(f"context {name!r} must look like TYPE/AUT/WORD")
    datum = parse_cartan(m.group(1))
    aut = named_aut(m.group(2), datum)
    folding = fold_cartan(datum, aut)
    if m.group(3) in ("", "wo"):
        word = WeylGroup(folding.folded).longest_element()
    else:
        word = parse_word(m.group(3), folding.folded)
    return make_context(datum, aut, word, name=name.strip())


# ==================== HAT PBW AND IOTA ====================
def hat_pbw(ctx: FoldingContext, check_sigma: bool = True) -> List[FreeElement]:
    """
    X̂_1..X̂_m for the context word.

    Raises:
        VerificationError: if some X̂_k is not σ-fixed
    """
    if ctx._hat_pbw is not None:
        return ctx._hat_pbw
    alg = ctx.ambient
    out, pos = [], 0
    for k, (r, beta) in enumerate(zip(ctx.word, ctx.hat_roots())):
        orbit = ctx.folding.orbits[r]
        raw = braid_into_plus(alg, ctx.hat_word[:pos], ctx.orbit_product(r))
        orbit_sum = [1 if i in orbit else 0 for i in range(alg.rank)]
        c_hat = alg.gamma([b - s for b, s in zip(beta, orbit_sum)])
        x = raw / c_hat
        if check_sigma and not ctx.is_sigma_fixed(x):
            raise VerificationError(f"X̂_{k + 1} is not σ-fixed in {ctx.name}", witness=x.to_text())
        out.append(x)
        pos += len(orbit)
    ctx._hat_pbw = out
    return out


def iota(ctx: FoldingContext, exponents: Sequence[int]) -> FreeElement:
    """ι(X^a) = X̂_1^{a_1} ... X̂_m^{a_m}."""
    if len(exponents) != ctx.length:
        raise InvalidInputError(f"expected {ctx.length} exponents, got {len(exponents)}")
    return pbw_monomial(hat_pbw(ctx), exponents, ctx.ambient.plus.one())


def iota_linear(ctx: FoldingContext, coords: Dict[Tuple[int, ...], RatQ]) -> FreeElement:
    """Linear extension over folded PBW coordinates {exponent vector: coefficient}."""
    out = ctx.ambient.plus.zero()
    for exps, c in coords.items():
        out = out + iota(ctx, exps) * c
    return out


@dataclass
class IotaReport:
    context: str
    max_degree: int
    monomials: int = 0
    sigma_fixed: bool = True
    injective: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sigma_fixed and self.injective


def iota_report(ctx: FoldingContext, max_degree: int = 4) -> IotaReport:
    """σ-fixedness and linear independence of ι-images of PBW monomials up to a degree."""
    report = IotaReport(ctx.name, max_degree)
    alg = ctx.ambient
    by_weight: Dict[Tuple[int, ...], EchelonBasis] = {}
    for d in range(max_degree + 1):
        for exps in exponent_vectors(ctx.length, d):
            img = iota(ctx, exps)
            report.monomials += 1
            if not ctx.is_sigma_fixed(img):
                report.sigma_fixed = False
                report.failures.append(f"not σ-fixed: {exps}")
            basis = by_weight.setdefault(img.weight(), EchelonBasis())
            if not basis.add(alg.coordinates(img)):
                report.injective = False
                report.failures.append(f"dependent image: {exps}")
    return report


# ==================== CHANGE OF REDUCED WORD ====================
@dataclass
class ChangeOfWordReport:
    source: str
    target: str
    case: str
    expressions: Dict[str, str] = field(default_factory=dict)
    identities: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.identities.values()) and len(self.expressions) > 0


def _braid_window(a: Sequence[int], b: Sequence[int]) -> Optional[Tuple[int, int]]:
    diff = [k for k in range(len(a)) if a[k] != b[k]]
    if not diff:
        return None
    return diff[0], diff[-1] + 1


def compare_reduced_words(ctx: FoldingContext, other: FoldingContext) -> ChangeOfWordReport:
    """
    Express each X̂'_k of `other` as a polynomial in the X̂_k of `ctx`.

    Each expression is solved for over all words in the X̂_k of the right weight and
    then certified with is_zero_plus. The closed rank-2 identities are checked in
    the form they take under the T'_{i,-1} convention, where every X̂_k is the word
    reversal of its counterpart under the opposite braid convention.

    Raises:
        InvalidInputError: if the contexts fold differently, the words are not one
            braid move apart, or the orbit sizes have no closed identity
    """
    if ctx.folding.datum != other.folding.datum or ctx.folding.aut != other.folding.aut:
        raise InvalidInputError("contexts fold different data")
    window = _braid_window(ctx.word, other.word)
    report = ChangeOfWordReport(ctx.name, other.name, "identical")
    xs = hat_pbw(ctx)
    if window is None:
        for k in range(ctx.length):
            report.expressions[f"X'{k + 1}"] = f"X{k + 1}"
        return report
    lo, hi = window
    seg_a, seg_b = ctx.word[lo:hi], other.word[lo:hi]
    letters = set(seg_a) | set(seg_b)
    if len(letters) != 2:
        raise InvalidInputError("words differ by more than one rank-2 braid move")
    r, s = seg_a[0], seg_a[1] if len(seg_a) > 1 else None
    alternating = all(seg_a[k] == (r if k % 2 == 0 else s) for k in range(len(seg_a)))
    swapped = all(seg_b[k] == (s if k % 2 == 0 else r) for k in range(len(seg_b)))
    folded_a = ctx.folding.folded.matrix
    m_rs = {0: 2, 1: 3, 2: 4, 3: 6}[int(folded_a[r, s]) * int(folded_a[s, r])]
    if not (alternating and swapped and len(seg_a) == m_rs):
        raise InvalidInputError("words are not related by a single braid relation")

    sizes = (len(ctx.folding.orbits[r]), len(ctx.folding.orbits[s]))
    ys = hat_pbw(other)
    alg = ctx.ambient
    if ctx.length == 4 and sizes == (2, 1):
        report.case = "orbit sizes (2, 1)"
        report.identities.update(_identities_21(alg, xs, ys, "X", "X'"))
    elif ctx.length == 4 and sizes == (1, 2):
        report.case = "orbit sizes (1, 2)"
        report.identities.update(_identities_21(alg, ys, xs, "X'", "X"))
    elif ctx.length == 3 and sizes == (2, 2):
        report.case = "orbit sizes (2, 2)"
        report.identities.update(_identities_22(alg, xs, ys))
    else:
        raise InvalidInputError(f"no rank-2 change-of-word identity for orbit sizes {sizes} in {ctx.name}")

    roots = ctx.hat_roots()
    for k, y in enumerate(ys):
        label = f"X'{k + 1}"
        combo = express_in_monomials(alg.plus, xs, roots, y, ordered=False)
        if combo is None:
            report.identities[f"{label} is a polynomial in the X"] = False
            continue
        value = alg.plus.zero()
        for mono, c in combo.items():
            value = value + _word_value(xs, mono, alg.plus.one()) * c
        report.identities[f"{label} is a polynomial in the X"] = is_zero_plus(alg, y - value)
        terms = [f"({c})*{'.'.join(f'X{x + 1}' for x in mono) or '1'}" for mono, c in sorted(combo.items())]
        report.expressions[label] = " + ".join(terms) or "0"
    return report


def _word_value(elements: Sequence[FreeElement], mono: Sequence[int], one: FreeElement) -> FreeElement:
    out = one
    for x in mono:
        out = out * elements[x]
    return out


def _identities_21(alg: UqAlgebra, xs, ys, u: str, p: str) -> Dict[str, bool]:
    """
    Orbit sizes (2, 1): xs from the word (r, s, r, s), ys from (s, r, s, r).

    Under word reversal [X̂_4, X̂_1] becomes [X̂_1, X̂_4] and X̂_4 [X̂_4, X̂_1] becomes
    [X̂_1, X̂_4] X̂_4.
    """
    x1, x2, x3, x4 = xs
    h_inv = hbar().inverse()
    br = qcommutator(x1, x4)
    return {
        f"{p}1 = {u}4": is_zero_plus(alg, ys[0] - x4),
        f"{p}2 = q^-2 ({u}3 + h^-1 [{u}1, {u}4] {u}4)": is_zero_plus(alg, ys[1] - (x3 + br * x4 * h_inv) * qpow(-2)),
        f"{p}3 = {u}2 + q^-1 h^-1 [{u}1, {u}4]": is_zero_plus(alg, ys[2] - x2 - br * (qpow(-1) * h_inv)),
        f"{p}4 = {u}1": is_zero_plus(alg, ys[3] - x1),
    }


def _identities_22(alg: UqAlgebra, xs, ys) -> Dict[str, bool]:
    """Orbit sizes (2, 2): words (r, s, r) and (s, r, s)."""
    x1, x2, x3 = xs
    h_inv = hbar().inverse()
    return {
        "X'1 = X3": is_zero_plus(alg, ys[0] - x3),
        "X'2 = X2 + q^-1 h^-1 [X1, X3]": is_zero_plus(alg, ys[1] - x2 - qcommutator(x1, x3) * (qpow(-1) * h_inv)),
        "X'3 = X1": is_zero_plus(alg, ys[2] - x1),
    }

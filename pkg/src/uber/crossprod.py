"""
Cross Product Module
--------------------
A ⋊ U_q^+(sl_n) for a module algebra A given by a PBW presentation and the
action of the Chevalley generators on its generators.

The U_q^+(sl_n) factor enters through its PBW generators along the longest
word. A mixed rule X_k · a is obtained by expanding X_k into E-words and
moving every E_i to the right with E_i a = E_i(a) + q^{(α_i, wt a)} a E_i;
the E-parts left behind are re-expressed in ordered PBW monomials.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from core.errors import InvalidInputError, VerificationError
from core.freealg import EMPTY, FreeElement, GeneratorSet, Word, intern_word
from core.qrat import ONE, ZERO, RatQ, qpow
from lie.cartan import WeylGroup, type_a
from quantum.pbw import PBWPresentation, express_in_monomials, pbw_presentation
from quantum.uqfull import UqAlgebra
from rewrite.presentation import Presentation, lie_enveloping_counts
from uber.sqvv import ordered_pairs, pair_name, sqvv_presentation

logger = logging.getLogger(__name__)

# (i, generator index) -> {generator index: coefficient}; i is 1-based
ActionTable = Dict[Tuple[int, int], Dict[int, RatQ]]


def _acc(target: Dict, key, c: RatQ):
    v = target.get(key, ZERO) + c
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


# ==================== V⊗V ACTION ====================
def vv_action(n: int, pairs: List[Tuple[int, int]]) -> ActionTable:
    """E_i(X_jk) = δ_{i,j-1} X_{j-1,k} + δ_{i,k-1} q^{δ_ij - δ_{i,j-1}} X_{j,k-1}."""
    index = {p: x for x, p in enumerate(pairs)}
    table: ActionTable = {}
    for i in range(1, n):
        for (j, k), x in index.items():
            img: Dict[int, RatQ] = {}
            if i == j - 1:
                _acc(img, index[(j - 1, k)], ONE)
            if i == k - 1:
                _acc(img, index[(j, k - 1)], qpow(_d(i, j) - _d(i, j - 1)))
            if img:
                table[(i, x)] = img
    return table


def vv_f_action(n: int, pairs: List[Tuple[int, int]]) -> ActionTable:
    """F_i(X_jk) = δ_ij q^{δ_{i,k-1} - δ_ik} X_{j+1,k} + δ_ik X_{j,k+1}."""
    index = {p: x for x, p in enumerate(pairs)}
    table: ActionTable = {}
    for i in range(1, n):
        for (j, k), x in index.items():
            img: Dict[int, RatQ] = {}
            if i == j:
                _acc(img, index[(j + 1, k)], qpow(_d(i, k - 1) - _d(i, k)))
            if i == k:
                _acc(img, index[(j, k + 1)], ONE)
            if img:
                table[(i, x)] = img
    return table


def apply_action(table: ActionTable, i: int, u: FreeElement) -> FreeElement:
    """Extend a generator table linearly to degree-one elements."""
    out: Dict[Word, RatQ] = {}
    for w, c in u.terms.items():
        if len(w) != 1:
            raise InvalidInputError("action tables act on linear combinations of generators only")
        for y, c2 in table.get((i, w[0]), {}).items():
            _acc(out, intern_word((y,)), c * c2)
    return FreeElement(u.gens, out)


# ==================== CROSS PRODUCT ====================
@dataclass
class CrossProduct:
    presentation: Presentation
    module: Presentation
    pbw: PBWPresentation
    n: int

    @property
    def offset(self) -> int:
        return len(self.module.gens)

    def e_generator(self, i: int) -> FreeElement:
        """E_i (1-based) inside the cross product."""
        alpha = tuple(1 if j == i - 1 else 0 for j in range(self.n - 1))
        k = self.pbw.roots.index(alpha)
        return self.presentation.gen(self.offset + k)

    def module_generator(self, label) -> FreeElement:
        return self.presentation.gen(self.module.gens.lookup(label))


def _root_name(root: Tuple[int, ...]) -> str:
    support = [j + 1 for j, x in enumerate(root) if x]
    if len(support) == 1:
        return f"E{support[0]}"
    return f"E{support[0]}_{support[-1]}"


def _validate(module: Presentation, n: int, action: ActionTable):
    gens = module.gens
    if gens.rank < n - 1:
        raise InvalidInputError(f"module lattice of rank {gens.rank} cannot carry sl_{n} weights")
    for i in range(n - 1):
        for j in range(n - 1):
            expected = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if int(gens.pairing[i][j]) != expected:
                raise InvalidInputError("module pairing does not restrict to the sl_n Cartan matrix")
    for (i, x), img in action.items():
        if not 1 <= i < n or not 0 <= x < len(gens):
            raise InvalidInputError(f"malformed action entry E_{i} on generator {x}")
        target = list(gens.weights[x])
        target[i - 1] += 1
        for y in img:
            if list(gens.weights[y]) != target:
                raise InvalidInputError(f"E_{i}({gens.names[x]}) contains {gens.names[y]} of the wrong weight")
            if module.degrees[y] != module.degrees[x]:
                raise InvalidInputError(f"E_{i}({gens.names[x]}) changes the generator degree")


def cross_product(module: Presentation, n: int, action: ActionTable, name: str = "") -> CrossProduct:
    """
    PBW presentation of module ⋊ U_q^+(sl_n).

    Args:
        module: Complete PBW presentation of the module algebra
        n: sl_n
        action: E_i on module generators (1-based i)
        name: Identifier of the result

    Raises:
        InvalidInputError: on a malformed action table
        VerificationError: if some E-part leaves the span of ordered PBW monomials
    """
    if n < 2:
        raise InvalidInputError(f"cross product needs n >= 2, got {n}")
    _validate(module, n, action)
    alg = UqAlgebra(type_a(n - 1))
    pbw = pbw_presentation(alg, WeylGroup(alg.datum).longest_element(), prefix="E")
    mgens = module.gens
    m, r = len(mgens), mgens.rank
    names = list(mgens.names) + [_root_name(root) for root in pbw.roots]
    weights = list(mgens.weights) + [list(root) + [0] * (r - (n - 1)) for root in pbw.roots]
    gens = GeneratorSet(names, weights, mgens.pairing.tolist())
    degrees = list(module.degrees) + [sum(root) for root in pbw.roots]

    rules: Dict[Tuple[int, int], FreeElement] = {}
    for pair, rhs in module.rules.items():
        rules[pair] = FreeElement(gens, dict(rhs.terms))
    for (x, y), rhs in pbw.presentation.rules.items():
        rules[(m + x, m + y)] = FreeElement(gens, {intern_word(m + a for a in w): c for w, c in rhs.terms.items()})

    def alpha_pair(i: int, x: int) -> int:
        return sum(int(mgens.pairing[i][j]) * mgens.weights[x][j] for j in range(r))

    for k, element in enumerate(pbw.elements):
        for g in range(m):
            moved: Dict[Tuple[int, Word], RatQ] = {}
            for eword, c in element.terms.items():
                cur: Dict[Tuple[int, Word], RatQ] = {(g, EMPTY): c}
                for letter in reversed(eword):
                    nxt: Dict[Tuple[int, Word], RatQ] = {}
                    for (x, tail), cx in cur.items():
                        for y, cy in action.get((letter + 1, x), {}).items():
                            _acc(nxt, (y, tail), cx * cy)
                        _acc(nxt, (x, intern_word((letter,) + tail)), cx * qpow(alpha_pair(letter, x)))
                    cur = nxt
                for key, v in cur.items():
                    _acc(moved, key, v)
            grouped: Dict[int, Dict[Word, RatQ]] = {}
            for (y, tail), v in moved.items():
                grouped.setdefault(y, {})[tail] = v
            terms: Dict[Word, RatQ] = {}
            for y, part in grouped.items():
                combo = express_in_monomials(alg.plus, pbw.elements, pbw.roots, FreeElement(alg.e_gens, part))
                if combo is None:
                    raise VerificationError(f"{names[m + k]}.{names[g]} leaves the PBW span", witness=(k, g))
                for mono, c in combo.items():
                    _acc(terms, intern_word((y,) + tuple(m + a for a in mono)), c)
            rules[(g, m + k)] = FreeElement(gens, terms)

    p = Presentation(gens, rules, degrees, name=name or f"{module.name}xU+(sl{n})")
    logger.info("cross product %s: %d generators, %d rules", p.name, len(gens), len(rules))
    return CrossProduct(p, module, pbw, n)


def sqvv_cross_product(n: int) -> CrossProduct:
    """S_q(V⊗V) ⋊ U_q^+(sl_n) with the natural action on V⊗V."""
    module = sqvv_presentation(n)
    return cross_product(module, n, vv_action(n, ordered_pairs(n)), name=f"SqVVxU+({n})")


def vv_element(cp: CrossProduct, j: int, k: int) -> FreeElement:
    """X_jk inside a V⊗V cross product."""
    return cp.module_generator(pair_name(cp.n, (j, k)))


def vv_classical_dimensions(n: int) -> Dict[int, int]:
    """Basis elements of (V⊗V) ⋊ (sl_n)_+ per height: n² vectors in height 1, n - h positive roots of height h."""
    dims = {1: n * n}
    for h in range(1, n):
        dims[h] = dims.get(h, 0) + n - h
    return dims


def dimension_report(cp: CrossProduct, max_degree: int = 4) -> Dict[int, Tuple[int, int]]:
    """
    Ordered monomials of the cross product graded by height (module generators
    in height 1, root vectors by root height) against dim U((V⊗V) ⋊ n_+)_d.
    The count only means something once the presentation is confluent.

    Returns:
        {d: (monomial count, enveloping-algebra dimension)}
    """
    heights = [1] * len(cp.module.gens) + [sum(root) for root in cp.pbw.roots]
    graded = Presentation(cp.presentation.gens, {}, heights, name=f"{cp.presentation.name} by height", partial=True)
    classical = vv_classical_dimensions(cp.n)
    return {d: (graded.graded_dimension(d), lie_enveloping_counts(classical, d)) for d in range(max_degree + 1)}

"""
PBW Module
----------
Modified PBW generators along reduced words and the PBW presentations they
satisfy.

Features:
- X_k = c_k^{-1} T_{i_1}...T_{i_{k-1}}(E_{i_k}) with c_k = γ(s_{i_1}...s_{i_{k-1}}(α_{i_k}) - α_{i_k})
- Optional certification that discarded F/K components vanish
- Straightening rules X_l X_k -> Σ c·(ordered monomials) by exact linear algebra
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import InvalidInputError, VerificationError
from core.freealg import FreeElement, GeneratorSet, Word, intern_word
from core.linalg import EchelonBasis
from lie.cartan import WeylGroup, WeylWord
from quantum.uqfull import UqAlgebra
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)


def roots_of_word(alg: UqAlgebra, word: Sequence[int]) -> List[Tuple[int, ...]]:
    """β_k = s_{i_1}...s_{i_{k-1}}(α_{i_k})."""
    weyl = WeylGroup(alg.datum)
    return [weyl.act(word[:k], weyl.simple(word[k])) for k in range(len(word))]


def braid_into_plus(alg: UqAlgebra, prefix: Sequence[int], u: FreeElement, verify: Optional[bool] = None) -> FreeElement:
    """
    T_{w_1}...T_{w_n}(u) for u in U_q^+ when the result stays in U_q^+.

    Each T is applied to the current E-part and the result is projected back
    onto the F = 1, K = 1 component of the triangular decomposition.
    """
    check = settings.VERIFY_PBW if verify is None else verify
    cur = u
    for i in reversed(list(prefix)):
        full = alg.braid(i, cur)
        cur = full.plus_part()
        if check:
            rest = full - alg.from_plus(cur)
            if not alg.is_zero(rest):
                raise VerificationError(
                    f"T_{alg.datum.labels[i]} leaves U_q^+ on this element", witness=rest.to_text()
                )
    return cur


def pbw_elements(alg: UqAlgebra, word: Sequence[int], verify: Optional[bool] = None) -> List[FreeElement]:
    """
    Modified PBW generators X_1..X_m along a reduced word.

    Args:
        alg: Quantum group
        word: Reduced word (node indices)
        verify: Certify projections (defaults to settings.VERIFY_PBW)

    Raises:
        InvalidInputError: if the word is not reduced
    """
    word = tuple(word)
    weyl = WeylGroup(alg.datum)
    if not weyl.is_reduced(word):
        raise InvalidInputError(f"word {word} is not reduced in {alg.datum.name}")
    out = []
    for k, beta in enumerate(roots_of_word(alg, word)):
        i = word[k]
        e = alg.plus.gen(i)
        raw = braid_into_plus(alg, word[:k], e, verify)
        diff = [b - (1 if j == i else 0) for j, b in enumerate(beta)]
        out.append(raw / alg.gamma(diff))
        logger.debug("X_%d has %d words", k + 1, len(raw.terms))
    return out


def ordered_monomials_of_weight(weights: Sequence[Sequence[int]], target: Sequence[int], start: int = 0) -> Iterator[Word]:
    """Non-decreasing index tuples whose weights sum to target (all weights nonnegative, nonzero)."""
    if not any(target):
        yield intern_word(())
        return
    for x in range(start, len(weights)):
        rest = [t - w for t, w in zip(target, weights[x])]
        if all(r >= 0 for r in rest):
            for tail in ordered_monomials_of_weight(weights, rest, x):
                yield intern_word((x,) + tail)


def monomials_of_weight(weights: Sequence[Sequence[int]], target: Sequence[int]) -> Iterator[Word]:
    """All index tuples, in any order, whose weights sum to target."""
    if not any(target):
        yield intern_word(())
        return
    for x in range(len(weights)):
        rest = [t - w for t, w in zip(target, weights[x])]
        if all(r >= 0 for r in rest):
            for tail in monomials_of_weight(weights, rest):
                yield intern_word((x,) + tail)


def express_in_monomials(
    ambient,
    elements: Sequence[FreeElement],
    weights: Sequence[Sequence[int]],
    u: FreeElement,
    ordered: bool = True,
) -> Optional[Dict[Word, object]]:
    """
    Coefficients of u in monomials of `elements`, or None if u is outside their span.

    With ordered=False every word in the elements is allowed, so the span is the
    weight space of the subalgebra they generate.
    """
    target = u.weight()
    basis = EchelonBasis(track=True)
    one = ambient.one()
    candidates = ordered_monomials_of_weight(weights, target) if ordered else monomials_of_weight(weights, target)
    for mono in candidates:
        value = one
        for x in mono:
            value = value * elements[x]
        basis.add(ambient.coordinates(value), tag=mono)
    return basis.express(ambient.coordinates(u))


@dataclass
class PBWPresentation:
    word: WeylWord
    roots: List[Tuple[int, ...]]
    elements: List[FreeElement]
    presentation: Presentation


def pbw_presentation(alg: UqAlgebra, word: Sequence[int], name: str = "", prefix: str = "X") -> PBWPresentation:
    """
    Levendorskii-Soibelman style rules among the PBW generators of a reduced word.

    Every product X_l X_k (k < l) is expressed in ordered monomials of equal weight.
    """
    word = tuple(word)
    elements = pbw_elements(alg, word)
    roots = roots_of_word(alg, word)
    names = [f"{prefix}{k + 1}" for k in range(len(word))]
    gens = GeneratorSet(names, roots, alg.c)
    rules = {}
    for l in range(len(word)):
        for k in range(l):
            product = elements[l] * elements[k]
            combo = express_in_monomials(alg.plus, elements, roots, product)
            if combo is None:
                raise VerificationError(f"{names[l]}.{names[k]} is not in the span of ordered monomials", witness=(l, k))
            rules[(k, l)] = FreeElement(gens, {mono: c for mono, c in combo.items()})
    degrees = [sum(r) for r in roots]
    p = Presentation(gens, rules, degrees, name=name or f"U+({alg.datum.name})/{''.join(str(i + 1) for i in word)}")
    return PBWPresentation(word, roots, elements, p)


def pbw_monomial(elements: Sequence[FreeElement], exponents: Sequence[int], one: FreeElement) -> FreeElement:
    """X_1^{a_1} ... X_m^{a_m}."""
    if len(exponents) != len(elements):
        raise InvalidInputError(f"expected {len(elements)} exponents, got {len(exponents)}")
    out = one
    for x, a in zip(elements, exponents):
        for _ in range(a):
            out = out * x
    return out


def exponent_vectors(m: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """Exponent vectors of total degree `degree` (in generator count)."""
    for combo in combinations_with_replacement(range(m), degree):
        vec = [0] * m
        for x in combo:
            vec[x] += 1
        yield tuple(vec)

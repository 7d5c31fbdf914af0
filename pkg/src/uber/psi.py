"""
Braiding Module
---------------
The braiding Ψ on Y ⊗ Y, Y = V ⊗ V with V the natural sl_n module, assembled
from the Hecke generator T of V ⊗ V, and braided factorials of any braiding.

Features:
- Hecke words Σ c·T_{w_1}···T_{w_k} evaluated on any run of tensor slots
- Ψ and Ψ^{-1} on V^{⊗4}, placed in any pair slot of Y^{⊗k}
- Property report: braid equation, cubic minimal polynomial, inverse, rank of Ψ - 1, q = 1 limit
- Braided factorials [k]!_Ψ = Σ_{w ∈ S_k} Ψ_w with their kernel dimensions
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

from core.errors import InvalidInputError
from core.linalg import LinearMap, Vector, vec_add
from core.qrat import ONE, ZERO, RatQ, hbar, qpow

logger = logging.getLogger(__name__)

Tensor = Tuple[Hashable, ...]
SlotAction = Callable[[Vector, int], Vector]


def _acc(target: Vector, key, c: RatQ):
    v = target.get(key, ZERO) + c
    if v:
        target[key] = v
    else:
        target.pop(key, None)


# ==================== HECKE GENERATOR ====================
def hecke_t(a: int, b: int) -> Dict[Tuple[int, int], RatQ]:
    """
    T(X_a ⊗ X_b) on V ⊗ V.

    X_a⊗X_b -> X_b⊗X_a for a < b, q^{-1} X_a⊗X_a on the diagonal and
    X_b⊗X_a - (q - q^{-1}) X_a⊗X_b for a > b, so (T - q^{-1})(T + q) = 0.
    """
    if a < b:
        return {(b, a): ONE}
    if a == b:
        return {(a, a): qpow(-1)}
    return {(b, a): ONE, (a, b): -hbar()}


def apply_slot(v: Vector, i: int) -> Vector:
    """T acting on tensor positions i, i+1 (1-based) of V^{⊗k}."""
    out: Vector = {}
    for t, c in v.items():
        for (x, y), c2 in hecke_t(t[i - 1], t[i]).items():
            _acc(out, t[:i - 1] + (x, y) + t[i + 1:], c * c2)
    return out


@dataclass(frozen=True)
class HeckeWord:
    """Σ c·T_{w_1}···T_{w_k}; the rightmost generator acts first."""

    terms: Tuple[Tuple[RatQ, Tuple[int, ...]], ...]

    def shifted(self, offset: int) -> "HeckeWord":
        return HeckeWord(tuple((c, tuple(i + offset for i in w)) for c, w in self.terms))

    @property
    def span(self) -> int:
        """Largest generator index used."""
        return max((max(w) for _, w in self.terms if w), default=0)

    def apply(self, v: Vector, action: SlotAction = apply_slot) -> Vector:
        out: Vector = {}
        for c, word in self.terms:
            cur = v
            for i in reversed(word):
                cur = action(cur, i)
            out = vec_add(out, cur, c)
        return out


@lru_cache(maxsize=None)
def psi_word() -> HeckeWord:
    """Ψ = T2T1T3T2 + h(T1T2T1 + T1T3T2) + h²T1T2 on V^{⊗4}."""
    h = hbar()
    return HeckeWord(((ONE, (2, 1, 3, 2)), (h, (1, 2, 1)), (h, (1, 3, 2)), (h * h, (1, 2))))


@lru_cache(maxsize=None)
def psi_inverse_word() -> HeckeWord:
    """Ψ^{-1} = T2T1T3T2 + h(T2T3T2 + T1T3T2) + h²T3T2."""
    h = hbar()
    return HeckeWord(((ONE, (2, 1, 3, 2)), (h, (2, 3, 2)), (h, (1, 3, 2)), (h * h, (3, 2))))


# ==================== PSI ====================
class PsiOperator:
    """Ψ on Y ⊗ Y realised on V^{⊗4}; basis tensors are tuples of letters 1..n."""

    def __init__(self, n: int):
        if n < 2:
            raise InvalidInputError(f"Ψ needs n >= 2, got {n}")
        self.n = n
        self.word = psi_word()
        self.inverse_word = psi_inverse_word()

    def basis(self, k: int) -> List[Tuple[int, ...]]:
        """Basis of V^{⊗k} in lexicographic order."""
        return list(product(range(1, self.n + 1), repeat=k))

    def apply(self, v: Vector, pair_slot: int = 1, inverse: bool = False) -> Vector:
        """Ψ (or Ψ^{-1}) on Y-factors pair_slot, pair_slot + 1 of a tensor in Y^{⊗k}."""
        word = self.inverse_word if inverse else self.word
        return word.shifted(2 * (pair_slot - 1)).apply(v)

    def on_tensor(self, k: int = 2, pair_slot: int = 1, inverse: bool = False) -> LinearMap:
        if not 1 <= pair_slot < k:
            raise InvalidInputError(f"pair slot {pair_slot} outside Y^(x){k}")
        return LinearMap.from_function(self.basis(2 * k), lambda t: self.apply({t: ONE}, pair_slot, inverse))

    def matrix(self) -> LinearMap:
        return self.on_tensor(2, 1)

    def pair_map(self) -> LinearMap:
        """Ψ as a braiding on Y ⊗ Y with basis ((a, b), (c, d))."""
        basis = [((t[0], t[1]), (t[2], t[3])) for t in self.basis(4)]
        images = {}
        for key in basis:
            flat = key[0] + key[1]
            images[key] = {((s[0], s[1]), (s[2], s[3])): c for s, c in self.apply({flat: ONE}).items()}
        return LinearMap(basis, images)


@dataclass
class PsiReport:
    n: int
    psi: PsiOperator
    rank_psi_minus_one: int = 0
    expected_rank: int = 0
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def build_psi(n: int, braid: bool = True) -> PsiReport:
    """
    Construct Ψ and certify its structural properties.

    Args:
        n: dim V
        braid: Also check the braid equation on Y^{⊗3} (n^6 basis tensors)

    Returns:
        PsiReport with the operator and named checks
    """
    psi = PsiOperator(n)
    report = PsiReport(n, psi, expected_rank=n * n * (n * n - 1) // 2)
    basis4 = psi.basis(4)

    cubic, inverse_ok, swap_ok, images = True, True, True, []
    for t in basis4:
        e = {t: ONE}
        pe = psi.apply(e)
        images.append(vec_add(pe, e, -ONE))
        v = vec_add(pe, e, qpow(-2))
        v = vec_add(psi.apply(v), v, qpow(2))
        v = vec_add(psi.apply(v), v, -ONE)
        cubic = cubic and not v
        inverse_ok = inverse_ok and psi.apply(pe, inverse=True) == e and psi.apply(psi.apply(e, inverse=True)) == e
        at_one = {s: c.value_at_one() for s, c in pe.items()}
        at_one = {s: c for s, c in at_one.items() if c}
        swap_ok = swap_ok and at_one == {(t[2], t[3], t[0], t[1]): 1}
    report.checks["(Ψ - 1)(Ψ + q^2)(Ψ + q^-2) = 0"] = cubic
    report.checks["Ψ^-1 is a two-sided inverse"] = inverse_ok
    report.checks["Ψ at q = 1 is the flip of Y ⊗ Y"] = swap_ok

    report.rank_psi_minus_one = LinearMap(basis4, dict(zip(basis4, images))).rank()
    report.checks["rank(Ψ - 1) = dim Λ²Y"] = report.rank_psi_minus_one == report.expected_rank

    if braid:
        ok = True
        for t in psi.basis(6):
            e = {t: ONE}
            lhs = psi.apply(psi.apply(psi.apply(e, 1), 2), 1)
            rhs = psi.apply(psi.apply(psi.apply(e, 2), 1), 2)
            if lhs != rhs:
                ok = False
                logger.warning("braid equation fails on %s", t)
                break
        report.checks["braid equation on Y^(x)3"] = ok
    logger.info("Ψ for n=%d: rank(Ψ-1)=%d, checks %s", n, report.rank_psi_minus_one, report.checks)
    return report


# ==================== BRAIDED FACTORIALS ====================
def flip_braiding(ys: Sequence[Hashable], sign: int = 1) -> LinearMap:
    """y ⊗ y' -> sign · y' ⊗ y."""
    basis = [(a, b) for a in ys for b in ys]
    c = ONE if sign > 0 else -ONE
    return LinearMap(basis, {(a, b): {(b, a): c} for a, b in basis})


def bubble_word(perm: Sequence[int]) -> Tuple[int, ...]:
    """A reduced word in s_1..s_{k-1} obtained by bubble-sorting perm."""
    p = list(perm)
    word: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return tuple(word)


def _pair_action(braiding: LinearMap) -> SlotAction:
    def act(v: Vector, i: int) -> Vector:
        out: Vector = {}
        for t, c in v.items():
            for (x, y), c2 in braiding.images.get((t[i - 1], t[i]), {}).items():
                _acc(out, t[:i - 1] + (x, y) + t[i + 1:], c * c2)
        return out

    return act


@dataclass
class BraidedFactorial:
    k: int
    operator: LinearMap
    kernel_dim: int


def braided_factorial(braiding: LinearMap, k: int) -> BraidedFactorial:
    """
    [k]!_Ψ = Σ_{w ∈ S_k} Ψ_w on Y^{⊗k}.

    Args:
        braiding: Linear map on Y ⊗ Y with basis pairs (y, y')
        k: Tensor power

    Raises:
        InvalidInputError: if the map is not on a full Y ⊗ Y or violates the braid equation
    """
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if any(not isinstance(b, tuple) or len(b) != 2 for b in braiding.basis):
        raise InvalidInputError("braiding basis must consist of pairs (y, y')")
    ys = list(dict.fromkeys([b[0] for b in braiding.basis] + [b[1] for b in braiding.basis]))
    if set(braiding.basis) != {(a, b) for a in ys for b in ys}:
        raise InvalidInputError("braiding must be defined on all of Y ⊗ Y")
    act = _pair_action(braiding)

    for t in product(ys, repeat=3):
        e = {t: ONE}
        if act(act(act(e, 1), 2), 1) != act(act(act(e, 2), 1), 2):
            raise InvalidInputError(f"map violates the braid equation on {t}")

    total = HeckeWord(tuple((ONE, bubble_word(p)) for p in permutations(range(k))))
    basis = list(product(ys, repeat=k))
    op = LinearMap.from_function(basis, lambda t: total.apply({t: ONE}, act))
    result = BraidedFactorial(k, op, op.kernel_dim())
    logger.info("[%d]!_Ψ on %d-dimensional Y: kernel %d", k, len(ys), result.kernel_dim)
    return result

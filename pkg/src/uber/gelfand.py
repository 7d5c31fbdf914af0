"""
Gelfand Model Module
--------------------
The multiplicity-free sum of all simple H(S_n)-modules on the span of the
involutions of S_n, used to certify Hecke-algebra identities for Ψ.

Involutions are tuples of 0-based images; C_w is the basis vector of w and
T_i acts by the four-case rule driven by Coxeter length and ℓ̂, the minimal
length of v with v w v^{-1} = s_1 s_3 ... s_{2k-1}.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.errors import InvalidInputError, VerificationError
from core.linalg import LinearMap, Vector, vec_add
from core.qrat import ONE, ZERO, hbar, qpow
from uber.psi import HeckeWord, psi_inverse_word, psi_word

logger = logging.getLogger(__name__)

Involution = Tuple[int, ...]


def involutions(n: int) -> List[Involution]:
    """All w in S_n with w² = 1."""
    out: List[Involution] = []

    def build(p: List[Optional[int]], i: int):
        if i == n:
            out.append(tuple(p))
            return
        if p[i] is not None:
            build(p, i + 1)
            return
        p[i] = i
        build(p, i + 1)
        for j in range(i + 1, n):
            if p[j] is None:
                p[i], p[j] = j, i
                build(p, i + 1)
                p[j] = None
        p[i] = None

    build([None] * n, 0)
    return out


def two_cycles(w: Involution) -> Tuple[Tuple[int, int], ...]:
    """1-based transpositions (i, j), i < j, of w."""
    return tuple((i + 1, w[i] + 1) for i in range(len(w)) if w[i] > i)


def conjugate(w: Involution, i: int) -> Involution:
    """s_i w s_i with s_i swapping positions i-1 and i."""
    s = list(range(len(w)))
    s[i - 1], s[i] = i, i - 1
    return tuple(s[w[s[x]]] for x in range(len(w)))


def base_involution(n: int, k: int) -> Involution:
    p = list(range(n))
    for r in range(k):
        p[2 * r], p[2 * r + 1] = 2 * r + 1, 2 * r
    return tuple(p)


def hat_lengths(n: int) -> Dict[Involution, int]:
    """ℓ̂ by breadth-first search along conjugation by simple reflections."""
    out: Dict[Involution, int] = {}
    for k in range(n // 2 + 1):
        start = base_involution(n, k)
        out[start] = 0
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for i in range(1, n):
                v = conjugate(w, i)
                if v not in out:
                    out[v] = out[w] + 1
                    queue.append(v)
    return out


class GelfandModel:
    """H(S_n) acting on 𝒱_n = ⊕_k 𝒱_n^{(k)}."""

    def __init__(self, n: int):
        if n < 2:
            raise InvalidInputError(f"Gelfand model needs n >= 2, got {n}")
        self.n = n
        self.hat = hat_lengths(n)
        self.basis: List[Involution] = sorted(involutions(n), key=lambda w: (len(two_cycles(w)), two_cycles(w)))
        self._h = hbar()

    def block(self, k: int) -> List[Involution]:
        return [w for w in self.basis if len(two_cycles(w)) == k]

    def t_image(self, i: int, w: Involution) -> Vector:
        v = conjugate(w, i)
        if v == w:
            return {w: -qpow(1)} if w[i - 1] > w[i] else {w: qpow(-1)}
        if self.hat[w] < self.hat[v]:
            return {v: qpow(1), w: -self._h}
        if self.hat[v] < self.hat[w]:
            return {v: qpow(-1)}
        raise VerificationError(f"ℓ̂ does not separate {two_cycles(w)} and {two_cycles(v)}")

    def act(self, v: Vector, i: int) -> Vector:
        if not 1 <= i < self.n:
            raise InvalidInputError(f"T_{i} is not a generator of H(S_{self.n})")
        out: Vector = {}
        for w, c in v.items():
            out = vec_add(out, self.t_image(i, w), c)
        return out

    def evaluate(self, word: HeckeWord, k: Optional[int] = None) -> LinearMap:
        """A Hecke-algebra element as a linear map on 𝒱_n (or on 𝒱_n^{(k)})."""
        if word.span >= self.n:
            raise InvalidInputError(f"element uses T_{word.span}, outside H(S_{self.n})")
        basis = self.basis if k is None else self.block(k)
        return LinearMap.from_function(basis, lambda w: word.apply({w: ONE}, self.act))


@dataclass
class GelfandReport:
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)
    block_ranks: Dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def gelfand_report(n: int) -> GelfandReport:
    """
    Hecke relations of the model and, when n allows, the identities of Ψ.

    Checks the quadratic and braid relations of the T_i; for n >= 4 the cubic
    minimal polynomial of Ψ and its inverse, with rank(Ψ - 1) per block; for
    n >= 6 the braid equation of Ψ against its copy shifted by two slots.
    """
    model = GelfandModel(n)
    report = GelfandReport(n)
    basis = model.basis
    one = LinearMap.identity(basis)

    def gen(i: int) -> LinearMap:
        return model.evaluate(HeckeWord(((ONE, (i,)),)))

    gens = {i: gen(i) for i in range(1, n)}
    quad = all(
        ((gens[i] - one.scaled(qpow(-1))) @ (gens[i] + one.scaled(qpow(1)))).is_zero() for i in gens
    )
    report.checks["(T_i - q^-1)(T_i + q) = 0"] = quad
    braid = True
    for i in range(1, n - 1):
        braid = braid and gens[i] @ gens[i + 1] @ gens[i] == gens[i + 1] @ gens[i] @ gens[i + 1]
    for i in range(1, n):
        for j in range(i + 2, n):
            braid = braid and gens[i] @ gens[j] == gens[j] @ gens[i]
    report.checks["braid relations of the T_i"] = braid

    if n >= 4:
        psi = model.evaluate(psi_word())
        psi_inv = model.evaluate(psi_inverse_word())
        cubic = (psi - one) @ (psi + one.scaled(qpow(2))) @ (psi + one.scaled(qpow(-2)))
        report.checks["(Ψ - 1)(Ψ + q^2)(Ψ + q^-2) = 0"] = cubic.is_zero()
        report.checks["Ψ Ψ^-1 = 1"] = psi @ psi_inv == one
        for k in range(n // 2 + 1):
            blk = model.evaluate(psi_word(), k)
            report.block_ranks[k] = (blk - LinearMap.identity(blk.basis)).rank()
    if n >= 6:
        p1 = model.evaluate(psi_word())
        p2 = model.evaluate(psi_word().shifted(2))
        report.checks["Ψ braid equation in H(S_6)"] = p1 @ p2 @ p1 == p2 @ p1 @ p2
    logger.info("Gelfand model n=%d: %d basis vectors, ranks %s", n, len(basis), report.block_ranks)
    return report


def psi_block_matrix(k: int) -> List[List]:
    """Matrix of Ψ on 𝒱_4^{(k)}; row r holds the image of the r-th basis vector."""
    return GelfandModel(4).evaluate(psi_word(), k).matrix()


def printed_block_matrix() -> List[List]:
    """The published matrix of Ψ on 𝒱_4^{(1)} in the basis C_(i,j), i < j, lexicographic."""
    h, z = hbar(), ZERO
    q = qpow
    return [
        [z, q(3) * h, -q(3) * h, z, z, q(4)],
        [z, -q(2), z, z, z, z],
        [-q(-3) * h, -q(-2) * h * h, -h * h, -q(-2), z, q(1) * h],
        [z, z, -q(2), z, z, z],
        [-q(-3) * h, -q(-2) * h * h, -h * h, z, -q(-2), -q(-1) * h],
        [q(-4), q(-3) * h, q(-1) * h, z, z, z],
    ]


def printed_block_orientation() -> str:
    """
    "rows" if the computed block equals the published matrix with images as
    rows, "columns" if it equals it with images as columns, else "none".
    """
    printed = printed_block_matrix()
    block = GelfandModel(4).evaluate(psi_word(), 1)
    if block.matrix(row_major_images=True) == printed:
        return "rows"
    if block.matrix(row_major_images=False) == printed:
        return "columns"
    return "none"

"""
Cartan Data Module
------------------
Cartan data, admissible diagram automorphisms, folding and Weyl group tools.

Features:
- Named built-ins (A_n, B_n, C_n, D_n, G_2, the centre-0 D4 and products)
- Diagram automorphisms parsed from cycle notation "(1 2 3)"
- Folded symmetrized Cartan matrix C^σ, classical folded matrix A' and the
  Langlands-dual datum of g^σ, with C^σ = D^σ (A')^T checked exactly
- Reflections, reduced-word tests, longest elements, reduced-word enumeration
- Hat-lifts of reduced words along orbits
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import InvalidInputError, VerificationError

logger = logging.getLogger(__name__)

WeylWord = Tuple[int, ...]


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix with symmetrizers; a_ij as in s_i(α_j) = α_j - a_ij α_i."""

    labels: Tuple[str, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        a = self.matrix
        if a.shape != (n, n) or len(self.d) != n:
            raise InvalidInputError(f"Cartan datum {self.name!r} has inconsistent sizes")
        if len(set(self.labels)) != n:
            raise InvalidInputError(f"duplicate labels in {self.labels}")
        for i in range(n):
            if a[i, i] != 2 or self.d[i] <= 0:
                raise InvalidInputError(f"bad diagonal or symmetrizer at node {self.labels[i]}")
            for j in range(n):
                if i != j and a[i, j] > 0:
                    raise InvalidInputError("off-diagonal Cartan entries must be <= 0")
        if not np.array_equal(self.symmetrized, self.symmetrized.T):
            raise InvalidInputError(f"d_i a_ij is not symmetric for {self.name!r}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64).reshape(len(self.labels), len(self.labels))

    @property
    def symmetrized(self) -> np.ndarray:
        """C = (d_i a_ij) = ((α_i, α_j))."""
        return np.diag(np.array(self.d, dtype=np.int64)) @ self.matrix

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.rank:
                return int(label)
            raise InvalidInputError(f"node index {label} out of range")
        if label not in self.labels:
            raise InvalidInputError(f"unknown node {label!r} in {self.name or self.labels}")
        return self.labels.index(label)

    def is_simply_laced(self) -> bool:
        return all(x == 1 for x in self.d)

    def components(self) -> List[List[int]]:
        """Connected components of the Dynkin diagram, each sorted, in order of first node."""
        a = self.matrix
        seen, comps = set(), []
        for start in range(self.rank):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.rank):
                    if j not in seen and a[i, j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def restrict(self, nodes: Sequence[int]) -> "CartanDatum":
        a = self.matrix
        return CartanDatum(
            tuple(self.labels[i] for i in nodes),
            tuple(tuple(int(a[i, j]) for j in nodes) for i in nodes),
            tuple(self.d[i] for i in nodes),
            name=f"{self.name}|{','.join(self.labels[i] for i in nodes)}",
        )


def _from_matrix(name: str, labels: Sequence[str], a: np.ndarray, d: Sequence[int]) -> CartanDatum:
    return CartanDatum(tuple(labels), tuple(tuple(int(x) for x in row) for row in a), tuple(d), name=name)


def _chain(n: int) -> np.ndarray:
    a = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    return a


def type_a(n: int) -> CartanDatum:
    if n < 1:
        raise InvalidInputError("A_n needs n >= 1")
    return _from_matrix(f"A{n}", [str(i) for i in range(1, n + 1)], _chain(n), [1] * n)


def type_b(n: int) -> CartanDatum:
    if n < 2:
        raise InvalidInputError("B_n needs n >= 2")
    a = _chain(n)
    a[n - 1, n - 2] = -2
    return _from_matrix(f"B{n}", [str(i) for i in range(1, n + 1)], a, [2] * (n - 1) + [1])


def type_c(n: int) -> CartanDatum:
    """α_n long; sp_{2n}."""
    if n < 2:
        raise InvalidInputError("C_n needs n >= 2")
    a = _chain(n)
    a[n - 2, n - 1] = -2
    return _from_matrix(f"C{n}", [str(i) for i in range(1, n + 1)], a, [1] * (n - 1) + [2])


def type_d(n: int, labels: Optional[Sequence[str]] = None) -> CartanDatum:
    """Nodes 1..n with n-1 and n attached to n-2; D3 is A3 with node 1 in the middle."""
    if n < 3:
        raise InvalidInputError("D_n needs n >= 3")
    a = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 2):
        a[i, i + 1] = a[i + 1, i] = -1
    a[n - 3, n - 1] = a[n - 1, n - 3] = -1
    return _from_matrix(f"D{n}", labels or [str(i) for i in range(1, n + 1)], a, [1] * n)


def type_d4_centered() -> CartanDatum:
    """so_8 with centre 0 and outer nodes 1, 2, 3."""
    a = 2 * np.eye(4, dtype=np.int64)
    for j in (1, 2, 3):
        a[0, j] = a[j, 0] = -1
    return _from_matrix("D4", ["0", "1", "2", "3"], a, [1] * 4)


def type_g2() -> CartanDatum:
    """α_1 short, α_2 long."""
    return _from_matrix("G2", ["1", "2"], np.array([[2, -3], [-1, 2]]), [1, 3])


def product(*data: CartanDatum) -> CartanDatum:
    """Disjoint union; the k-th factor's labels get k primes."""
    labels, d, blocks = [], [], []
    for k, datum in enumerate(data):
        labels.extend(f"{lab}{chr(39) * k}" for lab in datum.labels)
        d.extend(datum.d)
        blocks.append(datum.matrix)
    n = len(labels)
    a = np.zeros((n, n), dtype=np.int64)
    off = 0
    for blk in blocks:
        m = blk.shape[0]
        a[off:off + m, off:off + m] = blk
        off += m
    return _from_matrix("x".join(dt.name for dt in data), labels, a, d)


_SIMPLE = re.compile(r"^([ABCDG])(\d+)$")


def parse_cartan(name: str) -> CartanDatum:
    """
    Load a named built-in.

    Args:
        name: "A3", "C2", "D5", "D4" (centre 0), "G2" or products such as "A2xA2xA2"

    Returns:
        CartanDatum
    """
    text = name.strip()
    if "x" in text:
        return product(*(parse_cartan(part) for part in text.split("x")))
    m = _SIMPLE.match(text)
    if not m:
        raise InvalidInputError(f"unknown Cartan type {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        return type_a(n)
    if kind == "B":
        return type_b(n)
    if kind == "C":
        return type_c(n)
    if kind == "D":
        return type_d4_centered() if n == 4 else type_d(n)
    if kind == "G" and n == 2:
        return type_g2()
    raise InvalidInputError(f"unknown Cartan type {name!r}")


def datum_from_entries(labels: Sequence[str], entries: Sequence[Sequence[int]], d: Optional[Sequence[int]] = None) -> CartanDatum:
    """Explicit matrix entry lists; symmetrizers default to all ones."""
    return _from_matrix("custom", labels, np.array(entries, dtype=np.int64), d or [1] * len(labels))


# ==================== DIAGRAM AUTOMORPHISMS ====================
@dataclass(frozen=True)
class DiagramAut:
    """Permutation σ of the node indices."""

    perm: Tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> "DiagramAut":
        return cls(tuple(range(rank)))

    @classmethod
    def parse(cls, text: str, datum: CartanDatum) -> "DiagramAut":
        """Cycle notation on node labels, e.g. "(1 2 3)" or "(1 1')(2 2')"; "" or "()" is the identity."""
        perm = list(range(datum.rank))
        for cycle in re.findall(r"\(([^()]*)\)", text):
            nodes = [datum.index(tok) for tok in cycle.replace(",", " ").split()]
            for a, b in zip(nodes, nodes[1:] + nodes[:1]):
                perm[a] = b
        if sorted(perm) != list(range(datum.rank)):
            raise InvalidInputError(f"{text!r} is not a permutation of the nodes")
        return cls(tuple(perm))

    def orbits(self) -> List[List[int]]:
        """Orbits sorted internally and by smallest node."""
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self.perm[j]
            out.append(sorted(orb))
        return sorted(out, key=lambda o: o[0])

    def orbit_of(self) -> Dict[int, int]:
        return {i: r for r, orb in enumerate(self.orbits()) for i in orb}

    def check(self, datum: CartanDatum):
        """Raise unless σ is a diagram automorphism with no edges inside orbits."""
        a = datum.matrix
        n = datum.rank
        if len(self.perm) != n:
            raise InvalidInputError("automorphism size does not match the datum")
        for i in range(n):
            for j in range(n):
                if a[self.perm[i], self.perm[j]] != a[i, j]:
                    raise InvalidInputError(f"σ does not preserve the Cartan matrix at ({i}, {j})")
        for orb in self.orbits():
            for i in orb:
                for j in orb:
                    if i != j and a[i, j] != 0:
                        raise InvalidInputError(
                            f"σ is not admissible: nodes {datum.labels[i]} and {datum.labels[j]} share an orbit and an edge"
                        )


@dataclass
class Folding:
    """Cartan datum with an admissible automorphism and everything derived from it."""

    datum: CartanDatum
    aut: DiagramAut
    orbits: List[List[int]]
    c_sigma: np.ndarray
    a_prime: np.ndarray
    d_sigma: np.ndarray
    folded: CartanDatum
    notes: Dict[str, str] = field(default_factory=dict)

    def lift_node(self, r: int) -> List[int]:
        return self.orbits[r]


def fold_cartan(datum: CartanDatum, aut: DiagramAut) -> Folding:
    """
    Fold a simply-laced datum along an admissible automorphism.

    Args:
        datum: Simply-laced Cartan datum
        aut: Admissible diagram automorphism

    Returns:
        Folding with C^σ, A', D^σ and the datum of (g^σ)^∨

    Raises:
        InvalidInputError: for non-simply-laced data or non-admissible σ
    """
    if not datum.is_simply_laced():
        raise InvalidInputError(f"{datum.name} is not simply laced")
    aut.check(datum)
    orbits = aut.orbits()
    c = datum.symmetrized
    a = datum.matrix
    m = len(orbits)
    c_sigma = np.array([[int(c[np.ix_(orbits[r], orbits[s])].sum()) for s in range(m)] for r in range(m)], dtype=np.int64)
    # a'_{r,s} = Σ_{i ∈ O_r} a_{i,j} for any j ∈ O_s
    a_prime = np.array([[int(a[orbits[r], orbits[s][0]].sum()) for s in range(m)] for r in range(m)], dtype=np.int64)
    d_sigma = np.diag([len(orb) for orb in orbits]).astype(np.int64)
    if not np.array_equal(c_sigma, d_sigma @ a_prime.T):
        raise VerificationError("C^σ differs from D^σ (A')^T", witness=(c_sigma.tolist(), a_prime.tolist()))
    d = [int(c_sigma[r, r]) // 2 for r in range(m)]
    folded_a = np.array([[2 * int(c_sigma[r, s]) // int(c_sigma[r, r]) for s in range(m)] for r in range(m)], dtype=np.int64)
    labels = [datum.labels[orb[0]] for orb in orbits]
    folded = _from_matrix(f"{datum.name}^sigma", labels, folded_a, d)
    logger.debug("folded %s into %s", datum.name, folded_a.tolist())
    return Folding(datum, aut, orbits, c_sigma, a_prime, d_sigma, folded)


# ==================== WEYL GROUP ====================
class WeylGroup:
    """Weyl group of a finite-type datum acting on root-lattice coordinates."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.a = datum.matrix
        self.n = datum.rank
        self._positive: Optional[List[Tuple[int, ...]]] = None
        if len(self.positive_roots()) > 200:
            raise InvalidInputError("Weyl group tools are limited to small finite types")

    def reflect(self, i: int, v: Sequence[int]) -> Tuple[int, ...]:
        """s_i(v) = v - (Σ_j a_ij v_j) α_i."""
        v = np.array(v, dtype=np.int64)
        out = v.copy()
        out[i] -= int(self.a[i] @ v)
        return tuple(int(x) for x in out)

    def act(self, word: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
        """s_{i_1} ... s_{i_k} (v); the rightmost reflection acts first."""
        out = tuple(v)
        for i in reversed(word):
            out = self.reflect(i, out)
        return out

    def element(self, word: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        """Images of the simple roots, the faithful representation of w."""
        return tuple(self.act(word, self.simple(j)) for j in range(self.n))

    def simple(self, i: int) -> Tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.n))

    @staticmethod
    def is_positive(v: Sequence[int]) -> bool:
        return all(x >= 0 for x in v) and any(x > 0 for x in v)

    def positive_roots(self) -> List[Tuple[int, ...]]:
        if self._positive is None:
            found = {self.simple(i) for i in range(self.n)}
            frontier = list(found)
            while frontier:
                nxt = []
                for root in frontier:
                    for i in range(self.n):
                        r = self.reflect(i, root)
                        if self.is_positive(r) and r not in found:
                            if len(found) > 400:
                                raise InvalidInputError("datum is not of finite type")
                            found.add(r)
                            nxt.append(r)
                frontier = nxt
            self._positive = sorted(found, key=lambda r: (sum(r), r))
        return self._positive

    def length(self, word: Sequence[int]) -> int:
        """ℓ(w) as the number of positive roots sent to negative roots."""
        return sum(1 for r in self.positive_roots() if not self.is_positive(self.act(word, r)))

    def is_reduced(self, word: Sequence[int]) -> bool:
        for k in range(len(word)):
            if not self.is_positive(self.act(word[:k], self.simple(word[k]))):
                return False
        return True

    def longest_element(self) -> WeylWord:
        """Greedy ascent: append i while w(α_i) is positive."""
        word: List[int] = []
        while True:
            for i in range(self.n):
                if self.is_positive(self.act(word, self.simple(i))):
                    word.append(i)
                    break
            else:
                return tuple(word)

    def all_reduced_words(self, word: Sequence[int]) -> List[WeylWord]:
        """R(w) for the element represented by word, sorted."""
        if self.n > 4:
            raise InvalidInputError("reduced-word enumeration is limited to rank <= 4")
        return sorted(self._reduced_words(self.element(word)))

    def _reduced_words(self, elem) -> Tuple[WeylWord, ...]:
        return _reduced_words_cached(self.datum, elem)


@lru_cache(maxsize=None)
def _reduced_words_cached(datum: CartanDatum, elem) -> Tuple[WeylWord, ...]:
    n = datum.rank
    a = datum.matrix
    if all(elem[j] == tuple(1 if k == j else 0 for k in range(n)) for j in range(n)):
        return ((),)
    out: List[WeylWord] = []
    for i in range(n):
        if any(x < 0 for x in elem[i]):
            # w s_i has images w(s_i(α_j)) = w(α_j) - a_ij w(α_i)
            shorter = tuple(
                tuple(elem[j][k] - int(a[i, j]) * elem[i][k] for k in range(n)) for j in range(n)
            )
            out.extend(w + (i,) for w in _reduced_words_cached(datum, shorter))
    return tuple(out)


def parse_word(text: str, datum: CartanDatum, positional: bool = True) -> WeylWord:
    """
    Parse a word such as "121" or "1,2,1".

    Args:
        text: Digits (1-based node positions) or comma separated labels
        datum: Datum the word lives in
        positional: Read tokens as 1-based positions rather than labels
    """
    tokens = text.split(",") if "," in text else list(text.strip())
    out = []
    for tok in tokens:
        tok = tok.strip()
        if positional:
            k = int(tok) - 1
            if not 0 <= k < datum.rank:
                raise InvalidInputError(f"node position {tok} out of range")
            out.append(k)
        else:
            out.append(datum.index(tok))
    return tuple(out)


def hat_lift(word: Sequence[int], folding: Folding) -> WeylWord:
    """
    Replace each folded node by its orbit (ambient order).

    Raises:
        InvalidInputError: if the folded word is not reduced
        VerificationError: if the lift fails to be reduced or to realize ŝ_r
    """
    small = WeylGroup(folding.folded)
    if not small.is_reduced(word):
        raise InvalidInputError(f"word {tuple(word)} is not reduced in {folding.folded.name}")
    lifted: List[int] = []
    for r in word:
        lifted.extend(folding.orbits[r])
    big = WeylGroup(folding.datum)
    if not big.is_reduced(lifted):
        raise VerificationError("lifted word is not reduced", witness=tuple(lifted))
    # ŵ(ô_s) = Σ_t w_{ts} ô_t with ô_s the orbit sum of simple roots
    m = len(folding.orbits)
    for s in range(m):
        orbit_sum = [0] * folding.datum.rank
        for i in folding.orbits[s]:
            orbit_sum[i] = 1
        image = big.act(lifted, orbit_sum)
        small_image = small.act(word, small.simple(s))
        expected = [0] * folding.datum.rank
        for t in range(m):
            for i in folding.orbits[t]:
                expected[i] += small_image[t]
        if list(image) != expected:
            raise VerificationError("ŝ_r does not realize s_r on orbit sums", witness=(tuple(word), s))
    return tuple(lifted)


def maps_simple_to_simple(weyl: WeylGroup, word: Sequence[int], i: int) -> Optional[int]:
    """j with w(α_i) = α_j, if any."""
    img = weyl.act(word, weyl.simple(i))
    for j in range(weyl.n):
        if img == weyl.simple(j):
            return j
    return None

"""
Free Algebra Module
-------------------
Graded free associative algebra over Q(q) on a finite ordered generator set.

Features:
- GeneratorSet with root-lattice weights and a symmetric pairing
- Interned words and FreeElement terms with canonical (degree, lex) order
- q-commutators, adjoint actions (left and right) and their divided powers
- Canonical text form "(coeff)*E1.E2.E1 + ..." with a bit-exact parser
- Substitution of generators into any ring supporting +, * and scalars
"""

import threading
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import InvalidInputError
from core.qrat import ONE, ZERO, RatQ, as_ratq, qfactorial, qpow
from core.qrat import _matching_paren, _top_level_index

Word = Tuple[int, ...]
Weight = Tuple[int, ...]

_INTERN: Dict[Word, Word] = {}
_INTERN_LOCK = threading.Lock()


def intern_word(letters: Iterable[int]) -> Word:
    """Return the shared instance of a word; insert-or-get is lock protected."""
    key = tuple(letters)
    found = _INTERN.get(key)
    if found is not None:
        return found
    with _INTERN_LOCK:
        return _INTERN.setdefault(key, key)


EMPTY: Word = intern_word(())


def word_key(word: Word) -> Tuple[int, Word]:
    """Canonical monomial order: degree first, then lexicographic by generator order."""
    return (len(word), word)


class GeneratorSet:
    """Ordered generators with weights in Z^I and a pairing on Z^I."""

    def __init__(self, names: Sequence[str], weights: Sequence[Sequence[int]], pairing: Sequence[Sequence[int]]):
        """
        Initialize a generator set.

        Args:
            names: Generator labels in their fixed total order
            weights: One integer vector per generator
            pairing: Symmetric integer matrix on the lattice
        """
        self.names: Tuple[str, ...] = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise InvalidInputError(f"duplicate generator names in {self.names}")
        self.pairing = np.array(pairing, dtype=np.int64).reshape(len(pairing), -1) if len(pairing) else np.zeros((0, 0), dtype=np.int64)
        if not np.array_equal(self.pairing, self.pairing.T):
            raise InvalidInputError("pairing matrix must be symmetric")
        rank = self.pairing.shape[0]
        self.weights: Tuple[Weight, ...] = tuple(tuple(int(x) for x in w) for w in weights)
        if len(self.weights) != len(self.names) or any(len(w) != rank for w in self.weights):
            raise InvalidInputError("every generator needs a weight of the lattice rank")
        self.index = {name: i for i, name in enumerate(self.names)}
        w = np.array(self.weights, dtype=np.int64).reshape(len(self.names), rank)
        self._letter_pair = (w @ self.pairing @ w.T).tolist() if len(self.names) else []
        self._pairing_rows = self.pairing.tolist()

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, GeneratorSet)
            and self.names == other.names
            and self.weights == other.weights
            and np.array_equal(self.pairing, other.pairing)
        )

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    @property
    def rank(self) -> int:
        return self.pairing.shape[0]

    def lookup(self, label: Union[str, int]) -> int:
        if isinstance(label, int):
            if not 0 <= label < len(self.names):
                raise InvalidInputError(f"generator index {label} out of range")
            return label
        if label not in self.index:
            raise InvalidInputError(f"unknown generator {label!r}")
        return self.index[label]

    def weight_of(self, word: Word) -> Weight:
        acc = [0] * self.rank
        for x in word:
            for k, v in enumerate(self.weights[x]):
                acc[k] += v
        return tuple(acc)

    def pair(self, a: Sequence[int], b: Sequence[int]) -> int:
        rows = self._pairing_rows
        return sum(a[i] * rows[i][j] * b[j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j])

    def letter_pair(self, x: int, y: int) -> int:
        return self._letter_pair[x][y]

    def letter_word_pair(self, x: int, word: Word) -> int:
        row = self._letter_pair[x]
        return sum(row[y] for y in word)

    def gen(self, label: Union[str, int]) -> "FreeElement":
        return FreeElement(self, {intern_word((self.lookup(label),)): ONE})

    def gens(self) -> List["FreeElement"]:
        return [self.gen(i) for i in range(len(self.names))]

    def one(self) -> "FreeElement":
        return FreeElement(self, {EMPTY: ONE})

    def zero(self) -> "FreeElement":
        return FreeElement(self, {})

    def scalar(self, c) -> "FreeElement":
        c = as_ratq(c)
        return FreeElement(self, {EMPTY: c} if c else {})

    def word(self, labels: Iterable[Union[str, int]]) -> "FreeElement":
        return FreeElement(self, {intern_word(self.lookup(x) for x in labels): ONE})

    def word_text(self, word: Word) -> str:
        return ".".join(self.names[x] for x in word) if word else "1"


class FreeElement:
    """Finite linear combination of words; never stores zero coefficients."""

    __slots__ = ("gens", "terms", "_weights")

    def __init__(self, gens: GeneratorSet, terms: Dict[Word, RatQ]):
        self.gens = gens
        self.terms = {w: c for w, c in terms.items() if c}
        self._weights = None

    # ==================== ARITHMETIC ====================
    def _check(self, other: "FreeElement"):
        if other.gens is not self.gens and other.gens != self.gens:
            raise InvalidInputError("generator-set mismatch")

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            other = self.gens.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElement(self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement(self.gens, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            other = self.gens.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            c = as_ratq(other)
            if not c:
                return self.gens.zero()
            return FreeElement(self.gens, {w: c * v for w, v in self.terms.items()})
        self._check(other)
        out: Dict[Word, RatQ] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = intern_word(w1 + w2)
                v = out.get(w, ZERO) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return FreeElement(self.gens, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * as_ratq(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInputError("negative power of a free element")
        result = self.gens.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeElement):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, RatQ)):
            return self == self.gens.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ==================== GRADING ====================
    def weights(self) -> frozenset:
        if self._weights is None:
            self._weights = frozenset(self.gens.weight_of(w) for w in self.terms)
        return self._weights

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> Weight:
        """Weight of a homogeneous element (zero vector for 0)."""
        ws = self.weights()
        if len(ws) > 1:
            raise InvalidInputError("element is not homogeneous")
        return next(iter(ws)) if ws else tuple([0] * self.gens.rank)

    def homogeneous_parts(self) -> Dict[Weight, "FreeElement"]:
        parts: Dict[Weight, Dict[Word, RatQ]] = {}
        for w, c in self.terms.items():
            parts.setdefault(self.gens.weight_of(w), {})[w] = c
        return {k: FreeElement(self.gens, v) for k, v in parts.items()}

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self, reverse: bool = True) -> List[Tuple[Word, RatQ]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=reverse)

    def leading(self) -> Tuple[Word, RatQ]:
        if not self.terms:
            raise InvalidInputError("zero element has no leading word")
        w = max(self.terms, key=word_key)
        return w, self.terms[w]

    def coefficient(self, word: Sequence) -> RatQ:
        key = intern_word(self.gens.lookup(x) for x in word)
        return self.terms.get(key, ZERO)

    # ==================== STRUCTURE MAPS ====================
    def star(self) -> "FreeElement":
        """Anti-automorphism fixing every generator (word reversal)."""
        return FreeElement(self.gens, {intern_word(reversed(w)): c for w, c in self.terms.items()})

    def relabel(self, mapping: Dict[int, int], gens: Optional[GeneratorSet] = None) -> "FreeElement":
        """Apply a letter permutation (e.g. a diagram automorphism)."""
        target = gens or self.gens
        return FreeElement(target, {intern_word(mapping.get(x, x) for x in w): c for w, c in self.terms.items()})

    def substitute(self, images: Sequence, one):
        """
        Evaluate in another ring by sending generator k to images[k].

        Args:
            images: One target element per generator
            one: Unit of the target ring

        Returns:
            Σ c·images[w_1]···images[w_k]
        """
        cache: Dict[Word, object] = {EMPTY: one}

        def value(word: Word):
            if word not in cache:
                cache[word] = value(word[:-1]) * images[word[-1]]
            return cache[word]

        result = one * ZERO
        for w, c in self.sorted_terms(reverse=False):
            result = result + value(w) * c
        return result

    # ==================== TEXT FORM ====================
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.gens.word_text(w)}" for w, c in self.sorted_terms())

    __str__ = to_text

    def __repr__(self) -> str:
        return f"FreeElement({self.to_text()!r})"

    @staticmethod
    def parse(gens: GeneratorSet, text: str) -> "FreeElement":
        """Inverse of to_text."""
        s = text.strip()
        if s == "0":
            return gens.zero()
        out = gens.zero()
        for chunk in _split_top_level(s, " + "):
            chunk = chunk.strip()
            if not chunk.startswith("("):
                raise InvalidInputError(f"term {chunk!r} must start with a parenthesized coefficient")
            close = _matching_paren(chunk, 0)
            coeff = RatQ.parse(chunk[1:close])
            rest = chunk[close + 1:]
            if not rest.startswith("*"):
                raise InvalidInputError(f"term {chunk!r} is missing '*word'")
            body = rest[1:]
            letters = [] if body == "1" else body.split(".")
            out = out + gens.word(letters) * coeff
        return out


def _split_top_level(s: str, sep: str) -> List[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(s):
        c = s[i]
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif depth == 0 and s.startswith(sep, i):
            parts.append(s[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(s[start:])
    return parts


# ==================== BRACKETS ====================
def multiply(a: FreeElement, b: FreeElement) -> FreeElement:
    return a * b


def qcommutator(a, b, v=ONE):
    """[a, b]_v = ab - v ba, for any ring elements supporting * and scalars."""
    return a * b - (b * a) * as_ratq(v)


def _gen_weight(gens: GeneratorSet, i: int) -> Weight:
    return gens.weights[i]


def gen_d(gens: GeneratorSet, i: int) -> int:
    """d_i with (α_i, α_i) = 2 d_i for a generator of simple-root weight."""
    return gens.letter_pair(i, i) // 2


def ad_action(i: Union[str, int], u: FreeElement, side: str = "left") -> FreeElement:
    """
    Adjoint action of a generator on a homogeneous element.

    Args:
        i: Generator label or index
        u: Homogeneous element of weight γ
        side: "left" for ad E_i, "right" for ad* E_i

    Returns:
        left:  E_i u - q^{(α_i,γ)} u E_i
        right: u E_i - q^{(α_i,γ)} E_i u
    """
    gens = u.gens
    k = gens.lookup(i)
    if not u.is_homogeneous():
        raise InvalidInputError("ad action needs a homogeneous element")
    e = gens.gen(k)
    v = qpow(gens.pair(gens.weights[k], u.weight()))
    if side == "left":
        return e * u - (u * e) * v
    if side == "right":
        return u * e - (e * u) * v
    raise InvalidInputError(f"side must be 'left' or 'right', got {side!r}")


def ad_power(i: Union[str, int], u: FreeElement, r: int, side: str = "left", divided: bool = True) -> FreeElement:
    """(ad E_i)^{(r)}(u), or the plain r-th power when divided is False."""
    gens = u.gens
    k = gens.lookup(i)
    out = u
    for _ in range(r):
        out = ad_action(k, out, side)
    if divided and r > 1:
        out = out / qfactorial(r, gen_d(gens, k))
    return out


def ad_power_of_product(i: Union[str, int], r: int, a: FreeElement, b: FreeElement) -> FreeElement:
    """E_i^{(r)}(ab) = Σ_p q_i^{p(r-p)} v_i^p E_i^{(r-p)}(a) E_i^{(p)}(b) with v_i = q^{(α_i, wt a)}."""
    gens = a.gens
    k = gens.lookup(i)
    d = gen_d(gens, k)
    vi = gens.pair(gens.weights[k], a.weight())
    out = gens.zero()
    for p in range(r + 1):
        coeff = qpow(d * p * (r - p) + vi * p)
        out = out + ad_power(k, a, r - p) * ad_power(k, b, p) * coeff
    return out


def divided_power(gens: GeneratorSet, i: Union[str, int], r: int) -> FreeElement:
    k = gens.lookup(i)
    return gens.gen(k) ** r / qfactorial(r, gen_d(gens, k))


def chevalley_generators(names: Sequence[str], pairing: Sequence[Sequence[int]]) -> GeneratorSet:
    """Generators E_i of simple-root weight e_i."""
    n = len(names)
    return GeneratorSet(names, [[1 if j == i else 0 for j in range(n)] for i in range(n)], pairing)


def linear_combination(gens: GeneratorSet, pairs: Iterable[Tuple[RatQ, FreeElement]]) -> FreeElement:
    out = gens.zero()
    for c, x in pairs:
        out = out + x * c
    return out


def map_terms(u: FreeElement, fn: Callable[[Word, RatQ], Dict[Word, RatQ]]) -> FreeElement:
    out: Dict[Word, RatQ] = {}
    for w, c in u.terms.items():
        for w2, c2 in fn(w, c).items():
            v = out.get(w2, ZERO) + c2
            if v:
                out[w2] = v
            else:
                out.pop(w2, None)
    return FreeElement(u.gens, out)

"""
Presentation Module
-------------------
Ordered generators with lowering rewrite rules X'X -> Σ c·M.

Features:
- Monomial order: weighted degree first, then lexicographic by generator order
- Rule validation (lowering property, invertible XX' coefficient, completeness)
- Leftmost-innermost normal forms with a per-presentation memo table
- Ordered-monomial enumeration and graded dimension counts
- Construction from relation elements and a bit-exact text serialization
"""

import logging
import threading
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.errors import InvalidInputError
from core.freealg import EMPTY, FreeElement, GeneratorSet, Word, intern_word
from core.qrat import ONE, ZERO, RatQ

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Presentation:
    """Rules keyed by (X, X') with X < X'; the rule rewrites the word X'X."""

    def __init__(
        self,
        gens: GeneratorSet,
        rules: Dict[Pair, FreeElement],
        degrees: Optional[Sequence[int]] = None,
        name: str = "",
        partial: bool = False,
    ):
        """
        Initialize a presentation.

        Args:
            gens: Totally ordered generators
            rules: (x, y) with x < y -> normal form of the word (y, x)
            degrees: Positive degree per generator (defaults to 1)
            name: Identifier used in reports
            partial: Allow missing rules (incomplete relation lists)
        """
        self.gens = gens
        self.name = name
        self.partial = partial
        self.degrees: Tuple[int, ...] = tuple(degrees) if degrees is not None else tuple([1] * len(gens))
        if len(self.degrees) != len(gens) or any(d <= 0 for d in self.degrees):
            raise InvalidInputError("every generator needs a positive degree")
        self.rules: Dict[Pair, FreeElement] = {}
        for (x, y), rhs in rules.items():
            self._add_rule(x, y, rhs)
        if not partial:
            missing = [(x, y) for y in range(len(gens)) for x in range(y) if (x, y) not in self.rules]
            if missing:
                x, y = missing[0]
                raise InvalidInputError(
                    f"{name or 'presentation'}: no rule for {gens.names[y]}.{gens.names[x]} ({len(missing)} pairs missing)"
                )
        self._nf_cache: Dict[Word, Dict[Word, RatQ]] = {}
        self._lock = threading.Lock()

    # ==================== ORDER ====================
    def degree_of(self, word: Word) -> int:
        return sum(self.degrees[x] for x in word)

    def key(self, word: Word) -> Tuple[int, Word]:
        return (self.degree_of(word), word)

    @staticmethod
    def is_ordered(word: Word) -> bool:
        return all(word[k] <= word[k + 1] for k in range(len(word) - 1))

    def _add_rule(self, x: int, y: int, rhs: FreeElement):
        if not 0 <= x < y < len(self.gens):
            raise InvalidInputError(f"rule pair ({x}, {y}) must satisfy X < X'")
        if rhs.gens != self.gens:
            raise InvalidInputError("rule right-hand side over a different generator set")
        lhs = intern_word((y, x))
        top = self.key(lhs)
        for w in rhs.terms:
            if self.key(w) >= top:
                raise InvalidInputError(
                    f"rule for {self.gens.word_text(lhs)} does not lower: contains {self.gens.word_text(w)}"
                )
        if not self.partial and not rhs.terms.get(intern_word((x, y))):
            raise InvalidInputError(f"rule for {self.gens.word_text(lhs)} has no invertible XX' coefficient")
        self.rules[(x, y)] = rhs

    def rule(self, upper: int, lower: int) -> Optional[FreeElement]:
        """Right side for the out-of-order word (upper, lower)."""
        return self.rules.get((lower, upper))

    # ==================== NORMAL FORMS ====================
    def _nf_word(self, word: Word) -> Dict[Word, RatQ]:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        k = next((i for i in range(len(word) - 1) if word[i] > word[i + 1]), None)
        if k is None:
            result = {word: ONE}
        else:
            rhs = self.rule(word[k], word[k + 1])
            if rhs is None:
                result = {word: ONE}
                # a partial presentation leaves this pair; continue right of it
                tail = self._nf_word(word[k + 1:])
                if tail != {word[k + 1:]: ONE}:
                    result = {}
                    for w, c in tail.items():
                        _accumulate(result, intern_word(word[:k + 1] + w), c)
            else:
                prefix, suffix = word[:k], word[k + 2:]
                result = {}
                for m, c in rhs.terms.items():
                    for w, c2 in self._nf_word(intern_word(prefix + m + suffix)).items():
                        _accumulate(result, w, c * c2)
        with self._lock:
            self._nf_cache[word] = result
        return result

    def normal_form(self, u: FreeElement) -> FreeElement:
        if u.gens != self.gens:
            raise InvalidInputError("element is over a different generator set")
        out: Dict[Word, RatQ] = {}
        for w, c in u.terms.items():
            for w2, c2 in self._nf_word(w).items():
                _accumulate(out, w2, c * c2)
        return FreeElement(self.gens, out)

    def reduces_to_zero(self, u: FreeElement) -> bool:
        return not self.normal_form(u)

    def element(self, text: str) -> FreeElement:
        return FreeElement.parse(self.gens, text)

    def gen(self, label) -> FreeElement:
        return self.gens.gen(label)

    # ==================== MONOMIALS ====================
    def ordered_monomials(self, degree: int, start: int = 0) -> Iterator[Word]:
        """Non-decreasing words of total weighted degree exactly `degree`."""
        if degree == 0:
            yield EMPTY
            return
        for x in range(start, len(self.gens)):
            d = self.degrees[x]
            if d <= degree:
                for rest in self.ordered_monomials(degree - d, x):
                    yield intern_word((x,) + rest)

    def graded_dimension(self, d: int) -> int:
        """Number of ordered monomials of degree d (dim A_d for a PBW presentation)."""
        return graded_dimension(self, d)

    def with_name(self, name: str) -> "Presentation":
        p = Presentation.__new__(Presentation)
        p.__dict__.update(self.__dict__)
        p.name = name
        p._nf_cache = {}
        p._lock = threading.Lock()
        return p

    # ==================== CONSTRUCTION ====================
    @classmethod
    def from_relations(
        cls,
        gens: GeneratorSet,
        relations: Sequence[FreeElement],
        degrees: Optional[Sequence[int]] = None,
        name: str = "",
        partial: bool = False,
    ) -> "Presentation":
        """
        Build rules from relation elements (each equal to zero in the algebra).

        The leading word of each relation must be a two-letter out-of-order word;
        the relation is solved for it.
        """
        probe = cls(gens, {}, degrees, name, partial=True)
        rules: Dict[Pair, FreeElement] = {}
        for rel in relations:
            if not rel:
                continue
            lead = max(rel.terms, key=probe.key)
            if len(lead) != 2 or lead[0] <= lead[1]:
                raise InvalidInputError(
                    f"relation {rel.to_text()} does not lead with an out-of-order pair (leads with {gens.word_text(lead)})"
                )
            c = rel.terms[lead]
            rhs = (FreeElement(gens, {lead: c}) - rel) / c
            pair = (lead[1], lead[0])
            if pair in rules:
                raise InvalidInputError(f"two relations lead with {gens.word_text(lead)}")
            rules[pair] = rhs
        return cls(gens, rules, degrees, name, partial)

    # ==================== TEXT FORM ====================
    def to_text(self) -> str:
        lines = [f"presentation {self.name or '-'}"]
        if self.partial:
            lines.append("partial")
        rows = ";".join(",".join(str(int(x)) for x in row) for row in self.gens.pairing.tolist())
        lines.append(f"pairing {rows}")
        for i, nm in enumerate(self.gens.names):
            wt = ",".join(str(x) for x in self.gens.weights[i])
            lines.append(f"gen {nm} weight {wt} degree {self.degrees[i]}")
        for (x, y) in sorted(self.rules, key=lambda p: (p[1], p[0])):
            lines.append(f"rule {self.gens.names[y]} {self.gens.names[x]} = {self.rules[(x, y)].to_text()}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        name, partial, pairing = "", False, []
        names, weights, degrees, raw_rules = [], [], [], []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            head, _, rest = line.partition(" ")
            if head == "presentation":
                name = "" if rest == "-" else rest
            elif head == "partial":
                partial = True
            elif head == "pairing":
                pairing = [[int(x) for x in row.split(",")] for row in rest.split(";")] if rest else []
            elif head == "gen":
                parts = rest.split()
                if len(parts) != 5 or parts[1] != "weight" or parts[3] != "degree":
                    raise InvalidInputError(f"malformed generator line {line!r}")
                names.append(parts[0])
                weights.append([int(x) for x in parts[2].split(",")] if parts[2] else [])
                degrees.append(int(parts[4]))
            elif head == "rule":
                lhs, _, rhs = rest.partition(" = ")
                upper, lower = lhs.split()
                raw_rules.append((upper, lower, rhs))
            else:
                raise InvalidInputError(f"unknown record {head!r}")
        gens = GeneratorSet(names, weights, pairing)
        rules = {}
        for upper, lower, rhs in raw_rules:
            rules[(gens.lookup(lower), gens.lookup(upper))] = FreeElement.parse(gens, rhs)
        return cls(gens, rules, degrees, name, partial)


def _accumulate(target: Dict[Word, RatQ], w: Word, c: RatQ):
    v = target.get(w, ZERO) + c
    if v:
        target[w] = v
    else:
        target.pop(w, None)


def normal_form(p: Presentation, u: FreeElement) -> FreeElement:
    return p.normal_form(u)


def graded_dimension(p: Presentation, d: int) -> int:
    """Ordered monomials of weighted degree d, counted without enumerating them."""
    if d < 0:
        return 0
    counts = [1] + [0] * d
    for deg in p.degrees:
        for total in range(deg, d + 1):
            counts[total] += counts[total - deg]
    return counts[d]


def polynomial_presentation(names: Sequence[str], degrees: Optional[Sequence[int]] = None, q_power: Optional[Dict[Pair, int]] = None) -> Presentation:
    """Commuting (or q-commuting) generators: X'X -> q^k XX'."""
    from core.qrat import qpow

    m = len(names)
    gens = GeneratorSet(names, [[0] for _ in range(m)], [[0]])
    rules = {}
    for y in range(m):
        for x in range(y):
            k = (q_power or {}).get((x, y), 0)
            rules[(x, y)] = FreeElement(gens, {intern_word((x, y)): qpow(k)})
    return Presentation(gens, rules, degrees, name="polynomial")


def lie_enveloping_counts(dims_by_degree: Dict[int, int], d: int) -> int:
    """dim U(n)_d for a graded Lie algebra with the given number of basis elements per degree."""
    counts = [1] + [0] * d
    for deg, mult in sorted(dims_by_degree.items()):
        for _ in range(mult):
            for total in range(deg, d + 1):
                counts[total] += counts[total - deg]
    return counts[d]

"""
Specialization Module
---------------------
Specialize a PBW presentation at q = 1 and decide whether it is optimal,
i.e. whether its q = 1 rules read X'X = XX'.

Features:
- Pole detection per rule with the offending rule in the diagnostic
- The q = 1 presentation p0 over rational coefficients
- Generator rescaling X = c·X̃ (the tilde normalizations that make
  enhanced uberalgebras optimal)
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from core.errors import InvalidInputError, NotSpecializableError
from core.freealg import FreeElement, GeneratorSet, intern_word
from core.qrat import ONE, RatQ
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)

SPECIALIZABLE = "specializable"
OPTIMAL = "optimal"
FAILS = "fails"


@dataclass
class SpecializationResult:
    """
    Attributes:
        status: "optimal", "specializable" or "fails"
        p0: The q = 1 presentation (None when a pole was found)
        offender: Text of the rule with a pole, or of the first non-commuting rule
        notes: Per-rule remarks
    """

    status: str
    p0: Optional[Presentation] = None
    offender: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def rule_text(p: Presentation, x: int, y: int, rhs: FreeElement) -> str:
    return f"{p.gens.names[y]}{p.gens.names[x]} = {rhs.to_text()}"


def normalized_rules(p: Presentation) -> Dict[tuple, FreeElement]:
    """Every rule with its right side in normal form."""
    return {(x, y): p.normal_form(rhs) for (x, y), rhs in sorted(p.rules.items())}


def specialize_presentation(p: Presentation) -> SpecializationResult:
    """
    Evaluate every rule coefficient at q = 1.

    Args:
        p: PBW presentation

    Returns:
        SpecializationResult; status "fails" carries the rule with a pole
    """
    rules0: Dict[tuple, FreeElement] = {}
    offender = None
    for (x, y), rhs in normalized_rules(p).items():
        terms = {}
        for w, c in rhs.terms.items():
            try:
                v = c.value_at_one()
            except NotSpecializableError:
                text = rule_text(p, x, y, rhs)
                logger.warning("%s: pole at q = 1 in %s", p.name, text)
                return SpecializationResult(FAILS, offender=text)
            if v:
                terms[w] = RatQ(v)
        spec = FreeElement(p.gens, terms)
        rules0[(x, y)] = spec
        if offender is None and spec != FreeElement(p.gens, {intern_word((x, y)): ONE}):
            offender = rule_text(p, x, y, rhs)
    p0 = Presentation(p.gens, rules0, p.degrees, name=f"{p.name}|q=1", partial=p.partial)
    status = OPTIMAL if offender is None else SPECIALIZABLE
    logger.info("%s specializes: %s", p.name, status)
    return SpecializationResult(status, p0, None if status == OPTIMAL else offender)


def rescale_presentation(p: Presentation, factors: Dict[str, RatQ], suffix: str = "~") -> Presentation:
    """
    Rewrite p on generators X̃ with X = factors[X]·X̃ (unlisted generators keep scale 1).

    Raises:
        InvalidInputError: for an unknown generator or a zero factor
    """
    for name, c in factors.items():
        p.gens.lookup(name)
        if not c:
            raise InvalidInputError(f"zero scale for {name}")
    scale = [factors.get(nm, ONE) for nm in p.gens.names]
    gens = GeneratorSet([f"{nm}{suffix}" if nm in factors else nm for nm in p.gens.names], p.gens.weights, p.gens.pairing)
    images = [gens.gen(k) * scale[k] for k in range(len(scale))]
    rules = {}
    for (x, y), rhs in p.rules.items():
        rules[(x, y)] = rhs.substitute(images, gens.one()) / (scale[x] * scale[y])
    return Presentation(gens, rules, p.degrees, name=f"{p.name}~", partial=p.partial)

"""
Homomorphism Verification Module
--------------------------------
Certify that an assignment of generator images respects a list of defining
relations: substitute the images and run the target's zero test.

A failing relation is a diagnostic, not an exception; the report keeps the
nonzero image as text.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence

from core.errors import InvalidInputError
from core.freealg import FreeElement
from quantum.uqfull import UqAlgebra, is_zero_plus
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)


@dataclass
class HomReport:
    name: str
    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> Dict[str, str]:
        return {k: self.witnesses.get(k, "") for k, v in self.checks.items() if not v}


@dataclass
class Target:
    """A ring with a unit and an exact zero test."""

    one: object
    is_zero: Callable[[object], bool]
    name: str = ""


def plus_target(alg: UqAlgebra) -> Target:
    return Target(alg.plus.one(), lambda u: is_zero_plus(alg, u), f"U_q^+({alg.datum.name})")


def full_target(alg: UqAlgebra) -> Target:
    return Target(alg.one(), alg.is_zero, f"U_q({alg.datum.name})")


def presentation_target(p: Presentation) -> Target:
    return Target(p.gens.one(), p.reduces_to_zero, p.name)


def verify_hom(relations: Dict[str, FreeElement], images: Sequence, target: Target, name: str = "") -> HomReport:
    """
    Check that every relation maps to zero.

    Args:
        relations: Named relation elements of the source free algebra
        images: Image of each source generator, in generator order
        target: Unit and zero test of the target
        name: Identifier used in reports

    Returns:
        HomReport with one check per relation

    Raises:
        InvalidInputError: if the image list does not cover the source generators
    """
    report = HomReport(name or target.name)
    for label, rel in relations.items():
        if len(images) != len(rel.gens):
            raise InvalidInputError(f"{len(images)} images for {len(rel.gens)} source generators")
        image = rel.substitute(images, target.one)
        ok = target.is_zero(image)
        report.checks[label] = ok
        if not ok:
            report.witnesses[label] = image.to_text()
            logger.warning("%s: relation %s does not vanish", report.name, label)
    logger.info("%s: %d/%d relations vanish", report.name, sum(report.checks.values()), len(report.checks))
    return report

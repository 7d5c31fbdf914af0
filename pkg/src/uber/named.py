"""
Named Presentation Module
-------------------------
A PBW presentation together with its Chevalley-style generators: their
images inside the presentation and the Serre-like relations they satisfy.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from core.freealg import FreeElement, GeneratorSet
from rewrite.presentation import Presentation
from uber.homs import HomReport, presentation_target, verify_hom

logger = logging.getLogger(__name__)


@dataclass
class NamedPresentation:
    """
    Attributes:
        identifier: Registry id such as "Uqn:3"
        presentation: PBW presentation (partial for incomplete lists)
        chevalley: Generators of the Serre-like presentation
        relations: Serre-like relations over the chevalley generators
        images: Image of each chevalley generator in the presentation
        notes: Free-form remarks carried into reports
    """

    identifier: str
    presentation: Presentation
    chevalley: Optional[GeneratorSet] = None
    relations: Dict[str, FreeElement] = field(default_factory=dict)
    images: List[FreeElement] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return self.presentation.partial

    def chevalley_image(self, label) -> FreeElement:
        return self.images[self.chevalley.lookup(label)]

    def serre_check(self) -> HomReport:
        """Every Serre-like relation reduces to zero under the PBW rules."""
        report = verify_hom(self.relations, self.images, presentation_target(self.presentation), name=self.identifier)
        logger.info("%s: Serre-like relations %s", self.identifier, "hold" if report.ok else "FAIL")
        return report

"""
Presentation Registry Module
----------------------------
Look up the built-in uberalgebra presentations by identifier:

    Uqn:n  Aq3:n  Aq4  SqVV:n  SqVVxU:n  G2partial
"""

import logging
import re
from typing import Callable, Dict, List, Optional, Tuple

from core.errors import InvalidInputError, VerificationError
from uber.aq import aq3_presentation, aq4_presentation
from uber.crossprod import sqvv_cross_product
from uber.g2 import g2_presentation
from uber.named import NamedPresentation
from uber.sqvv import sqvv_presentation
from uber.uqn import uqn_presentation

logger = logging.getLogger(__name__)

_ID = re.compile(r"^([A-Za-z0-9]+?)(?::(\d+))?$")


def _sqvv(n: int) -> NamedPresentation:
    return NamedPresentation(f"SqVV:{n}", sqvv_presentation(n).with_name(f"SqVV({n})"))


def _sqvv_cross(n: int) -> NamedPresentation:
    cp = sqvv_cross_product(n)
    return NamedPresentation(f"SqVVxU:{n}", cp.presentation.with_name(f"SqVV({n}) x U_q^+(sl_{n})"))


_PARAMETRIZED: Dict[str, Callable[[int], NamedPresentation]] = {
    "Uqn": uqn_presentation,
    "Aq3": aq3_presentation,
    "SqVV": _sqvv,
    "SqVVxU": _sqvv_cross,
}

_FIXED: Dict[str, Callable[[], NamedPresentation]] = {
    "Aq4": aq4_presentation,
    "G2partial": g2_presentation,
}

# presentations whose Serre-like relations are checked against the PBW rules on load
_SERRE_CHECKED = ("Uqn", "Aq3", "Aq4")


def available() -> List[str]:
    return [f"{k}:n" for k in _PARAMETRIZED] + list(_FIXED)


def parse_identifier(identifier: str) -> Tuple[str, Optional[int]]:
    """"Aq3:4" -> ("Aq3", 4); "Aq4" -> ("Aq4", None)."""
    m = _ID.match(identifier.strip())
    if not m:
        raise InvalidInputError(f"unknown presentation {identifier!r}; available: {', '.join(available())}")
    return m.group(1), int(m.group(2)) if m.group(2) is not None else None


def named_presentation(identifier: str, verify: bool = False) -> NamedPresentation:
    """
    Load a built-in presentation.

    Args:
        identifier: "Uqn:3", "Aq3:2", "Aq4", "SqVV:2", "SqVVxU:2" or "G2partial"
        verify: Reduce every Serre-like relation with the PBW rules after loading

    Returns:
        NamedPresentation

    Raises:
        InvalidInputError: for an unknown identifier or a missing parameter
        VerificationError: if verify is set and a Serre-like relation survives
    """
    key, param = parse_identifier(identifier)
    named: Optional[NamedPresentation] = None
    if key in _PARAMETRIZED:
        if param is None:
            raise InvalidInputError(f"{key} needs a parameter, e.g. {key}:2")
        named = _PARAMETRIZED[key](param)
    elif key in _FIXED and param is None:
        named = _FIXED[key]()
    if named is None:
        raise InvalidInputError(f"unknown presentation {identifier!r}; available: {', '.join(available())}")
    logger.info("loaded %s (%d generators%s)", named.identifier, len(named.presentation.gens), ", partial" if named.partial else "")
    if verify and key in _SERRE_CHECKED:
        report = named.serre_check()
        if not report.ok:
            label, witness = next(iter(report.failures.items()))
            raise VerificationError(f"{named.identifier}: Serre-like relation {label} does not reduce to zero", witness=witness)
    return named

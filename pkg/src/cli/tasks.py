"""
Task Model Module
-----------------
Serializable task specifications and the reports produced by running them.

Features:
- TaskSpec: command, target, parameters and output format, replayable from JSON
- TaskReport: named checks, replayable witnesses, notes and payload data
- Checkpoint paths derived from a hash of the canonical task JSON
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from config.settings import settings
from core.errors import InvalidInputError

OutputFormat = Literal["text", "json", "latex"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


class TaskSpec(BaseModel):
    """One CLI invocation, minus everything that does not affect the result."""

    command: str
    target: str = ""
    params: Dict[str, Any] = Field(default_factory=dict)
    format: OutputFormat = "text"

    def canonical_json(self) -> str:
        """Key-sorted JSON; two equal specs always serialize identically."""
        return json.dumps(self.model_dump(), sort_keys=True, separators=(",", ":"))

    def task_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()[:16]

    def checkpoint_path(self) -> Path:
        return settings.checkpoint_dir() / f"{self.task_hash()}.ckpt.json"


class TaskReport(BaseModel):
    """
    Outcome of a task.

    Attributes:
        task: The spec that produced this report
        checks: Check label -> passed
        witnesses: Check label -> replayable counterexample text
        notes: Remarks that do not affect the outcome
        data: Command-specific payload (matrices, tables, serialized objects)
    """

    task: TaskSpec
    checks: Dict[str, bool] = Field(default_factory=dict)
    witnesses: Dict[str, str] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_FAILED

    def merge(self, prefix: str, checks: Dict[str, bool], witnesses: Optional[Dict[str, str]] = None):
        """Add another report's checks under a common label prefix."""
        for label, passed in checks.items():
            self.checks[f"{prefix}{label}"] = bool(passed)
        for label, witness in (witnesses or {}).items():
            self.witnesses[f"{prefix}{label}"] = witness

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"task {self.task.canonical_json()}"]
        for label, passed in self.checks.items():
            lines.append(f"{'✅' if passed else '❌'} {label}")
            if label in self.witnesses:
                lines.append(f"   witness: {self.witnesses[label]}")
        for note in self.notes:
            lines.append(f"⚠️  {note}")
        for key in sorted(self.data):
            value = self.data[key]
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines.extend(f"  {row}" for row in value.splitlines())
            else:
                lines.append(f"{key}: {value}")
        status = "all checks passed" if self.ok else f"{sum(not v for v in self.checks.values())} check(s) failed"
        lines.append(f"{'✅' if self.ok else '❌'} {status}")
        return "\n".join(lines) + "\n"


def replay_spec(text: str) -> TaskSpec:
    """Rebuild a TaskSpec from the JSON embedded in a report."""
    try:
        return TaskSpec.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f"malformed task spec: {e}") from e

"""
Diamond Lemma Module
--------------------
Confluence certification for presentations with quadratic-leading rules.

Features:
- Sweep over every triple X < X' < X'' reducing X''X'X by both bracketings
- Counterexample witnesses that replay in isolation
- Process-pool fan-out over overlap chunks (presentations shipped as text)
- Periodic JSON checkpoints so long sweeps can resume
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from tqdm import tqdm

from core.freealg import FreeElement, intern_word
from core.qrat import ONE
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass
class Witness:
    """Two inequivalent reductions of X''X'X."""

    triple: Tuple[str, str, str]
    left: str
    right: str


@dataclass
class ConfluenceReport:
    """Outcome of a diamond-lemma sweep."""

    presentation: str
    status: str
    checked: int
    total: int
    witness: Optional[Witness] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "confluent"

    def to_dict(self) -> dict:
        return asdict(self)


def triples(p: Presentation) -> Iterator[Triple]:
    """All (x, y, z) with x < y < z, ordered by z then y then x."""
    m = len(p.gens)
    for z in range(m):
        for y in range(z):
            for x in range(y):
                yield (x, y, z)


def resolve(p: Presentation, triple: Triple) -> Tuple[FreeElement, FreeElement]:
    """Normal forms of (X''X')X and X''(X'X) after one rule application each."""
    x, y, z = triple
    gens = p.gens
    zy, yx = p.rule(z, y), p.rule(y, x)
    if zy is None or yx is None:
        word = FreeElement(gens, {intern_word((z, y, x)): ONE})
        nf = p.normal_form(word)
        return nf, nf
    left = p.normal_form(zy * gens.gen(x))
    right = p.normal_form(gens.gen(z) * yx)
    return left, right


def _check_chunk(p: Presentation, chunk: List[Triple]) -> Optional[Witness]:
    for t in chunk:
        left, right = resolve(p, t)
        if left != right:
            names = p.gens.names
            return Witness((names[t[2]], names[t[1]], names[t[0]]), left.to_text(), right.to_text())
    return None


_WORKER_PRESENTATION: Optional[Presentation] = None


def _init_worker(text: str):
    global _WORKER_PRESENTATION
    _WORKER_PRESENTATION = Presentation.from_text(text)


def _worker_chunk(chunk: List[Triple]) -> Optional[Witness]:
    return _check_chunk(_WORKER_PRESENTATION, chunk)


# ==================== CHECKPOINTS ====================
def load_checkpoint(path: Path) -> int:
    if not path.exists():
        return 0
    data = json.loads(path.read_text(encoding="utf-8"))
    return int(data.get("processed", 0))


def save_checkpoint(path: Path, name: str, processed: int, total: int):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"presentation": name, "processed": processed, "total": total}), encoding="utf-8")
    tmp.replace(path)


# ==================== SWEEP ====================
def check_diamond(
    p: Presentation,
    jobs: int = 1,
    checkpoint: Optional[Path] = None,
    checkpoint_every: int = 200,
    progress: bool = False,
) -> ConfluenceReport:
    """
    Certify confluence of all overlaps.

    Args:
        p: Presentation whose rules satisfy the lowering invariant
        jobs: Worker processes (1 runs in-process)
        checkpoint: File recording the processed-overlap index; resumed from when present
        checkpoint_every: Overlaps between two checkpoint writes
        progress: Show a tqdm bar

    Returns:
        ConfluenceReport with a replayable witness on failure
    """
    all_triples = list(triples(p))
    total = len(all_triples)
    start = load_checkpoint(checkpoint) if checkpoint else 0
    notes = []
    if p.partial:
        notes.append("presentation is partial; missing pairs are left unreduced")
    if start:
        logger.info("resuming %s at overlap %d of %d", p.name, start, total)
        notes.append(f"resumed at overlap {start}")

    step = max(1, checkpoint_every)
    chunks = [all_triples[i:i + step] for i in range(start, total, step)]
    bar = tqdm(total=total, initial=start, disable=not progress, desc=f"overlaps {p.name}", unit="triple")
    processed = start
    witness = None

    def record(done: int):
        nonlocal processed
        processed += done
        bar.update(done)
        if checkpoint:
            save_checkpoint(checkpoint, p.name, processed, total)

    try:
        if jobs <= 1:
            for chunk in chunks:
                witness = _check_chunk(p, chunk)
                if witness:
                    break
                record(len(chunk))
        else:
            with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(p.to_text(),)) as pool:
                # map keeps submission order, so the checkpoint index stays a prefix
                for chunk, found in zip(chunks, pool.map(_worker_chunk, chunks)):
                    if found:
                        witness = found
                        break
                    record(len(chunk))
    finally:
        bar.close()

    if witness:
        logger.info("%s: overlap %s does not resolve", p.name, ".".join(witness.triple))
        return ConfluenceReport(p.name, "counterexample", processed, total, witness, notes)
    logger.info("%s: %d overlaps resolve", p.name, total)
    return ConfluenceReport(p.name, "confluent", total, total, None, notes)


def replay(p: Presentation, witness: Witness) -> bool:
    """True if the witness still exhibits two different normal forms."""
    x, y, z = (p.gens.lookup(nm) for nm in reversed(witness.triple))
    left, right = resolve(p, (x, y, z))
    return left != right and left.to_text() == witness.left and right.to_text() == witness.right

"""
Acceptor reports: word-length comparison over a Cayley ball and the
non-context-free witness family
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from .machines import AcceptorBundle, get_acceptor
from ..automata import ConvWord, convolve
from ..treecalc.pairs import ball
from ..utils.config import DEFAULT_SEED, VERIFY_CONFIG
from ..utils.exceptions import ParseError, VerificationError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

@dataclass(frozen=True)
class QuasigeodesicReport:
    """Per-element normal-form length against word length, with the smallest fitting D."""
    table: pd.DataFrame
    d_min: float
    radius: int

    def holds(self, bound: float) -> bool:
        return self.d_min <= bound

    def summary(self) -> dict:
        by_length = self.table.groupby("word_length")["normal_form_length"].max()
        return {
            "radius": self.radius,
            "elements": int(len(self.table)),
            "d_min": round(self.d_min, 6),
            "max_normal_form_length": {str(int(k)): int(v) for k, v in by_length.items()},
        }

def quasigeodesic_report(max_radius: int) -> QuasigeodesicReport:
    """Fit the smallest D with |normal form| <= D * (word length + 1) on the ball."""
    entries = ball(max_radius)
    table = pd.DataFrame(
        [(key, entry.length, entry.pair.size) for key, entry in entries.items()],
        columns=["pair", "word_length", "normal_form_length"],
    )
    ratios = table["normal_form_length"].to_numpy() / (table["word_length"].to_numpy() + 1)
    table["ratio"] = ratios
    d_min = float(np.max(ratios))
    logger.info(f"Quasigeodesic fit on radius {max_radius}: D = {d_min:.4f} over {len(table)} elements")
    return QuasigeodesicReport(table, d_min, max_radius)

def ogden_witness(p: int, bundle: Optional[AcceptorBundle] = None) -> ConvWord:
    """Reduced pair word of 4p + 4 columns with p-fold nested brackets on both tracks."""
    if p < 1:
        raise ParseError("witness parameter must be at least 1", field="p")
    columns = (
        [("e", "e")]
        + [("(", "a")] * p
        + [("(", "(")]
        + [("a", "(")] * p
        + [(")", "a")] * p
        + [(")", ")")]
        + [("a", ")")] * p
        + [("r", "r")]
    )
    top = "".join(c[0] for c in columns)
    bottom = "".join(c[1] for c in columns)
    word = convolve([top, bottom])
    bundle = bundle or get_acceptor()
    if not bundle.f_machine.accepts(word):
        raise VerificationError(f"witness for p={p} is rejected by the acceptor")
    return word

def pump_mutations(p: int, count: Optional[int] = None, seed: int = DEFAULT_SEED,
                   bundle: Optional[AcceptorBundle] = None) -> list:
    """Copies of the witness with one column duplicated in place, at seeded positions."""
    count = VERIFY_CONFIG["ogden_mutations"] if count is None else count
    word = ogden_witness(p, bundle)
    rng = np.random.default_rng(seed)
    positions = rng.choice(len(word), size=min(count, len(word)), replace=False)
    mutations = []
    for position in sorted(int(i) for i in positions):
        columns = word.columns[:position + 1] + word.columns[position:]
        mutations.append(ConvWord(2, columns, word.pad))
    return mutations

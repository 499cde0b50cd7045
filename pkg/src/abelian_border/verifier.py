"""Deciding whether an integer array is the abelian border array of a binary word.

For a valid array the 0-initial generating word is forced letter by letter:
``x[i] = 0`` exactly when ``pi[i] = i - 1``.  Verification therefore builds
that candidate word and recomputes its array; the two agree iff the input
was valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import AUTO_THRESHOLD, BorderArray, border_array, next_entry_after_one
from .words import BinaryWord, build_prefix_ones

__all__ = [
    "ExtensionSet",
    "InvalidBorderArray",
    "VerifyOutcome",
    "candidate_word",
    "extensions",
    "structural_precheck",
    "verify",
]


class InvalidBorderArray(ValueError):
    def __init__(self, mismatch_index: int):
        super().__init__(f"not a valid abelian border array (first mismatch at {mismatch_index})")
        self.mismatch_index = mismatch_index


@dataclass(frozen=True)
class VerifyOutcome:
    valid: bool
    word: BinaryWord | None = None
    mismatch_index: int | None = None

    def to_dict(self) -> dict:
        if self.valid:
            return {"valid": True, "word": str(self.word)}
        return {"valid": False, "mismatch_index": self.mismatch_index}


@dataclass(frozen=True)
class ExtensionSet:
    """The two values that may be appended to a valid array of length n."""

    with_zero: int
    with_one: int

    def members(self) -> frozenset[int]:
        return frozenset((self.with_zero, self.with_one))


def _as_array(pi: Sequence[int]) -> BorderArray:
    ba = pi if isinstance(pi, BorderArray) else BorderArray(pi)
    if len(ba) == 0:
        raise ValueError("empty array")
    return ba


def candidate_word(pi: Sequence[int]) -> BinaryWord:
    ba = _as_array(pi)
    vals = np.asarray(ba, dtype=np.int64)
    return BinaryWord((vals != np.arange(len(ba))).astype(np.uint8))


def structural_precheck(pi: Sequence[int]) -> int | None:
    """First 1-based index breaking a necessary condition, or None.

    Checks ``pi[1] = 0``, ``0 <= pi[i] <= i - 1`` and that entries other than
    ``i - 1`` never exceed their predecessor.  Passing does not imply
    validity.
    """
    prev = None
    for i, v in enumerate(pi, 1):
        if v < 0 or v > i - 1:
            return i
        if v != i - 1 and prev is not None and v > prev:
            return i
        prev = v
    return None


def verify(pi: Sequence[int], engine: str = "auto", threshold: int = AUTO_THRESHOLD) -> VerifyOutcome:
    ba = _as_array(pi)
    bad = structural_precheck(ba)
    if bad is not None:
        return VerifyOutcome(valid=False, mismatch_index=bad)
    word = candidate_word(ba)
    recomputed = border_array(word, engine=engine, threshold=threshold)
    if recomputed == ba:
        return VerifyOutcome(valid=True, word=word)
    diff = np.flatnonzero(np.asarray(recomputed) != np.asarray(ba))
    return VerifyOutcome(valid=False, mismatch_index=int(diff[0]) + 1)


def extensions(pi: Sequence[int]) -> ExtensionSet:
    """Values ``k`` for which ``pi + (k,)`` is again valid."""
    outcome = verify(pi)
    if not outcome.valid:
        raise InvalidBorderArray(outcome.mismatch_index)
    n = len(pi)
    p = build_prefix_ones(outcome.word.append(1)).tolist()
    return ExtensionSet(with_zero=n, with_one=next_entry_after_one(p, pi[-1]))

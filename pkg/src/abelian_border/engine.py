"""Abelian border arrays of binary words.

Three engines compute the same array:

* :func:`border_array_naive` -- the reference: for every prefix it checks
  every candidate length against the prefix-ones table.
* :func:`border_array_incremental` -- works on the 0-initial orientation,
  sets ``pi[i] = i - 1`` whenever ``w[i] = 0`` and otherwise scans down from
  ``pi[i - 1]``.
* :func:`border_array_packed` -- scans the prefix/suffix difference walk
  64 steps at a time out of the packed word and its reversal.

The naive engine is quadratic on every input; the other two stop at the
first (longest) border they meet.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .words import BinaryWord, build_prefix_ones, canonicalize

__all__ = [
    "AUTO_THRESHOLD",
    "ENGINES",
    "BorderArray",
    "StepWalk",
    "all_border_lengths",
    "border_array",
    "border_array_incremental",
    "border_array_naive",
    "border_array_packed",
    "next_entry_after_one",
    "shortest_border",
    "step_walk",
]

AUTO_THRESHOLD = 4096
ENGINES = ("naive", "incremental", "packed", "auto")


class BorderArray(tuple):
    """Integer array ``pi[1..n]``; behaves as a plain 0-based tuple.

    Candidate arrays handed to the verifier need not be valid, so no
    structural checks happen here.
    """

    def __new__(cls, values: Iterable[int] = ()):
        vals = values.tolist() if isinstance(values, np.ndarray) else values
        return super().__new__(cls, (int(v) for v in vals))

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside [1, {len(self)}]")
        return self[i - 1]

    def to_text(self) -> str:
        return ",".join(map(str, self))

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def parse(cls, text: str) -> "BorderArray":
        """Accept ``"0,1,2"``, ``"0 1 2"`` or a JSON list ``"[0, 1, 2]"``."""
        text = text.strip()
        if text.startswith("["):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ValueError(f"bad JSON array: {exc}") from None
            if not isinstance(data, list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in data
            ):
                raise ValueError("JSON input must be a list of integers")
            tokens = data
        else:
            tokens = []
            for pos, tok in enumerate(text.replace(",", " ").split(), 1):
                try:
                    tokens.append(int(tok))
                except ValueError:
                    raise ValueError(f"token {tok!r} at position {pos} is not an integer") from None
        if any(v < 0 for v in tokens):
            raise ValueError("border array entries must be non-negative")
        return cls(tokens)

    def __repr__(self) -> str:
        return f"BorderArray({tuple(self)!r})"


def _require_nonempty(w: BinaryWord) -> None:
    if len(w) == 0:
        raise ValueError("border arrays are undefined for the empty word")


def border_array_naive(w: BinaryWord) -> BorderArray:
    _require_nonempty(w)
    p = build_prefix_ones(w)
    out = np.empty(len(w), dtype=np.int64)
    _kernels.naive_pi(p, out)
    return BorderArray(out)


def border_array_incremental(w: BinaryWord) -> BorderArray:
    _require_nonempty(w)
    # the array is the same for w and its complement
    w = canonicalize(w)
    p = build_prefix_ones(w)
    out = np.empty(len(w), dtype=np.int64)
    _kernels.incremental_pi(w.letters, p, out)
    return BorderArray(out)


_tables = None
_tables_lock = threading.Lock()


def _byte_tables():
    """Lazily built lookup tables for 8-step pieces of the walk.

    ``zero[code, off + 8]`` is the first step (1..8) at which a walk entering
    at offset ``off`` reaches 0, or 0 if it does not; ``delta[code]`` is the
    net displacement.  ``code`` packs the plus byte over the minus byte.
    """
    global _tables
    if _tables is None:
        with _tables_lock:
            if _tables is None:
                zero = np.zeros((1 << 16, 17), dtype=np.uint8)
                delta = np.zeros(1 << 16, dtype=np.int8)
                _kernels.build_byte_tables(zero, delta)
                zero.setflags(write=False)
                delta.setflags(write=False)
                _tables = (zero, delta)
    return _tables


def border_array_packed(w: BinaryWord) -> BorderArray:
    _require_nonempty(w)
    zero, delta = _byte_tables()
    p = build_prefix_ones(w)
    out = np.empty(len(w), dtype=np.int64)
    _kernels.packed_pi(w.packed, w.packed_reversed, p, zero, delta, out)
    return BorderArray(out)


_DISPATCH = {
    "naive": border_array_naive,
    "incremental": border_array_incremental,
    "packed": border_array_packed,
}


def resolve_engine(engine: str, n: int, threshold: int = AUTO_THRESHOLD) -> str:
    if engine == "auto":
        return "packed" if n > threshold else "incremental"
    if engine not in _DISPATCH:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    return engine


def border_array(w: BinaryWord, engine: str = "auto", threshold: int = AUTO_THRESHOLD) -> BorderArray:
    return _DISPATCH[resolve_engine(engine, len(w), threshold)](w)


def all_border_lengths(w: BinaryWord, i: int) -> tuple[int, ...]:
    """Every abelian border length of ``w[1..i]``, ascending."""
    if not 1 <= i <= len(w):
        raise IndexError(f"position {i} outside [1, {len(w)}]")
    p = build_prefix_ones(w)
    j = np.arange(1, i)
    hits = j[p[j] == p[i] - p[i - j]]
    return tuple(hits.tolist())


def shortest_border(ba: Sequence[int], i: int) -> int | None:
    """Shortest non-empty abelian border of the length-``i`` prefix.

    Border lengths come in pairs ``j, i - j``, so this is ``i - pi[i]``.
    """
    if not 1 <= i <= len(ba):
        raise IndexError(f"position {i} outside [1, {len(ba)}]")
    longest = ba[i - 1]
    return None if longest == 0 else i - longest


def next_entry_after_one(p: Sequence[int], start: int) -> int:
    """Last entry of the array after appending a 1 to a 0-initial word.

    ``p`` is the prefix-ones table of the extended word (length m + 1) and
    ``start`` the previous last entry, which bounds the answer from above.
    """
    m = len(p) - 1
    target = p[m]
    for j in range(start, 0, -1):
        if p[j] + p[m - j] == target:
            return j
    return 0


@dataclass(frozen=True)
class StepWalk:
    """Steps of ``g(j) = ones(x[1..j]) - ones(x[i-j+1..i])`` for ``0 <= j < i``.

    Bit ``j`` of ``plus_mask`` (resp. ``minus_mask``) is set when
    ``g(j + 1) - g(j)`` is +1 (resp. -1).  The zeros of ``g`` on ``[1, i-1]``
    are exactly the abelian border lengths of the prefix of length ``i``.
    """

    plus_mask: int
    minus_mask: int
    length: int

    def values(self) -> list[int]:
        """``[g(0), g(1), ..., g(length - 1)]``."""
        g = [0]
        for j in range(self.length - 1):
            g.append(g[-1] + ((self.plus_mask >> j) & 1) - ((self.minus_mask >> j) & 1))
        return g

    def zeros(self) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.values()) if j >= 1 and v == 0)


def _as_int(packed: np.ndarray) -> int:
    return int.from_bytes(packed.astype("<u8").tobytes(), "little")


def step_walk(w: BinaryWord, i: int) -> StepWalk:
    """Materialize the walk for prefix length ``i`` by shifting packed words."""
    n = len(w)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside [1, {n}]")
    mask = (1 << (i - 1)) - 1
    # step j -> j+1 compares x[j+1] with x[i-j], i.e. the reversal at n-i+j (0-based)
    prefix_bits = _as_int(w.packed) & mask
    suffix_bits = (_as_int(w.packed_reversed) >> (n - i)) & mask
    return StepWalk(
        plus_mask=prefix_bits & ~suffix_bits,
        minus_mask=suffix_bits & ~prefix_bits,
        length=i,
    )

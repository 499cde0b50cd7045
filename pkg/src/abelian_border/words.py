"""Binary and general-alphabet words.

Positions in the public accessors named ``at`` are 1-based, matching the
usual stringology convention ``w[1..n]``.  Python sequence protocols
(``len``, iteration, ``[]``) stay 0-based.

Letters are stored bit-packed: position ``i`` lives in bit ``(i - 1) % 64`` of
machine word ``(i - 1) // 64``, least-significant first.  One extra zero word
is always kept at the end so unaligned 64-bit extraction never reads out of
bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BinaryWord",
    "GeneralWord",
    "ParseError",
    "build_prefix_ones",
    "canonicalize",
    "complement",
    "ones_in",
    "parse_general_word",
    "parse_word",
]


class ParseError(ValueError):
    """Raised when text does not describe a word; ``position`` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _pack(letters: np.ndarray) -> np.ndarray:
    n = letters.shape[0]
    nwords = (n + 63) // 64 + 1
    buf = np.zeros(nwords * 64, dtype=np.uint8)
    buf[:n] = letters
    return np.packbits(buf, bitorder="little").view("<u8").astype(np.uint64)


class BinaryWord:
    """Immutable bit-packed word over {0, 1}."""

    __slots__ = ("_packed", "_n", "_letters", "_reversed")

    def __init__(self, letters: Iterable[int] | np.ndarray = ()):
        arr = np.asarray(letters if isinstance(letters, np.ndarray) else list(letters))
        if arr.ndim != 1:
            raise ValueError("letters must be one-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            bad = int(np.flatnonzero(~np.isin(arr, (0, 1)))[0])
            raise ParseError(f"letter {arr[bad]!r} is not binary", bad + 1)
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._letters = arr
        self._n = int(arr.shape[0])
        packed = _pack(arr)
        packed.setflags(write=False)
        self._packed = packed
        self._reversed = None

    @classmethod
    def from_string(cls, text: str) -> "BinaryWord":
        return parse_word(text)

    @property
    def letters(self) -> np.ndarray:
        """Read-only uint8 array of letters, 0-based."""
        return self._letters

    @property
    def packed(self) -> np.ndarray:
        """Read-only uint64 words, LSB-first, zero padded."""
        return self._packed

    @property
    def packed_reversed(self) -> np.ndarray:
        """Packed form of the mirror word ``w[n] w[n-1] ... w[1]``."""
        if self._reversed is None:
            rev = _pack(self._letters[::-1])
            rev.setflags(write=False)
            self._reversed = rev
        return self._reversed

    def at(self, i: int) -> int:
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} outside [1, {self._n}]")
        return int(self._letters[i - 1])

    def append(self, letter: int) -> "BinaryWord":
        return BinaryWord(np.append(self._letters, np.uint8(letter)))

    def __len__(self) -> int:
        return self._n

    def __iter__(self):
        return iter(self._letters.tolist())

    def __getitem__(self, key):
        if isinstance(key, slice):
            return BinaryWord(self._letters[key])
        return int(self._letters[key])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._packed, other._packed)

    def __hash__(self) -> int:
        return hash((self._n, self._packed.tobytes()))

    def __str__(self) -> str:
        return (self._letters + ord("0")).tobytes().decode("ascii")

    def __repr__(self) -> str:
        return f"BinaryWord('{self}')"


@dataclass(frozen=True)
class GeneralWord:
    """Word over the alphabet ``{0, ..., alphabet_size - 1}``."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(c) for c in self.letters))
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be at least 1")
        for pos, c in enumerate(self.letters, 1):
            if not 0 <= c < self.alphabet_size:
                raise ParseError(
                    f"letter {c} outside alphabet of size {self.alphabet_size}", pos
                )

    @classmethod
    def of(cls, letters: Sequence[int] | str, alphabet_size: int | None = None):
        """Build from a digit string or integer sequence; size defaults to max+1."""
        seq = [int(c) for c in letters]
        if alphabet_size is None:
            alphabet_size = max(seq, default=0) + 1
        return cls(tuple(seq), alphabet_size)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def parse_word(text: str) -> BinaryWord:
    """Parse a string of '0'/'1' characters into a :class:`BinaryWord`."""
    for pos, ch in enumerate(text, 1):
        if ch not in "01":
            raise ParseError(f"unexpected character {ch!r}", pos)
    return BinaryWord(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))


def parse_general_word(text: str, alphabet_size: int) -> GeneralWord:
    """Parse whitespace-separated non-negative integer tokens."""
    letters = []
    for pos, tok in enumerate(text.split(), 1):
        if not tok.isdigit():
            raise ParseError(f"token {tok!r} is not a non-negative integer", pos)
        letters.append(int(tok))
    return GeneralWord(tuple(letters), alphabet_size)


def complement(w: BinaryWord) -> BinaryWord:
    return BinaryWord(1 - w.letters)


def canonicalize(w: BinaryWord) -> BinaryWord:
    """Return whichever of ``w`` and its complement starts with 0."""
    if len(w) == 0:
        raise ValueError("cannot canonicalize the empty word")
    return w if w.letters[0] == 0 else complement(w)


def build_prefix_ones(w: BinaryWord) -> np.ndarray:
    """Table ``p`` with ``p[i] = ones(w[1..i])`` and ``p[0] = 0``."""
    p = np.zeros(len(w) + 1, dtype=np.int64)
    np.cumsum(w.letters, dtype=np.int64, out=p[1:])
    p.setflags(write=False)
    return p


def ones_in(p: np.ndarray, i: int, j: int) -> int:
    """Number of ones in ``w[i..j]`` (1-based, inclusive; empty when j < i)."""
    if j < i:
        return 0
    return int(p[j] - p[i - 1])

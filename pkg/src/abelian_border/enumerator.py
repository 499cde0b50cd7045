"""Enumeration and counting of valid abelian border arrays.

Binary arrays form a complete binary tree: every valid array of length m
has exactly two valid one-entry extensions, obtained by appending 0 or 1 to
its 0-initial generating word.  Walking that tree depth-first yields all
``2**(n-1)`` arrays of length n.

For larger alphabets there is no such structure; :func:`brute_force_valid`
enumerates every word, and the letter-equivalence helpers measure how many
arrays there could be at most.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .engine import BorderArray, next_entry_after_one
from .words import BinaryWord, GeneralWord

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "EnumNode",
    "LetterPattern",
    "bell_number",
    "brute_force_valid",
    "count_valid",
    "enumerate_valid",
    "equivalence_class_count",
    "general_border_array",
    "letter_canonical",
    "ternary_upper_bound",
]

DEFAULT_BUDGET = 10**8
# exhaustive class counting switches to the recurrence above this many positions
_EXHAUSTIVE_CLASS_LIMIT = 10**6
_BLOCK = 1 << 15


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would touch more word positions than allowed."""


@dataclass(frozen=True)
class EnumNode:
    pi: BorderArray
    word: BinaryWord


@dataclass(frozen=True)
class LetterPattern:
    """Restricted-growth code: letters renamed in order of first appearance."""

    code: tuple[int, ...]


def _check_length(n: int) -> None:
    if n < 1:
        raise ValueError("length must be at least 1")


def enumerate_valid(n: int) -> Iterator[EnumNode]:
    """Yield every valid binary array of length ``n`` with its 0-initial word.

    Depth-first; the child appending letter 0 comes first.
    """
    _check_length(n)
    letters = [0]
    p = [0, 0]
    pi = [0]

    def walk() -> Iterator[EnumNode]:
        m = len(pi)
        if m == n:
            yield EnumNode(BorderArray(pi), BinaryWord(letters))
            return
        for letter in (0, 1):
            letters.append(letter)
            p.append(p[-1] + letter)
            pi.append(m if letter == 0 else next_entry_after_one(p, pi[-1]))
            yield from walk()
            letters.pop()
            p.pop()
            pi.pop()

    return walk()


def count_valid(n: int) -> int:
    """Number of valid binary arrays of length ``n``: ``T_n = 2 T_{n-1}``, ``T_1 = 1``."""
    _check_length(n)
    return 1 << (n - 1)


def _check_budget(n: int, k: int, budget: int) -> None:
    positions = k**n * n
    if positions > budget:
        raise BudgetExceeded(
            f"{k}^{n} words x {n} positions = {positions} exceeds budget {budget}"
        )


def brute_force_valid(n: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[BorderArray]:
    """Distinct border arrays over all ``k**n`` words of length ``n``."""
    _check_length(n)
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    _check_budget(n, k, budget)
    total = k**n
    found: set[BorderArray] = set()
    for start in range(0, total, _BLOCK):
        rows = min(_BLOCK, total - start)
        out = np.empty((rows, n), dtype=np.int64)
        _kernels.general_pi_block(n, k, start, out)
        found.update(BorderArray(row) for row in np.unique(out, axis=0).tolist())
    return frozenset(found)


def general_border_array(w: GeneralWord | Sequence[int]) -> BorderArray:
    """Longest proper prefix/suffix pair with equal Parikh vectors, per prefix."""
    if not isinstance(w, GeneralWord):
        w = GeneralWord.of(w)
    n = len(w)
    if n == 0:
        raise ValueError("border arrays are undefined for the empty word")
    k = w.alphabet_size
    parikh = np.zeros((n + 1, k), dtype=np.int64)
    parikh[np.arange(1, n + 1), w.letters] = 1
    np.cumsum(parikh, axis=0, out=parikh)
    out = [0] * n
    for i in range(2, n + 1):
        j = np.arange(1, i)
        same = (parikh[j] == parikh[i] - parikh[i - j]).all(axis=1)
        hits = np.flatnonzero(same)
        out[i - 1] = int(j[hits[-1]]) if hits.size else 0
    return BorderArray(out)


def letter_canonical(w: GeneralWord | Sequence[int]) -> LetterPattern:
    letters = w.letters if isinstance(w, GeneralWord) else w
    names: dict[int, int] = {}
    return LetterPattern(tuple(names.setdefault(c, len(names)) for c in letters))


def ternary_upper_bound(n: int) -> int:
    """``(3**(n-1) + 1) // 2``: one class per single-letter word, six per other."""
    _check_length(n)
    return (3 ** (n - 1) + 1) // 2


def bell_number(n: int) -> int:
    """Exact Bell number by the Bell triangle."""
    if n < 0:
        raise ValueError("index must be non-negative")
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def _classes_recurrence(n: int, k: int) -> int:
    # ways[d] = restricted-growth strings so far using exactly d distinct letters
    ways = [0] * (k + 1)
    ways[1] = 1
    for _ in range(n - 1):
        nxt = [0] * (k + 1)
        for d in range(1, k + 1):
            if ways[d]:
                nxt[d] += ways[d] * d
                if d < k:
                    nxt[d + 1] += ways[d]
        ways = nxt
    return sum(ways)


def _classes_exhaustive(n: int, k: int) -> int:
    return len({letter_canonical(w).code for w in itertools.product(range(k), repeat=n)})


def equivalence_class_count(
    n: int, k: int, method: str = "auto", budget: int = DEFAULT_BUDGET
) -> int:
    """Number of letter-equivalence classes of words in ``{0..k-1}**n``.

    ``method`` is ``"exhaustive"`` (canonicalize every word), ``"recurrence"``
    (count restricted-growth strings with fewer than ``k`` distinct codes) or
    ``"auto"``, which picks exhaustive only for small instances.
    """
    _check_length(n)
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    if method == "auto":
        method = "exhaustive" if k**n * n <= min(budget, _EXHAUSTIVE_CLASS_LIMIT) else "recurrence"
    if method == "exhaustive":
        _check_budget(n, k, budget)
        return _classes_exhaustive(n, k)
    if method == "recurrence":
        return _classes_recurrence(n, k)
    raise ValueError(f"unknown method {method!r}")

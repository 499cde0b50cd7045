"""Independent reference computations built on plain strings and Counters.

Nothing here touches the package: these are the ground truth the library is
checked against.
"""

from collections import Counter
from itertools import product


def borders_of_prefix(word, i):
    s = word[:i]
    return [j for j in range(1, i) if Counter(s[:j]) == Counter(s[i - j:])]


def border_array(word):
    out = []
    for i in range(1, len(word) + 1):
        b = borders_of_prefix(word, i)
        out.append(b[-1] if b else 0)
    return tuple(out)


def all_words(n, k=2):
    return ["".join(map(str, w)) for w in product(range(k), repeat=n)]


def flip(word):
    return word.translate(str.maketrans("01", "10"))

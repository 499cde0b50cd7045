"""Compiled inner loops shared by the engines and the exhaustive oracles.

All kernels take 0-based arrays; ``p`` is the prefix-ones table with
``p[0] == 0`` so ``p[i]`` counts ones in the first ``i`` letters.
"""

import numba as nb
import numpy as np

_JIT = dict(cache=True, nogil=True)


@nb.njit(**_JIT)
def naive_pi(p, out):
    n = p.shape[0] - 1
    for i in range(1, n + 1):
        best = 0
        for j in range(1, i):
            if p[j] + p[i - j] == p[i]:
                best = j
        out[i - 1] = best


@nb.njit(**_JIT)
def incremental_pi(letters, p, out):
    # letters must start with 0
    n = letters.shape[0]
    out[0] = 0
    for i in range(2, n + 1):
        if letters[i - 1] == 0:
            out[i - 1] = i - 1
            continue
        best = 0
        for j in range(out[i - 2], 0, -1):
            if p[j] == p[i] - p[i - j]:
                best = j
                break
        out[i - 1] = best


@nb.njit(**_JIT)
def _extract64(words, bit):
    w = bit >> 6
    sh = bit & 63
    lo = words[w] >> np.uint64(sh)
    if sh != 0:
        lo |= words[w + 1] << np.uint64(64 - sh)
    return lo


@nb.njit(**_JIT)
def packed_pi(fwd, rev, p, zero_tab, delta_tab, out):
    """Word-packed scan for the shortest border of every prefix.

    For prefix length ``i`` the walk ``f(k) = ones(x[1..k]) - ones(x[i-k+1..i])``
    moves by ``x[k] - x[i-k+1]`` per step; the shortest border is its first
    zero on ``[1, i-1]``.  Steps are taken 64 at a time from the packed word
    (prefix side, aligned) and the packed reversal (suffix side, shifted).
    """
    n = p.shape[0] - 1
    out[0] = 0
    full = np.uint64(0xFFFFFFFFFFFFFFFF)
    m8 = np.uint64(0xFF)
    for i in range(2, n + 1):
        kmax = i - 1
        base = n - i
        pi_ = p[i]
        f = 0
        k0 = 0
        hit = 0
        while k0 < kmax:
            d = f if f >= 0 else -f
            if d > 64:
                # no zero within the next d-1 steps
                k0 += ((d - 1) >> 6) << 6
                if k0 >= kmax:
                    break
                f = p[k0] - pi_ + p[i - k0]
                continue
            a = fwd[k0 >> 6]
            b = _extract64(rev, base + k0)
            m = kmax - k0
            mask = full if m >= 64 else (np.uint64(1) << np.uint64(m)) - np.uint64(1)
            plus = a & ~b & mask
            minus = b & ~a & mask
            for byte in range(8):
                sh = np.uint64(byte << 3)
                pb = np.int64((plus >> sh) & m8)
                mb = np.int64((minus >> sh) & m8)
                code = (pb << 8) | mb
                if -8 <= f <= 8:
                    z = zero_tab[code, f + 8]
                    if z != 0:
                        hit = k0 + (byte << 3) + z
                        break
                f += delta_tab[code]
            if hit:
                break
            k0 += 64
        out[i - 1] = i - hit if hit else 0


@nb.njit(**_JIT)
def build_byte_tables(zero_tab, delta_tab):
    for pb in range(256):
        for mb in range(256):
            code = (pb << 8) | mb
            s = 0
            for t in range(8):
                if (pb >> t) & 1 and not (mb >> t) & 1:
                    s += 1
                elif (mb >> t) & 1 and not (pb >> t) & 1:
                    s -= 1
            delta_tab[code] = s
            for off in range(-8, 9):
                f = off
                z = 0
                for t in range(8):
                    if (pb >> t) & 1 and not (mb >> t) & 1:
                        f += 1
                    elif (mb >> t) & 1 and not (pb >> t) & 1:
                        f -= 1
                    if f == 0:
                        z = t + 1
                        break
                zero_tab[code, off + 8] = z


@nb.njit(**_JIT)
def general_pi_block(n, k, start, out):
    """Border arrays of the words with lexicographic ranks start, start+1, ...

    ``out`` has one row per word; the first letter is the most significant
    base-``k`` digit of the rank.
    """
    word = np.empty(n, dtype=np.int64)
    parikh = np.zeros((n + 1, k), dtype=np.int64)
    for row in range(out.shape[0]):
        r = start + row
        for pos in range(n - 1, -1, -1):
            word[pos] = r % k
            r //= k
        for pos in range(n):
            for c in range(k):
                parikh[pos + 1, c] = parikh[pos, c]
            parikh[pos + 1, word[pos]] += 1
        for i in range(1, n + 1):
            best = 0
            for j in range(1, i):
                same = True
                for c in range(k):
                    if parikh[j, c] != parikh[i, c] - parikh[i - j, c]:
                        same = False
                        break
                if same:
                    best = j
            out[row, i - 1] = best

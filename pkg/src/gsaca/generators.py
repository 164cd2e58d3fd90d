"""Deterministic test corpora.

All randomness comes from numpy's ``PCG64`` bit generator seeded with the
integer ``seed``.  Random symbols are taken from consecutive raw 64-bit
outputs: ``symbol = ((x >> 32) * sigma) >> 32``, which depends only on the
PCG64 stream, so files are reproducible bit-for-bit across platforms and
numpy versions.  Alphabets: ``a, b, ...`` when ``sigma <= 26``, otherwise
bytes ``1..sigma``.

``mixed`` is a desk-scale stand-in for real-world collections: segments of
word text with a skewed vocabulary, DNA, near-copies of earlier output and
Fibonacci runs, in a seeded order.
"""

from __future__ import annotations

import numpy as np

KINDS = ("fibonacci", "random", "periodic", "mixed")
DEFAULT_SIGMA = 26
DEFAULT_PERIOD = 1000


def _alphabet(sigma: int) -> np.ndarray:
    if not 1 <= sigma <= 255:
        raise ValueError(f"sigma must be in [1, 255], got {sigma}")
    if sigma <= 26:
        return np.arange(ord("a"), ord("a") + sigma, dtype=np.uint8)
    return np.arange(1, sigma + 1, dtype=np.uint8)


def _raw(bitgen, size: int) -> np.ndarray:
    return bitgen.random_raw(size).astype(np.uint64)


def _uniform_below(bitgen, bound: int, size: int) -> np.ndarray:
    """Multiply-shift reduction of the top 32 bits into ``[0, bound)``."""
    hi = _raw(bitgen, size) >> np.uint64(32)
    return ((hi * np.uint64(bound)) >> np.uint64(32)).astype(np.int64)


def random_text(size: int, sigma: int = DEFAULT_SIGMA, seed: int = 0) -> bytes:
    alpha = _alphabet(sigma)
    if size == 0:
        return b""
    bitgen = np.random.PCG64(seed)
    return alpha[_uniform_below(bitgen, sigma, size)].tobytes()


def fibonacci_text(size: int) -> bytes:
    """Prefix of the Fibonacci word: s1 = a, s2 = ab, s_k = s_{k-1} s_{k-2}."""
    prev = np.frombuffer(b"a", np.uint8)
    cur = np.frombuffer(b"ab", np.uint8)
    while cur.shape[0] < size:
        prev, cur = cur, np.concatenate([cur, prev])
    return cur[:size].tobytes()


def periodic_text(size: int, sigma: int = DEFAULT_SIGMA, seed: int = 0, period: int = DEFAULT_PERIOD) -> bytes:
    if period < 1:
        raise ValueError("period must be positive")
    block = np.frombuffer(random_text(min(period, max(size, 1)), sigma, seed), np.uint8)
    if size == 0:
        return b""
    reps = -(-size // block.shape[0])
    return np.tile(block, reps)[:size].tobytes()


def _words(bitgen, size: int) -> np.ndarray:
    vocab_size = 4096
    lengths = 2 + _uniform_below(bitgen, 9, vocab_size)
    letters = np.frombuffer(b"etaoinshrdlucmfwypvbgkjqxz", np.uint8)
    # skewed letters: squaring a uniform favours the front of ``letters``
    u = _uniform_below(bitgen, 1 << 16, int(lengths.sum()))
    flat = letters[(u * u * 26) >> 32]
    offs = np.concatenate([[0], np.cumsum(lengths)])
    # Zipf-like choice of words: index = floor(V ** r) - 1 for uniform r
    count = size // 3 + 1
    r = _uniform_below(bitgen, 1 << 24, count) / float(1 << 24)
    idx = np.minimum((vocab_size ** r).astype(np.int64) - 1, vocab_size - 1)
    wl = lengths[idx] + 1
    ends = np.cumsum(wl)
    out = np.empty(int(ends[-1]), np.uint8)
    starts = ends - wl
    # each output byte: which word, offset inside it
    owner = np.repeat(np.arange(count), wl)
    pos = np.arange(out.shape[0]) - starts[owner]
    wlen = lengths[idx][owner]
    src = offs[idx][owner] + np.minimum(pos, wlen - 1)
    out[:] = flat[src]
    sep = pos == wlen
    out[sep] = ord(" ")
    # a line break instead of a space after roughly one word in twelve
    brk = _uniform_below(bitgen, 12, count) == 0
    out[ends[brk] - 1] = ord("\n")
    return out[:size]


def mixed_text(size: int, seed: int = 0) -> bytes:
    if size == 0:
        return b""
    bitgen = np.random.PCG64(seed)
    out = np.empty(size, np.uint8)
    dna = np.frombuffer(b"acgt", np.uint8)
    pos = 0
    while pos < size:
        seg = min(size - pos, 4096 + int(_uniform_below(bitgen, 1 << 16, 1)[0]))
        kind = int(_uniform_below(bitgen, 8, 1)[0])
        if kind < 4:
            piece = _words(bitgen, seg)
        elif kind < 6 and pos >= seg:
            # near-copy of an earlier window with a few point mutations
            src = int(_uniform_below(bitgen, pos - seg + 1, 1)[0])
            piece = out[src:src + seg].copy()
            nmut = seg // 512 + 1
            at = _uniform_below(bitgen, seg, nmut)
            piece[at] = np.frombuffer(b"etaoinshr", np.uint8)[_uniform_below(bitgen, 9, nmut)]
        elif kind < 7:
            piece = dna[_uniform_below(bitgen, 4, seg)]
        else:
            piece = np.frombuffer(fibonacci_text(seg), np.uint8)
        out[pos:pos + seg] = piece[:seg]
        pos += seg
    return out.tobytes()


def generate(kind: str, size: int, sigma: int = DEFAULT_SIGMA, seed: int = 0, period: int = DEFAULT_PERIOD) -> bytes:
    if size < 0:
        raise ValueError("size must be non-negative")
    if kind == "fibonacci":
        return fibonacci_text(size)
    if kind == "random":
        return random_text(size, sigma, seed)
    if kind == "periodic":
        return periodic_text(size, sigma, seed, period)
    if kind == "mixed":
        return mixed_text(size, seed)
    raise ValueError(f"unknown generator kind {kind!r}")

"""Brute-force reference implementations.

Everything here is quadratic or worse on purpose and imports nothing from
the construction modules, so a bug there cannot hide a bug here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWord

DEFAULT_LIMIT = 100_000


def _symbols(text, limit):
    syms = text.symbols.tolist() if hasattr(text, "symbols") else list(text)
    if limit is not None and len(syms) > limit:
        raise ValueError(f"oracle refused input of length {len(syms)} (limit {limit})")
    return syms


def _encode(s):
    """Fixed-width big-endian bytes, so byte order equals symbol order."""
    top = max(s, default=0)
    if min(s, default=0) < 0 or top >= 1 << 32:
        return None
    width = 1 if top < 1 << 8 else 2 if top < 1 << 16 else 4
    return width, b"".join(c.to_bytes(width, "big") for c in s)


def brute_force_sa(text, limit=DEFAULT_LIMIT) -> list[int]:
    s = _symbols(text, limit)
    enc = _encode(s)
    if enc is None:
        return sorted(range(len(s)), key=lambda i: s[i:])
    width, b = enc
    return sorted(range(len(s)), key=lambda i: b[i * width:])


def oracle_pss_nss(text, limit=DEFAULT_LIMIT) -> tuple[list[int], list[int]]:
    """By definition, with suffix comparisons answered by brute-force ranks."""
    s = _symbols(text, limit)
    n = len(s)
    rank = [0] * n
    for r, i in enumerate(brute_force_sa(s, limit)):
        rank[i] = r
    pss, nss = [], []
    for i in range(n):
        ri = rank[i]
        pss.append(max((j for j in range(i) if rank[j] < ri), default=-1))
        nss.append(min((j for j in range(i + 1, n) if rank[j] < ri), default=n))
    return pss, nss


def is_lyndon(word) -> bool:
    w = list(word)
    if not w:
        raise EmptyWord("a Lyndon word must be non-empty")
    return all(w < w[k:] for k in range(1, len(w)))


def oracle_ps_set(text, i, limit=DEFAULT_LIMIT) -> set[int]:
    _, nss = oracle_pss_nss(text, limit)
    return {j for j in range(i) if nss[j] == i}


@dataclass(frozen=True)
class CanonicalGrouping:
    """Lyndon groups in lexicographic order: ``(context, members)`` pairs.

    ``members`` are ascending; ``ranked`` lists them in suffix order.
    """

    groups: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    ranked: tuple[tuple[int, ...], ...]

    @property
    def starts(self) -> list[int]:
        out, pos = [], 0
        for _, members in self.groups:
            out.append(pos)
            pos += len(members)
        return out

    @property
    def contexts(self) -> list[tuple[int, ...]]:
        return [ctx for ctx, _ in self.groups]

    @property
    def partition(self) -> list[list[int]]:
        return [list(m) for _, m in self.groups]


def canonical_lyndon_grouping(text, limit=DEFAULT_LIMIT) -> CanonicalGrouping:
    s = _symbols(text, limit)
    sa = brute_force_sa(s, limit)
    _, nss = oracle_pss_nss(s, limit)
    groups, ranked = [], []
    prev = None
    for i in sa:
        ctx = tuple(s[i:nss[i]])
        if ctx != prev:
            groups.append((ctx, []))
            ranked.append([])
            prev = ctx
        groups[-1][1].append(i)
        ranked[-1].append(i)
    return CanonicalGrouping(
        tuple((ctx, tuple(sorted(m))) for ctx, m in groups),
        tuple(tuple(r) for r in ranked),
    )

"""Previous-smaller-suffix tree with last-child marks, and derived nss.

The marked pss array has ``n + 1`` cells.  Cell ``k`` belongs to text
position ``k - 1`` (cell 0 is the artificial root) and stores
``pss[k - 1] + 1`` in its low bits, so the stored value is directly the
index of the parent's cell.  The sign bit flags "last child of its parent".
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .text import IndexWidth, Text, choose_width


@numba.njit(cache=True, nogil=True)
def build_pss_cells(s, P, nss):
    """Fill ``P`` with shifted parents and ``nss`` with next-smaller-suffix.

    Right-to-left: the Lyndon prefix of suffix ``i`` grows from ``s[i]`` by
    absorbing the Lyndon prefix ``v`` of the current right neighbour ``e``
    while ``u < v`` as words; each absorbed ``e`` is a child of ``i``.
    Word comparison costs at most ``min(|u|, |v|) + 1`` symbols.
    ``nss`` may alias any scratch buffer of ``n`` cells.
    """
    n = s.shape[0]
    P[0] = 0
    for i in range(n - 1, -1, -1):
        P[i + 1] = 0
        e = i + 1
        while e < n:
            f = nss[e]
            lu = e - i
            lv = f - e
            m = lu if lu < lv else lv
            t = 0
            while t < m and s[i + t] == s[e + t]:
                t += 1
            if t < m:
                if s[i + t] > s[e + t]:
                    break
            elif lu >= lv:
                break
            P[e + 1] = i + 1
            e = f
        nss[i] = e


@numba.njit(cache=True, nogil=True)
def mark_cells(P, mark, vmask):
    """Right-to-left marking scan over shifted parent cells.

    The parent's cell doubles as a "child already seen" flag until the scan
    reaches the parent itself and overwrites it with its own status.
    """
    n = P.shape[0] - 1
    for k in range(n, 0, -1):
        par = P[k] & vmask
        if P[par] >= 0:
            P[k] = par | mark
            P[par] = P[par] | mark
        else:
            P[k] = par


@numba.njit(cache=True, nogil=True)
def _nss_from_parents(pss, out):
    n = pss.shape[0]
    for i in range(n - 1, -1, -1):
        j = i + 1
        while j < n and pss[j] >= i:
            j = out[j]
        out[i] = j


@dataclass(frozen=True)
class MarkedPss:
    cells: np.ndarray
    width: IndexWidth

    @property
    def n(self) -> int:
        return self.cells.shape[0] - 1

    def parents(self) -> np.ndarray:
        return (self.cells[1:].astype(np.int64) & self.width.value_mask) - 1

    def last_child_flags(self) -> np.ndarray:
        return self.cells[1:] < 0

    def parent(self, i: int) -> int:
        return int(self.cells[i + 1] & self.width.value_mask) - 1

    def is_last_child(self, i: int) -> bool:
        return bool(self.cells[i + 1] < 0)


def build_marked_pss(text: Text, width: IndexWidth | None = None, scratch: np.ndarray | None = None) -> MarkedPss:
    """Marked pss for ``text``; ``scratch`` (n cells) receives nss."""
    width = width or choose_width(text.n)
    P = np.empty(text.n + 1, dtype=width.dtype)
    if scratch is None:
        scratch = np.empty(text.n, dtype=width.dtype)
    build_pss_cells(text.symbols, P, scratch)
    mark_cells(P, width.mark, width.value_mask)
    return MarkedPss(P, width)


def compute_pss(text: Text) -> np.ndarray:
    width = choose_width(text.n)
    P = np.empty(text.n + 1, dtype=width.dtype)
    build_pss_cells(text.symbols, P, np.empty(text.n, dtype=width.dtype))
    return P[1:].astype(np.int64) - 1


def mark_last_children(pss, width: IndexWidth | None = None) -> MarkedPss:
    pss = np.asarray(pss, dtype=np.int64)
    width = width or choose_width(max(pss.shape[0], 1))
    P = np.empty(pss.shape[0] + 1, dtype=width.dtype)
    P[0] = 0
    P[1:] = pss + 1
    mark_cells(P, width.mark, width.value_mask)
    return MarkedPss(P, width)


def derive_nss(pss) -> np.ndarray:
    pss = np.asarray(pss, dtype=np.int64)
    out = np.empty(pss.shape[0], dtype=np.int64)
    _nss_from_parents(pss, out)
    return out


def lyndon_lengths(nss) -> np.ndarray:
    nss = np.asarray(nss, dtype=np.int64)
    return nss - np.arange(nss.shape[0], dtype=np.int64)


def ps_set(mpss: MarkedPss, i: int) -> list[int]:
    """Suffixes whose next smaller suffix is ``i``, by walking last-child links."""
    if i < 1 or mpss.parent(i) + 1 >= i:
        return []
    out = [i - 1]
    j = i - 1
    while mpss.is_last_child(j):
        j = mpss.parent(j)
        out.append(j)
    return out

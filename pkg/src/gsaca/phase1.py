"""Refinement of the initial character grouping into the Lyndon grouping.

Layout of the shared arrays while Phase I runs:

* ``A[gs..ge]`` of an unprocessed Lyndon group holds its members in
  ascending order; a strongly preliminary group keeps its size in
  ``A[gs]`` and nothing meaningful after it.
* ``I[s]`` is the start of the group containing ``s``.
* Once a group is processed its cells are dead, so ``A[gs]`` is reused to
  remember ``ge``.  Hopping ``k -> A[k] + 1`` from 0 afterwards enumerates
  the group starts in ascending order, which is how the grouping is read
  back without a separate list of processed starts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np

from .lyndon import MarkedPss
from .text import IndexWidth, Text


@numba.njit(cache=True, nogil=True)
def initial_grouping_kernel(s, P, A, I, sigma, vmask):
    """Leaf-c bucket (Lyndon, members ascending) then inner-c bucket (size cell)."""
    n = s.shape[0]
    leaf = np.zeros(sigma, np.int64)
    inner = np.zeros(sigma, np.int64)
    for i in range(n - 1, -1, -1):
        # S_i < S_{i+1} exactly when i is the parent of i + 1
        if i + 1 < n and (P[i + 2] & vmask) == i + 1:
            inner[s[i]] += 1
        else:
            leaf[s[i]] += 1
    # leaf[c] -> leaf bucket start, inner[c] -> inner bucket start
    pos = 0
    for c in range(sigma):
        lc = leaf[c]
        ic = inner[c]
        leaf[c] = pos
        inner[c] = pos + lc
        if ic > 0:
            A[pos + lc] = ic
        pos += lc + ic
    # left-to-right so each leaf bucket is filled in ascending order
    cursor = leaf.copy()
    for i in range(n):
        c = s[i]
        if i + 1 < n and (P[i + 2] & vmask) == i + 1:
            I[i] = inner[c]
        else:
            I[i] = leaf[c]
            A[cursor[c]] = i
            cursor[c] += 1


@numba.njit(cache=True, nogil=True)
def reorder_lyndon_kernel(A, I, sub, ptr, mark, vmask):
    """Move the ascending parents ``sub`` into new Lyndon groups.

    ``ptr[k]`` is the prefetched old group start of ``sub[k]``; ``sub`` is
    clobbered (it ends up holding write positions).
    """
    for k in range(sub.shape[0] - 1, -1, -1):
        gp = ptr[k]
        sz = A[gp] - 1
        A[gp] = sz
        w = gp + sz
        A[w] = sub[k] | mark
        sub[k] = w
    # Same order again: the cell written at an emptied group's start is the
    # last one of its group visited here, so its mark survives until needed.
    for k in range(sub.shape[0] - 1, -1, -1):
        w = sub[k]
        gp = ptr[k]
        g = A[gp]
        ns = gp if g < 0 else gp + g
        v = A[w] & vmask
        I[v] = ns
        A[w] = v


@numba.njit(cache=True, nogil=True)
def reorder_preliminary_kernel(A, I, sub, ptr):
    """Move ``sub`` into new strongly preliminary groups; ``ptr`` is clobbered."""
    m = sub.shape[0]
    for k in range(m):
        A[ptr[k]] -= 1
    for k in range(m):
        gp = ptr[k]
        ns = gp + A[gp]
        I[sub[k]] = ns
        ptr[k] = ns
        A[ns] = 0
    for k in range(m):
        A[ptr[k]] += 1


@numba.njit(cache=True, nogil=True)
def process_group_kernel(A, I, P, B, KC, gs, ge, mark, vmask):
    """Process the Lyndon group ``A[gs..ge]``; returns possibly regrown B, KC."""
    size = ge - gs + 1
    if B.shape[0] < size:
        B = np.empty(0, A.dtype)
        B = np.empty(size, A.dtype)

    # (a) one scan: runs of equal parents; F1 into A, N1 to the tail of B,
    # (parent, key) pairs for run length >= 2 to the front of B
    f1 = 0
    n1 = 0
    m2 = 0
    maxkey = 3
    k = gs
    while k <= ge:
        p = (P[A[k] + 1] & vmask) - 1
        if p < 0:
            k += 1
            continue
        run = 1
        while k + run <= ge and (P[A[k + run] + 1] & vmask) - 1 == p:
            run += 1
        finalist = P[A[k + run - 1] + 1] < 0
        if run == 1:
            if finalist:
                A[gs + f1] = p
                f1 += 1
            else:
                n1 += 1
                B[size - n1] = p
        else:
            key = 2 * run if finalist else 2 * run + 1
            B[m2] = p
            B[m2 + 1] = key
            m2 += 2
            if key > maxkey:
                maxkey = key
        k += run
    if KC.shape[0] <= maxkey:
        KC = np.empty(0, A.dtype)
        KC = np.zeros(maxkey + 1, A.dtype)
    for t in range(1, m2, 2):
        KC[B[t]] += 1

    # (b) N1 after F1, then a stable counting sort of the rest by key
    for t in range(n1):
        A[gs + f1 + t] = B[size - 1 - t]
    a1 = f1 + n1
    base = gs + a1
    for key in range(4, maxkey + 1):
        c = KC[key]
        KC[key] = base
        base += c
    for t in range(0, m2, 2):
        key = B[t + 1]
        A[KC[key]] = B[t]
        KC[key] += 1
    total = base - gs

    # (c) pull group pointers next to the parents
    for t in range(total):
        B[t] = I[A[gs + t]]

    # (d) sub-buckets by decreasing key; KC[key] is now the end of its bucket
    for key in range(maxkey, 3, -1):
        lo = KC[key - 1] if key > 4 else gs + a1
        hi = KC[key]
        if lo < hi:
            if key & 1:
                reorder_preliminary_kernel(A, I, A[lo:hi], B[lo - gs:hi - gs])
            else:
                reorder_lyndon_kernel(A, I, A[lo:hi], B[lo - gs:hi - gs], mark, vmask)
    if n1 > 0:
        reorder_preliminary_kernel(A, I, A[gs + f1:gs + a1], B[f1:a1])
    if f1 > 0:
        reorder_lyndon_kernel(A, I, A[gs:gs + f1], B[:f1], mark, vmask)
    for key in range(4, maxkey + 1):
        KC[key] = 0

    A[gs] = ge
    return B, KC


@numba.njit(cache=True, nogil=True)
def phase1_kernel(A, I, P, mark, vmask):
    """Traverse groups from the highest down; returns peak scratch cells."""
    n = A.shape[0]
    B = np.empty(0, A.dtype)
    KC = np.zeros(2, A.dtype)
    peak = KC.shape[0]
    ge = n - 1
    while ge >= 0:
        gs = I[A[ge]]
        B, KC = process_group_kernel(A, I, P, B, KC, gs, ge, mark, vmask)
        c = B.shape[0] + KC.shape[0]
        if c > peak:
            peak = c
        ge = gs - 1
    return peak


@numba.njit(cache=True, nogil=True)
def count_groups_kernel(A):
    n = A.shape[0]
    k = 0
    g = 0
    while k < n:
        k = A[k] + 1
        g += 1
    return g


@numba.njit(cache=True, nogil=True)
def finalize_kernel(A, I, C):
    """Fill ``C`` with ascending starts and turn ``I`` into group ids."""
    n = A.shape[0]
    k = 0
    r = 0
    while k < n:
        e = A[k]
        C[r] = k
        A[k] = r
        r += 1
        k = e + 1
    for s in range(n):
        I[s] = A[I[s]]


@dataclass
class Phase1State:
    """Mutable Phase I arrays; ``B`` and ``key_counts`` grow on demand."""

    A: np.ndarray
    I: np.ndarray
    width: IndexWidth
    B: np.ndarray = field(default=None)
    key_counts: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.B is None:
            self.B = np.empty(0, self.width.dtype)
        if self.key_counts is None:
            self.key_counts = np.zeros(2, self.width.dtype)

    @property
    def n(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class LyndonGrouping:
    starts: np.ndarray
    group_of: np.ndarray

    @property
    def n(self) -> int:
        return self.group_of.shape[0]

    @property
    def group_count(self) -> int:
        return self.starts.shape[0]

    def sizes(self) -> np.ndarray:
        ends = np.append(self.starts[1:].astype(np.int64), self.n)
        return ends - self.starts

    def partition(self) -> list[list[int]]:
        """Members of each group (ascending), in group order."""
        out = [[] for _ in range(self.group_count)]
        for s, g in enumerate(self.group_of.tolist()):
            out[g].append(s)
        return out


def initial_grouping(text: Text, mpss: MarkedPss, A: np.ndarray | None = None, I: np.ndarray | None = None) -> Phase1State:
    width = mpss.width
    if A is None:
        A = np.empty(text.n, width.dtype)
    if I is None:
        I = np.empty(text.n, width.dtype)
    initial_grouping_kernel(text.symbols, mpss.cells, A, I, text.sigma, width.value_mask)
    return Phase1State(A, I, width)


def process_group(state: Phase1State, gs: int, ge: int, mpss: MarkedPss) -> None:
    w = state.width
    state.B, state.key_counts = process_group_kernel(
        state.A, state.I, mpss.cells, state.B, state.key_counts, gs, ge, w.mark, w.value_mask
    )


def reorder_into_lyndon(state: Phase1State, parents) -> None:
    """Stand-alone Lyndon reorder of an ascending list of parents."""
    sub = np.asarray(parents, dtype=state.width.dtype).copy()
    if sub.size:
        reorder_lyndon_kernel(state.A, state.I, sub, state.I[sub], state.width.mark, state.width.value_mask)


def reorder_into_preliminary(state: Phase1State, parents) -> None:
    sub = np.asarray(parents, dtype=state.width.dtype).copy()
    if sub.size:
        reorder_preliminary_kernel(state.A, state.I, sub, state.I[sub])


def finalize_grouping(state: Phase1State, C: np.ndarray | None = None) -> LyndonGrouping:
    if C is None:
        C = np.empty(count_groups_kernel(state.A), state.width.dtype)
    finalize_kernel(state.A, state.I, C)
    return LyndonGrouping(C, state.I)


def run_phase1(state: Phase1State, mpss: MarkedPss, on_group=None) -> LyndonGrouping:
    """Refine ``state`` into the Lyndon grouping.

    ``on_group(state, gs, ge)`` is called before each group is processed;
    giving it switches to a Python-driven traversal over the same kernels.
    """
    w = state.width
    if on_group is None:
        phase1_kernel(state.A, state.I, mpss.cells, w.mark, w.value_mask)
    else:
        ge = state.n - 1
        while ge >= 0:
            gs = int(state.I[state.A[ge]])
            on_group(state, gs, ge)
            process_group(state, gs, ge, mpss)
            ge = gs - 1
    return finalize_grouping(state)

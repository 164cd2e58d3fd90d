"""Refine a Lyndon grouping into the suffix array.

Both variants scan ``A`` left to right; a marked entry ``i`` means the set
of suffixes whose next smaller suffix is ``i`` is non-empty, and that set is
enumerated by walking up the pss tree from ``i - 1`` while the last-child
flag holds.  Each enumerated suffix is written at its group's current start
pointer ``C[G[v]]``, marked iff ``pss[v] + 1 < v``.
"""

from __future__ import annotations

import numba
import numpy as np

from .lyndon import MarkedPss
from .phase1 import LyndonGrouping

DEFAULT_QUEUE_CAPACITY = 1 << 10


@numba.njit(cache=True, nogil=True)
def bfs_kernel(A, C, G, P, Q, mark, vmask):
    """Breadth-first insertion with a ring buffer ``Q`` of capacity ``len(Q)``.

    Returns the final scan cursor (``n`` on success).
    """
    n = A.shape[0]
    w = Q.shape[0]
    empty = vmask
    A[:] = empty
    if n == 1:
        A[0] = 0
        return 1
    # n - 1 goes first and is always marked: the sentinel is the unique minimum
    A[0] = (n - 1) | mark
    head = 0
    size = 0
    cur = 0
    while True:
        while size < w and cur < n and A[cur] != empty:
            x = A[cur]
            if x < 0:
                v = x & vmask
                A[cur] = v
                tail = head + size
                if tail >= w:
                    tail -= w
                Q[tail] = v - 1
                size += 1
            cur += 1
        if size == 0:
            break
        for _ in range(size):
            v = Q[head]
            head += 1
            if head == w:
                head = 0
            size -= 1
            pc = P[v + 1]
            par = (pc & vmask) - 1
            if pc < 0:
                tail = head + size
                if tail >= w:
                    tail -= w
                Q[tail] = par
                size += 1
            g = G[v]
            pos = C[g]
            if par + 1 < v:
                A[pos] = v | mark
            else:
                A[pos] = v
            C[g] = pos + 1
    return cur


@numba.njit(cache=True, nogil=True)
def reference_kernel(A, C, G, P, mark, vmask):
    n = A.shape[0]
    A[:] = vmask
    if n == 1:
        A[0] = 0
        return 1
    A[0] = (n - 1) | mark
    for i in range(n):
        x = A[i]
        if x == vmask:
            return i
        if x < 0:
            A[i] = x & vmask
            p = (x & vmask) - 1
            while True:
                pc = P[p + 1]
                par = (pc & vmask) - 1
                g = G[p]
                pos = C[g]
                if par + 1 < p:
                    A[pos] = p | mark
                else:
                    A[pos] = p
                C[g] = pos + 1
                if pc >= 0:
                    break
                p = par
    return n


def _check(cur: int, n: int) -> None:
    if cur != n:
        raise RuntimeError(f"Phase II stalled at position {cur} of {n}; grouping and pss disagree")


def run_phase2_bfs(
    grouping: LyndonGrouping,
    mpss: MarkedPss,
    capacity: int = DEFAULT_QUEUE_CAPACITY,
    out: np.ndarray | None = None,
    consume: bool = False,
) -> np.ndarray:
    """Suffix array from a Lyndon grouping; output does not depend on ``capacity``.

    With ``consume=True`` the grouping's start array is used as the pointer
    array in place instead of being copied.
    """
    if capacity < 1:
        raise ValueError("queue capacity must be at least 1")
    w = mpss.width
    n = grouping.n
    A = np.empty(n, w.dtype) if out is None else out
    C = grouping.starts if consume else grouping.starts.copy()
    Q = np.empty(min(capacity, max(n, 1)), w.dtype)
    _check(bfs_kernel(A, C, grouping.group_of, mpss.cells, Q, w.mark, w.value_mask), n)
    return A


def run_phase2_reference(grouping: LyndonGrouping, mpss: MarkedPss) -> np.ndarray:
    w = mpss.width
    A = np.empty(grouping.n, w.dtype)
    C = grouping.starts.copy()
    _check(reference_kernel(A, C, grouping.group_of, mpss.cells, w.mark, w.value_mask), grouping.n)
    return A

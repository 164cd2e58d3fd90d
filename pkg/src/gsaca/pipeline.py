"""Text in, suffix array out.

Storage plan (cells of the chosen width):

* ``SA`` (n): output buffer.  It holds nss during initialisation, the
  Phase I group storage after that, and finally the suffix array.
* ``P`` (n + 1): marked pss, alive throughout.
* ``I`` (n): group pointers in Phase I, group ids in Phase II.
* Phase I scratch (B and key counters) grows inside the kernel and is gone
  before Phase II; ``C`` (one cell per Lyndon group) and the queue exist
  only in Phase II.

``peak_aux_bytes`` counts everything except the text and the output SA.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numba
import numpy as np

from . import lyndon, phase1, phase2
from .errors import WidthTooSmall
from .text import IndexWidth, Text, choose_width


class AllocationTracker:
    """Byte counter for auxiliary allocations; records the high-water mark."""

    def __init__(self):
        self.live: dict[str, int] = {}
        self.current = 0
        self.peak = 0

    def empty(self, name: str, shape, dtype) -> np.ndarray:
        arr = np.empty(shape, dtype)
        self.add(name, arr.nbytes)
        return arr

    def add(self, name: str, nbytes: int) -> None:
        self.release(name)
        self.live[name] = int(nbytes)
        self.current += int(nbytes)
        self.peak = max(self.peak, self.current)

    def transient(self, nbytes: int) -> None:
        """Something of ``nbytes`` existed briefly on top of the live set."""
        self.peak = max(self.peak, self.current + int(nbytes))

    def release(self, name: str) -> None:
        self.current -= self.live.pop(name, 0)


@dataclass(frozen=True)
class RunStats:
    """Timings in seconds; ``peak_aux_bytes`` excludes the text and the SA."""

    init_time: float
    phase1_time: float
    phase2_time: float
    peak_aux_bytes: int
    width: IndexWidth
    group_count: int
    n: int

    @property
    def total_time(self) -> float:
        return self.init_time + self.phase1_time + self.phase2_time

    @property
    def aux_bytes_per_char(self) -> float:
        return self.peak_aux_bytes / self.n


def resolve_width(n: int, forced_width) -> IndexWidth:
    if forced_width is None:
        return choose_width(n)
    width = forced_width if isinstance(forced_width, IndexWidth) else IndexWidth.from_bits(forced_width)
    if n > width.max_representable:
        raise WidthTooSmall(f"{width.bits}-bit cells cannot index a text of length {n}")
    return width


def suffix_array_with_stats(
    text: Text,
    queue_capacity: int = phase2.DEFAULT_QUEUE_CAPACITY,
    forced_width=None,
    tracker: AllocationTracker | None = None,
) -> tuple[np.ndarray, RunStats]:
    n = text.n
    width = resolve_width(n, forced_width)
    if queue_capacity < 1:
        raise ValueError("queue capacity must be at least 1")
    tracker = tracker or AllocationTracker()
    dt = width.dtype
    isz = width.itemsize
    mark, vmask = width.mark, width.value_mask

    t0 = time.perf_counter()
    SA = np.empty(n, dt)
    P = tracker.empty("pss", n + 1, dt)
    lyndon.build_pss_cells(text.symbols, P, SA)
    lyndon.mark_cells(P, mark, vmask)
    I = tracker.empty("group_pointers", n, dt)
    sigma = text.sigma
    tracker.transient(3 * sigma * 8)
    phase1.initial_grouping_kernel(text.symbols, P, SA, I, sigma, vmask)

    t1 = time.perf_counter()
    scratch_cells = phase1.phase1_kernel(SA, I, P, mark, vmask)
    tracker.transient(scratch_cells * isz)
    groups = phase1.count_groups_kernel(SA)
    C = tracker.empty("group_starts", groups, dt)
    phase1.finalize_kernel(SA, I, C)

    t2 = time.perf_counter()
    Q = tracker.empty("queue", min(queue_capacity, n), dt)
    cur = phase2.bfs_kernel(SA, C, I, P, Q, mark, vmask)
    phase2._check(cur, n)
    t3 = time.perf_counter()
    for name in ("queue", "group_starts", "group_pointers", "pss"):
        tracker.release(name)

    stats = RunStats(t1 - t0, t2 - t1, t3 - t2, tracker.peak, width, groups, n)
    return SA, stats


def suffix_array(text: Text, queue_capacity: int = phase2.DEFAULT_QUEUE_CAPACITY, forced_width=None) -> np.ndarray:
    return suffix_array_with_stats(text, queue_capacity, forced_width)[0]


def warm_up(widths=(IndexWidth.W32, IndexWidth.W64)) -> None:
    """Load or compile the kernels so later timings exclude JIT cost."""
    from .text import make_text

    for w in widths:
        suffix_array(make_text(b"acedcebceece"), forced_width=w)


def lyndon_grouping(text: Text, forced_width=None) -> tuple[phase1.LyndonGrouping, lyndon.MarkedPss]:
    """Initialisation and Phase I only."""
    width = resolve_width(text.n, forced_width)
    mpss = lyndon.build_marked_pss(text, width)
    state = phase1.initial_grouping(text, mpss)
    return phase1.run_phase1(state, mpss), mpss


@numba.njit(cache=True, nogil=True)
def _adjacent_sorted(s, sa):
    # S_a < S_b iff s[a] < s[b], or s[a] == s[b] and S_{a+1} < S_{b+1};
    # equal first symbols never involve the unique terminal, so a+1, b+1 < n
    n = sa.shape[0]
    rank = np.empty(n, np.int64)
    for k in range(n):
        rank[sa[k]] = k
    for k in range(n - 1):
        a = sa[k]
        b = sa[k + 1]
        if s[a] > s[b]:
            return False
        if s[a] == s[b] and rank[a + 1] > rank[b + 1]:
            return False
    return True


def verify_suffix_array(text: Text, sa) -> bool:
    """Permutation check plus strict order of every adjacent pair.

    Pairs are compared by first symbol and then by the rank of the next
    suffix, which is linear even when adjacent suffixes share long prefixes.
    """
    s = text.symbols
    n = s.shape[0]
    try:
        sa = np.asarray(sa, dtype=np.int64)
    except (TypeError, ValueError, OverflowError):
        return False
    if sa.ndim != 1 or sa.shape[0] != n:
        return False
    if n and (sa.min() < 0 or sa.max() >= n):
        return False
    seen = np.zeros(n, dtype=bool)
    seen[sa] = True
    if not seen.all():
        return False
    return bool(_adjacent_sorted(s, sa))

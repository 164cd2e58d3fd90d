"""Input texts, sentinel policies and index-width selection."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InputContainsNul, InputTooLarge

APPEND_SENTINEL = "append-sentinel"
REMAP = "remap"
POLICIES = (APPEND_SENTINEL, REMAP)


class IndexWidth(enum.Enum):
    """Cell width used for every index array of one construction.

    The top bit of a cell is reserved for a mark, and the largest unmarked
    value serves as the EMPTY sentinel, hence ``max_n = 2**(bits-1) - 2``.
    """

    W32 = 32
    W64 = 64

    @property
    def bits(self) -> int:
        return self.value

    @property
    def dtype(self) -> np.dtype:
        # Signed storage: the sign bit is the mark bit.
        return np.dtype(np.int32 if self is IndexWidth.W32 else np.int64)

    @property
    def mark(self) -> int:
        return -(1 << (self.bits - 1))

    @property
    def value_mask(self) -> int:
        return (1 << (self.bits - 1)) - 1

    @property
    def empty(self) -> int:
        return self.value_mask

    @property
    def max_representable(self) -> int:
        return (1 << (self.bits - 1)) - 2

    @property
    def itemsize(self) -> int:
        return self.bits // 8

    @classmethod
    def from_bits(cls, bits: int) -> "IndexWidth":
        try:
            return cls(int(bits))
        except ValueError:
            raise ValueError(f"unsupported index width: {bits}") from None


def choose_width(n: int) -> IndexWidth:
    if n < 1:
        raise ValueError("text length must be at least 1")
    if n <= IndexWidth.W32.max_representable:
        return IndexWidth.W32
    if n <= IndexWidth.W64.max_representable:
        return IndexWidth.W64
    raise InputTooLarge(f"text of length {n} exceeds the 64-bit index bound")


@dataclass(frozen=True)
class Text:
    """Symbol codes ending in a unique minimal terminal symbol.

    ``symbols`` is a read-only ``uint8`` (append-sentinel) or ``uint16``
    (remap) array.  ``sigma`` is one more than the largest code.
    """

    symbols: np.ndarray
    policy: str = APPEND_SENTINEL

    @property
    def n(self) -> int:
        return int(self.symbols.shape[0])

    def __len__(self) -> int:
        return self.n

    @property
    def sigma(self) -> int:
        return int(self.symbols.max()) + 1

    def to_bytes(self) -> bytes:
        """Recover the raw input (sentinel dropped, remap reversed)."""
        body = self.symbols[:-1]
        if self.policy == REMAP:
            body = body - 1
        return body.astype(np.uint8).tobytes()

    def validate(self) -> None:
        """Check the unique-minimal-terminal invariant; raises ValueError."""
        s = self.symbols
        if s.ndim != 1 or s.shape[0] < 1:
            raise ValueError("text must be a non-empty 1-d array")
        if s.shape[0] > 1 and int(s[:-1].min()) <= int(s[-1]):
            raise ValueError("last symbol is not a strict unique minimum")


def make_text(raw: bytes | bytearray | memoryview | np.ndarray, policy: str = APPEND_SENTINEL) -> Text:
    """Build a :class:`Text` of length ``len(raw) + 1`` from raw bytes."""
    if policy not in POLICIES:
        raise ValueError(f"unknown sentinel policy {policy!r}; expected one of {POLICIES}")
    body = np.frombuffer(raw, dtype=np.uint8) if not isinstance(raw, np.ndarray) else raw.astype(np.uint8, copy=False)
    m = body.shape[0]
    if m + 1 > IndexWidth.W64.max_representable:
        raise InputTooLarge(f"input of {m} bytes exceeds the 64-bit index bound")
    if policy == APPEND_SENTINEL:
        if m and not body.all():
            pos = int(np.flatnonzero(body == 0)[0])
            raise InputContainsNul(f"input contains a zero byte at offset {pos}")
        symbols = np.empty(m + 1, dtype=np.uint8)
        symbols[:m] = body
    else:
        symbols = np.empty(m + 1, dtype=np.uint16)
        np.add(body, 1, out=symbols[:m], dtype=np.uint16)
    symbols[m] = 0
    symbols.flags.writeable = False
    return Text(symbols, policy)


def text_from_symbols(symbols) -> Text:
    """Wrap already-terminated symbol codes (used by tests and oracles)."""
    arr = np.asarray(symbols)
    if arr.dtype.kind not in "ui" or (arr.size and int(arr.min()) < 0):
        raise ValueError("symbols must be non-negative integers")
    if arr.size and int(arr.max()) >= 1 << 16:
        raise ValueError("symbols must fit in 16 bits")
    arr = arr.astype(np.uint8 if arr.size == 0 or int(arr.max()) < 256 else np.uint16)
    arr.flags.writeable = False
    text = Text(arr, REMAP if arr.dtype == np.uint16 else APPEND_SENTINEL)
    text.validate()
    return text

import numpy as np
import pytest

from gsaca.errors import InputContainsNul, InputTooLarge
from gsaca.text import APPEND_SENTINEL, REMAP, IndexWidth, choose_width, make_text, text_from_symbols


def test_append_sentinel_running_example():
    t = make_text(b"acedcebceece")
    assert t.n == 13
    assert t.symbols[-1] == 0
    assert t.symbols[:-1].min() > 0
    assert t.to_bytes() == b"acedcebceece"


def test_empty_input_is_sentinel_only():
    t = make_text(b"")
    assert t.n == 1
    assert t.symbols.tolist() == [0]


def test_remap_shifts_bytes():
    t = make_text(bytes([0x00, 0x41]), REMAP)
    assert t.symbols.tolist() == [1, 66, 0]
    assert t.symbols.dtype == np.uint16
    assert t.to_bytes() == bytes([0x00, 0x41])


def test_nul_rejected_with_offset():
    with pytest.raises(InputContainsNul, match="offset 2") as exc:
        make_text(b"ab\0c", APPEND_SENTINEL)
    assert exc.value.code == "INPUT_CONTAINS_NUL"


def test_remap_full_byte_range():
    raw = bytes(range(256))
    t = make_text(raw, REMAP)
    assert t.sigma == 257
    t.validate()


def test_symbols_read_only():
    t = make_text(b"abc")
    with pytest.raises(ValueError):
        t.symbols[0] = 5


def test_unknown_policy():
    with pytest.raises(ValueError):
        make_text(b"a", "nope")


@pytest.mark.parametrize(
    "n, width",
    [(1, IndexWidth.W32), (13, IndexWidth.W32), (2**31 - 2, IndexWidth.W32), (2**31 - 1, IndexWidth.W64), (2**63 - 2, IndexWidth.W64)],
)
def test_choose_width_boundaries(n, width):
    assert choose_width(n) is width


def test_choose_width_too_large():
    with pytest.raises(InputTooLarge):
        choose_width(2**63 - 1)


def test_width_constants():
    w = IndexWidth.W32
    assert w.mark == -(2**31)
    assert w.value_mask == 2**31 - 1
    assert w.empty == w.value_mask
    assert w.dtype == np.int32 and w.itemsize == 4
    assert IndexWidth.from_bits(64) is IndexWidth.W64
    with pytest.raises(ValueError):
        IndexWidth.from_bits(16)


def test_text_from_symbols_checks_terminal():
    assert text_from_symbols([2, 1, 0]).n == 3
    with pytest.raises(ValueError):
        text_from_symbols([2, 0, 0])
    with pytest.raises(ValueError):
        text_from_symbols([0, 1])

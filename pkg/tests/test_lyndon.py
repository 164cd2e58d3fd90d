import itertools

import numpy as np
import pytest

from conftest import RUNNING_NSS, RUNNING_PSS
from gsaca.lyndon import (
    build_marked_pss,
    compute_pss,
    derive_nss,
    lyndon_lengths,
    mark_last_children,
    ps_set,
)
from gsaca.oracles import is_lyndon, oracle_ps_set, oracle_pss_nss
from gsaca.text import IndexWidth, make_text


def test_running_rows(running):
    pss = compute_pss(running)
    assert pss.tolist() == RUNNING_PSS
    assert derive_nss(pss).tolist() == RUNNING_NSS


def test_small_cases():
    assert compute_pss(make_text(b"")).tolist() == [-1]
    assert compute_pss(make_text(b"ab")).tolist() == [-1, 0, -1]
    assert derive_nss([-1]).tolist() == [1]
    assert derive_nss([-1, 0, -1]).tolist() == [2, 2, 3]


def test_last_child_flags_running():
    m = mark_last_children(RUNNING_PSS)
    assert set(np.flatnonzero(m.last_child_flags()).tolist()) == {3, 5, 6, 9, 10, 11, 12}
    assert m.parents().tolist() == RUNNING_PSS


def test_last_child_flags_small():
    assert np.flatnonzero(mark_last_children([-1]).last_child_flags()).tolist() == [0]
    assert np.flatnonzero(mark_last_children([-1, 0, -1]).last_child_flags()).tolist() == [1, 2]


def test_lyndon_lengths_running():
    lens = lyndon_lengths(RUNNING_NSS)
    assert lens.tolist() == [12, 3, 1, 1, 2, 1, 6, 3, 1, 1, 2, 1, 1]
    s = b"acedcebceece\0"
    assert s[7:7 + lens[7]] == b"cee"


def test_ps_sets_running(running):
    m = build_marked_pss(running)
    assert sorted(ps_set(m, 4)) == [1, 3]
    assert sorted(ps_set(m, 6)) == [4, 5]
    assert sorted(ps_set(m, 12)) == [0, 6, 10, 11]
    assert ps_set(m, 0) == []


def test_marked_cells_are_shifted(running):
    m = build_marked_pss(running, IndexWidth.W64)
    assert m.cells.dtype == np.int64
    assert m.n == 13
    assert m.cells[0] == 0 or m.cells[0] < 0
    # cell 1 is position 0, whose parent is the root
    assert m.cells[1] & m.width.value_mask == 0


@pytest.mark.parametrize("length", range(0, 8))
def test_against_oracle_binary_ternary(length):
    for w in itertools.product(b"abc", repeat=length):
        t = make_text(bytes(w))
        pss, nss = oracle_pss_nss(t)
        got = compute_pss(t)
        assert got.tolist() == pss
        assert derive_nss(got).tolist() == nss
        m = build_marked_pss(t)
        for i in range(t.n):
            assert set(ps_set(m, i)) == oracle_ps_set(t, i)


def test_lyndon_prefixes_are_lyndon():
    rng = np.random.default_rng(5)
    for _ in range(50):
        raw = bytes(rng.integers(97, 100, int(rng.integers(1, 60))).astype(np.uint8))
        t = make_text(raw)
        s = t.symbols.tolist()
        nss = derive_nss(compute_pss(t))
        for i in range(t.n):
            assert is_lyndon(s[i:nss[i]])


def test_fibonacci_and_unary_shapes():
    for raw in (b"a" * 500, b"ab" * 250, b"abaababaabaababaababa" * 20):
        t = make_text(raw)
        pss, nss = oracle_pss_nss(t, limit=None)
        assert compute_pss(t).tolist() == pss
        assert derive_nss(pss).tolist() == nss

import pytest

from gsaca.errors import EmptyWord
from gsaca.oracles import (
    brute_force_sa,
    canonical_lyndon_grouping,
    is_lyndon,
    oracle_ps_set,
    oracle_pss_nss,
)
from gsaca.text import make_text


def test_brute_force_sa_examples():
    assert brute_force_sa(make_text(b"acedcebceece")) == [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8]
    assert brute_force_sa(make_text(b"")) == [0]
    assert brute_force_sa(make_text(b"aaa")) == [3, 2, 1, 0]
    assert brute_force_sa(make_text(b"abab")) == [4, 2, 0, 3, 1]


def test_oracle_pss_nss_examples():
    pss, nss = oracle_pss_nss(make_text(b"acedcebceece"))
    assert pss == [-1, 0, 1, 1, 0, 4, 0, 6, 7, 7, 6, 10, -1]
    assert nss == [12, 4, 3, 4, 6, 6, 12, 10, 9, 10, 12, 12, 13]
    assert oracle_pss_nss([0]) == ([-1], [1])
    assert oracle_pss_nss(make_text(b"ab")) == ([-1, 0, -1], [2, 2, 3])


def test_is_lyndon():
    assert is_lyndon(b"cee")
    assert is_lyndon(b"a")
    assert not is_lyndon(b"ba")
    assert not is_lyndon(b"abab")
    with pytest.raises(EmptyWord):
        is_lyndon(b"")


def test_canonical_grouping_running():
    g = canonical_lyndon_grouping(make_text(b"acedcebceece"))
    contexts = [bytes(c).replace(b"\0", b"$") for c in g.contexts]
    assert contexts == [b"$", b"acedcebceece", b"bceece", b"ce", b"ced", b"cee", b"d", b"e"]
    assert g.starts == [0, 1, 2, 3, 5, 6, 7, 8]
    assert g.partition[3] == [4, 10]
    assert g.ranked[3] == (10, 4)


def test_canonical_grouping_small():
    assert canonical_lyndon_grouping([0]).partition == [[0]]
    g = canonical_lyndon_grouping(make_text(b"abab"))
    assert g.partition == [[4], [0, 2], [1, 3]]
    assert g.ranked == ((4,), (2, 0), (3, 1))


def test_ps_set_examples():
    t = make_text(b"acedcebceece")
    assert oracle_ps_set(t, 4) == {1, 3}
    assert oracle_ps_set(t, 6) == {4, 5}
    assert oracle_ps_set(t, 0) == set()


def test_size_guard():
    with pytest.raises(ValueError, match="limit"):
        brute_force_sa(list(range(10)), limit=5)
    assert len(brute_force_sa([1] * 10 + [0], limit=None)) == 11

import pytest
from hypothesis import given, strategies as st

from wtwm.alphabet import (
    bitrev,
    bitrev_table,
    build_c_array,
    build_histogram,
    effective_transform,
)


def accumulate(counts, size):
    # independent oracle: running sum of a histogram over codes 0..size-1
    out, total = [0], 0
    for x in range(size):
        total += counts.get(x, 0)
        out.append(total)
    return out


def test_histogram_wavelettree():
    hist = build_histogram(b"wavelettree")
    assert {chr(k): v for k, v in hist.counts.items()} == {
        "a": 1, "e": 4, "l": 1, "r": 1, "t": 2, "v": 1, "w": 1,
    }
    assert hist.n == 11
    assert hist["e"] == 4 and hist["z"] == 0


def test_histogram_trivial():
    assert build_histogram(b"").counts == {}
    assert build_histogram(b"aaa").counts == {ord("a"): 3}


def test_effective_transform_wavelettree(wt_text):
    assert wt_text.codes.tolist() == [6, 0, 5, 1, 2, 1, 4, 4, 3, 1, 1]
    assert (wt_text.sigma_effective, wt_text.sigma_padded, wt_text.height) == (7, 8, 3)
    assert wt_text.decode_table == b"aelrtvw"
    assert wt_text.code_of("r") == 3


def test_effective_transform_small():
    e = effective_transform(b"ab")
    assert e.codes.tolist() == [0, 1]
    assert (e.sigma_effective, e.sigma_padded, e.height) == (2, 2, 1)
    unary = effective_transform(b"aaa")
    assert (unary.sigma_effective, unary.sigma_padded, unary.height) == (1, 2, 1)


def test_effective_transform_rejects_empty():
    with pytest.raises(ValueError):
        effective_transform(b"")


def test_code_of_missing_symbol(wt_text):
    with pytest.raises(KeyError):
        wt_text.code_of("z")


def test_c_array_wavelettree(wt_c):
    assert list(wt_c.entries) == [0, 1, 5, 6, 7, 9, 10, 11, 11]


def test_c_array_small():
    e = effective_transform(b"aaa")
    want = accumulate({0: 3}, e.sigma_padded)
    assert want == [0, 3, 3]
    assert list(build_c_array(e).entries) == want
    assert list(build_c_array(effective_transform(b"ab")).entries) == [0, 1, 2]


@given(st.binary(min_size=1, max_size=400))
def test_transform_properties(text):
    e = effective_transform(text)
    assert e.decode() == text
    assert int(e.codes.max()) < e.sigma_effective <= e.sigma_padded == 1 << e.height
    assert list(e.decode_table) == sorted(set(text))
    c = build_c_array(e)
    counts = {}
    for x in e.codes.tolist():
        counts[x] = counts.get(x, 0) + 1
    assert list(c.entries) == accumulate(counts, e.sigma_padded)
    assert c[0] == 0 and c[e.sigma_padded] == len(text)
    assert all(c[x] < c[x + 1] for x in range(e.sigma_effective))


def test_bitrev_table1():
    assert bitrev_table(2) == [0, 2, 1, 3]
    assert bitrev_table(3) == [0, 4, 2, 6, 1, 5, 3, 7]
    assert [bitrev(3, i) for i in (1, 3, 4, 6, 0, 7)] == [4, 6, 1, 3, 0, 7]


def test_bitrev_rejects_oversized():
    with pytest.raises(ValueError):
        bitrev(3, 8)
    with pytest.raises(ValueError):
        bitrev(65, 0)


def test_bitrev_zero_width():
    assert bitrev(0, 0) == 0


@given(st.integers(1, 16), st.data())
def test_bitrev_involution(k, data):
    i = data.draw(st.integers(0, (1 << k) - 1))
    assert bitrev(k, bitrev(k, i)) == i
    assert int(format(i, f"0{k}b")[::-1], 2) == bitrev(k, i)


@pytest.mark.parametrize("k", range(1, 11))
def test_bitrev_is_permutation(k):
    assert sorted(bitrev_table(k)) == list(range(1 << k))

import numpy as np
from hypothesis import given, settings, strategies as st

from wtwm import build_wm, build_wt, effective_transform
from wtwm.alphabet import bitrev
from wtwm.oracle import decompose, naive_wm, scan_rank, scan_select


def test_first_two_levels_equal_tree(wt_text):
    wm, wt = build_wm(wt_text), build_wt(wt_text)
    assert wm.levels[:2] == wt.levels[:2]
    assert wm.levels[2] != wt.levels[2]


def test_level2_node_order(wt_text):
    nodes = decompose(wt_text)[2]
    want = "".join("".join(map(str, nodes[v].bits)) for v in (0, 2, 1, 3))
    wm = build_wm(wt_text)
    assert str(wm.levels[2].bits) == want == "01111100010"


def test_z_counts_zero_bits(wt_text):
    wm = build_wm(wt_text)
    assert wm.z == [7, 8, 5]
    assert wm.z == [bv.rank0(len(bv) - 1) for bv in wm.levels]
    levels, z = naive_wm(wt_text)
    assert [bv.bits.to_bits().tolist() for bv in wm.levels] == levels and wm.z == z


def test_height_one_equals_tree():
    e = effective_transform(b"abba")
    assert build_wm(e).levels == build_wt(e).levels


def test_queries_wavelettree(wt_text):
    wm, wt = build_wm(wt_text), build_wt(wt_text)
    assert [wm.access(i) for i in range(11)] == [wt.access(i) for i in range(11)]
    assert wm.rank(1, 10) == 4
    assert wm.select(1, 2) == 5


@settings(max_examples=100, deadline=None)
@given(st.binary(min_size=1, max_size=300))
def test_matches_tree_and_scan(text):
    e = effective_transform(text)
    wm, wt = build_wm(e), build_wt(e)
    codes = e.codes.tolist()
    assert [wm.access(i) for i in range(e.n)] == codes
    for c in range(e.sigma_effective):
        for i in range(0, e.n, max(1, e.n // 13)):
            assert wm.rank(c, i) == wt.rank(c, i) == scan_rank(codes, c, i)
        for k in range(1, codes.count(c) + 1):
            assert wm.select(c, k) == wt.select(c, k) == scan_select(codes, c, k)
    for a, b in zip(wm.levels, wt.levels):
        assert a.ones == b.ones


@settings(max_examples=60, deadline=None)
@given(st.binary(min_size=1, max_size=200))
def test_bitreversed_node_slots(text):
    e = effective_transform(text)
    wm = build_wm(e)
    codes = np.asarray(e.codes)
    for level, nodes in enumerate(decompose(e)):
        bits = wm.levels[level].bits.to_bits().tolist()
        start = 0
        for u in range(1 << level):
            node = nodes[bitrev(level, u)]
            assert bits[start:start + len(node.bits)] == node.bits
            # every code of a node shares its top `level` bits
            assert len({int(x) >> (e.height - level) for x in codes[node.positions]}) <= 1
            start += len(node.bits)

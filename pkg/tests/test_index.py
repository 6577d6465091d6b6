import struct

import pytest
from hypothesis import given, settings, strategies as st

from wtwm import build_wm, build_wt, effective_transform, index


def test_header_layout(wt_text):
    data = index.dumps(build_wt(wt_text))
    magic, version, kind, n, sigma, sigma_padded, height = struct.unpack_from("<4sBBQQQQ", data)
    assert (magic, version, kind) == (b"WVLT", 1, 0)
    assert (n, sigma, sigma_padded, height) == (11, 7, 8, 3)
    off = struct.calcsize("<4sBBQQQQ")
    assert data[off:off + 7] == b"aelrtvw"
    c = struct.unpack_from("<9Q", data, off + 7)
    assert list(c) == [0, 1, 5, 6, 7, 9, 10, 11, 11]
    level0 = struct.unpack_from("<Q", data, off + 7 + 72)[0]
    # "10100011000" packed LSB-first
    assert level0 == 0b00011000101
    assert len(data) == off + 7 + 72 + 3 * 8


def test_matrix_carries_z(wt_text):
    data = index.dumps(build_wm(wt_text))
    assert data[5] == 1
    assert struct.unpack("<3Q", data[-24:]) == (7, 8, 5)


@settings(max_examples=80, deadline=None)
@given(st.binary(min_size=1, max_size=700))
def test_round_trip(text):
    e = effective_transform(text)
    for structure in (build_wt(e), build_wm(e)):
        data = index.dumps(structure)
        back = index.loads(data)
        assert type(back) is type(structure)
        assert back == structure
        assert index.dumps(back) == data


@pytest.mark.parametrize("mutate, message", [
    (lambda d: b"XXXX" + d[4:], "magic"),
    (lambda d: d[:4] + b"\x02" + d[5:], "version"),
    (lambda d: d[:5] + b"\x07" + d[6:], "kind"),
    (lambda d: d[:-1], "truncated"),
    (lambda d: d + b"\x00", "trailing"),
])
def test_corrupt_files_rejected(wt_text, mutate, message):
    data = index.dumps(build_wt(wt_text))
    with pytest.raises(index.IndexFormatError, match=message):
        index.loads(mutate(data))


def test_dirty_padding_rejected(wt_text):
    data = bytearray(index.dumps(build_wt(wt_text)))
    off = struct.calcsize("<4sBBQQQQ") + 7 + 72
    data[off + 7] = 0x80  # bit 63 of level 0, beyond n = 11
    with pytest.raises(index.IndexFormatError, match="padding"):
        index.loads(bytes(data))

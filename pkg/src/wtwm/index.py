"""Binary index file format.

All integers are little-endian::

    magic           4 bytes  b"WVLT"
    version         u8       1
    kind            u8       0 = tree, 1 = matrix
    n               u64
    sigma_effective u64
    sigma_padded    u64
    height          u64
    decode_table    sigma_effective bytes
    c_array         (sigma_padded + 1) x u64
    levels          height x ceil(n / 64) x u64, bits LSB-first
    z               height x u64            (matrix only)
"""

import struct

import numpy as np

from .alphabet import CArray
from .bitvec import BitBuffer, build_rs
from .wavelet_matrix import WaveletMatrix
from .wavelet_tree import WaveletTree

MAGIC = b"WVLT"
VERSION = 1
KIND_TREE = 0
KIND_MATRIX = 1

_HEADER = struct.Struct("<4sBBQQQQ")


class IndexFormatError(ValueError):
    pass


def dumps(structure):
    if isinstance(structure, WaveletMatrix):
        kind = KIND_MATRIX
    elif isinstance(structure, WaveletTree):
        kind = KIND_TREE
    else:
        raise TypeError(f"cannot serialize {type(structure).__name__}")
    c = structure.c_array
    parts = [
        _HEADER.pack(MAGIC, VERSION, kind, structure.n, structure.sigma_effective,
                     c.sigma_padded, structure.height),
        bytes(structure.decode_table),
        np.array(c.entries, dtype="<u8").tobytes(),
    ]
    parts += [bv.bits.to_array().tobytes() for bv in structure.levels]
    if kind == KIND_MATRIX:
        parts.append(np.array(structure.z, dtype="<u8").tobytes())
    return b"".join(parts)


class _Reader:
    def __init__(self, data):
        self.data = memoryview(data)
        self.pos = 0

    def take(self, size, what):
        if self.pos + size > len(self.data):
            raise IndexFormatError(f"truncated index while reading {what}")
        chunk = self.data[self.pos:self.pos + size]
        self.pos += size
        return chunk

    def u64s(self, count, what):
        return np.frombuffer(self.take(8 * count, what), dtype="<u8")


def loads(data):
    r = _Reader(data)
    magic, version, kind, n, sigma, sigma_padded, height = _HEADER.unpack(
        r.take(_HEADER.size, "header"))
    if magic != MAGIC:
        raise IndexFormatError(f"bad magic {bytes(magic)!r}")
    if version != VERSION:
        raise IndexFormatError(f"unsupported version {version}")
    if kind not in (KIND_TREE, KIND_MATRIX):
        raise IndexFormatError(f"unknown structure kind {kind}")
    if not 1 <= height <= 8 or sigma_padded != 1 << height:
        raise IndexFormatError(f"inconsistent height {height} / sigma_padded {sigma_padded}")
    if not 1 <= sigma <= sigma_padded or n < sigma:
        raise IndexFormatError(f"inconsistent n={n}, sigma={sigma}")

    decode_table = bytes(r.take(sigma, "decode table"))
    if any(a >= b for a, b in zip(decode_table, decode_table[1:])):
        raise IndexFormatError("decode table is not strictly increasing")
    entries = tuple(int(x) for x in r.u64s(sigma_padded + 1, "C array"))
    if entries[0] != 0 or entries[-1] != n or any(a > b for a, b in zip(entries, entries[1:])):
        raise IndexFormatError("C array is not a cumulative count of n symbols")

    nwords = (n + 63) // 64
    levels = []
    for level in range(height):
        words = r.u64s(nwords, f"level {level}")
        try:
            levels.append(build_rs(BitBuffer.from_array(n, words)))
        except ValueError as exc:
            raise IndexFormatError(f"level {level}: {exc}") from None

    c = CArray(entries)
    if kind == KIND_MATRIX:
        z = [int(x) for x in r.u64s(height, "z values")]
        structure = WaveletMatrix(levels, z, c, decode_table)
    else:
        structure = WaveletTree(levels, c, decode_table)
    if r.pos != len(r.data):
        raise IndexFormatError(f"{len(r.data) - r.pos} trailing bytes after index")
    return structure


def save(structure, path):
    with open(path, "wb") as fh:
        fh.write(dumps(structure))


def load(path):
    with open(path, "rb") as fh:
        return loads(fh.read())

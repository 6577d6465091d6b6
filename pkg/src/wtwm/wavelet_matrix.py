"""Wavelet matrix: the tree's node bit vectors reordered per level.

Level ``l`` holds the same node bit vectors as the wavelet tree, but in
bit-reversal order of node rank.  Navigation needs only ``z[l]``, the
number of 0-bits on a level: 0-bits descend to the left part of the next
level, 1-bits to the right part starting at ``z[l]``.
"""

from dataclasses import dataclass

from .alphabet import CArray, build_c_array
from .bitvec import LevelBuffers


def construct_wm(e, sink):
    """Stable-partition constructor.

    Level ``l`` is written in the order of the current sequence, after
    which the sequence is stably split by that level's bit (0s first).
    Each write carries the full code it was computed from, which is what
    lets :class:`wtwm.translate.MatrixToTreeSink` redirect it.
    """
    h = e.height
    seq = e.codes.tolist()
    write = sink.write
    z = []
    for level in range(h):
        shift = h - 1 - level
        zeros, ones = [], []
        for j, x in enumerate(seq):
            bit = (x >> shift) & 1
            write(level, j, bit, x)
            (ones if bit else zeros).append(x)
        z.append(len(zeros))
        seq = zeros + ones
    return z


@dataclass(eq=True)
class WaveletMatrix:
    levels: list
    z: list
    c_array: CArray
    decode_table: bytes

    @property
    def height(self):
        return len(self.levels)

    @property
    def n(self):
        return self.c_array.n

    @property
    def sigma_effective(self):
        return len(self.decode_table)

    def _check_pos(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"position {i} out of range [0, {self.n})")

    def _check_code(self, code):
        if not 0 <= code < self.sigma_effective:
            raise ValueError(f"code {code} out of range [0, {self.sigma_effective})")

    def access(self, i):
        self._check_pos(i)
        code = 0
        for bv, z in zip(self.levels, self.z):
            bit = bv[i]
            code = (code << 1) | bit
            i = z + bv.rank1(i) - 1 if bit else bv.rank0(i) - 1
        return code

    def _descend(self, code, start, end):
        # maps the half-open range [start, end) through every level along code
        h = self.height
        for level, (bv, z) in enumerate(zip(self.levels, self.z)):
            if (code >> (h - 1 - level)) & 1:
                start = z + bv.rank1_before(start)
                end = z + bv.rank1_before(end)
            else:
                start = bv.rank0_before(start)
                end = bv.rank0_before(end)
        return start, end

    def rank(self, code, i):
        """Occurrences of ``code`` in positions ``0..i`` inclusive."""
        self._check_code(code)
        self._check_pos(i)
        start, end = self._descend(code, 0, i + 1)
        return end - start

    def select(self, code, k):
        """Position of the ``k``-th (1-based) occurrence of ``code``."""
        self._check_code(code)
        occ = self.c_array.occ(code)
        if not 1 <= k <= occ:
            raise ValueError(f"select rank {k} out of range [1, {occ}] for code {code}")
        h = self.height
        pos = self._descend(code, 0, 0)[0] + k - 1
        for level in range(h - 1, -1, -1):
            bv = self.levels[level]
            if (code >> (h - 1 - level)) & 1:
                pos = bv.select1(pos - self.z[level] + 1)
            else:
                pos = bv.select0(pos + 1)
        return pos

    def access_symbol(self, i):
        return self.decode_table[self.access(i)]


def zero_counts(levels):
    return [len(bv) - bv.ones for bv in levels]


def build_wm(e, c=None):
    if c is None:
        c = build_c_array(e)
    sink = LevelBuffers(e.height, e.n)
    z = construct_wm(e, sink)
    return WaveletMatrix(sink.finish(), z, c, e.decode_table)

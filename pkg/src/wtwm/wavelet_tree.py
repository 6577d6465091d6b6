"""Levelwise (pointerless) wavelet tree.

Level ``l`` concatenates, left to right, the bit vectors of the ``2**l``
nodes on that level of a full binary tree over the padded alphabet.
Node ``(l, v)`` holds the codes whose top ``l`` bits equal ``v`` in text
order, and stores bit ``height-1-l`` of each.  Node boundaries come from
the C array, so no per-node offsets are stored.
"""

from dataclasses import dataclass

from .alphabet import CArray, build_c_array
from .bitvec import LevelBuffers


def wt_node_size(c, height, level, v):
    """Number of bits in node ``v`` on ``level``."""
    if not 0 <= level <= height:
        raise ValueError(f"level {level} out of range [0, {height}]")
    if not 0 <= v < (1 << level):
        raise ValueError(f"node {v} out of range [0, {1 << level}) on level {level}")
    span = 1 << (height - level)
    return c[(v + 1) * span] - c[v * span]


def construct_wt(e, c, sink):
    """Prefix-counting constructor.

    For each level, every node gets a write cursor starting at its C-array
    offset; a single pass over the text emits ``sink.write(level, pos, bit)``
    for every code.  The symbol is deliberately not passed on: a tree
    constructor only knows where its bit goes.
    """
    h = e.height
    codes = e.codes.tolist()
    write = sink.write
    for level in range(h):
        span_bits = h - level
        cursor = [c[v << span_bits] for v in range(1 << level)]
        shift = h - 1 - level
        for x in codes:
            v = x >> span_bits
            write(level, cursor[v], (x >> shift) & 1)
            cursor[v] += 1
    return sink


@dataclass(eq=True)
class WaveletTree:
    levels: list
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

    def node_start(self, level, v):
        return self.c_array[v << (self.height - level)]

    def _check_pos(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"position {i} out of range [0, {self.n})")

    def _check_code(self, code):
        if not 0 <= code < self.sigma_effective:
            raise ValueError(f"code {code} out of range [0, {self.sigma_effective})")

    def access(self, i):
        self._check_pos(i)
        h = self.height
        code = 0
        start = 0
        for level, bv in enumerate(self.levels):
            bit = bv[i]
            # rank of i among the node's bits with the same value
            same_before = bv.rank(bit, i) - (
                bv.rank1_before(start) if bit else bv.rank0_before(start)
            )
            code = (code << 1) | bit
            start = self.c_array[code << (h - level - 1)]
            i = start + same_before - 1
        return code

    def rank(self, code, i):
        """Occurrences of ``code`` in positions ``0..i`` inclusive."""
        self._check_code(code)
        self._check_pos(i)
        h = self.height
        start = 0
        count = i + 1
        for level, bv in enumerate(self.levels):
            bit = (code >> (h - 1 - level)) & 1
            end = start + count
            ones = bv.rank1_before(end) - bv.rank1_before(start)
            count = ones if bit else count - ones
            start = self.c_array[(code >> (h - 1 - level)) << (h - 1 - level)]
            if count == 0:
                return 0
        return count

    def select(self, code, k):
        """Position of the ``k``-th (1-based) occurrence of ``code``."""
        self._check_code(code)
        occ = self.c_array.occ(code)
        if not 1 <= k <= occ:
            raise ValueError(f"select rank {k} out of range [1, {occ}] for code {code}")
        h = self.height
        offset = k - 1
        for level in range(h - 1, -1, -1):
            bv = self.levels[level]
            start = self.node_start(level, code >> (h - level))
            bit = (code >> (h - 1 - level)) & 1
            before = bv.rank1_before(start) if bit else bv.rank0_before(start)
            offset = bv.select(bit, before + offset + 1) - start
        return offset

    def access_symbol(self, i):
        return self.decode_table[self.access(i)]


def build_wt(e, c=None):
    if c is None:
        c = build_c_array(e)
    sink = construct_wt(e, c, LevelBuffers(e.height, e.n))
    return WaveletTree(sink.finish(), c, e.decode_table)

"""Constant-time position translation between wavelet tree and matrix levels.

A :class:`Locator` answers, for a bit written on level ``l``:

* ``v_node(l, i)`` / ``p_offset(l, v)`` - the wavelet tree node holding tree
  position ``i`` and that node's first position;
* ``u_node(l, c)`` / ``q_offset(l, u)`` - the wavelet matrix node holding
  every bit of code ``c`` and that node's first position.

``f`` maps a tree position to the matrix position of the same bit and
``f_inv`` maps back.  ``f_inv`` needs the code the bit was computed from,
since the matrix layout alone does not identify the node.

The boundary bit vector marks ``B_C[C[c]] = 1`` for every occurring code
``c``, so ``rank1(B_C, i) - 1`` is the code whose bottom-level node
contains position ``i``.
"""

from collections import Counter

from .alphabet import bitrev, build_c_array
from .bitvec import BitBuffer, LevelBuffers, build_rs
from .wavelet_matrix import WaveletMatrix, construct_wm, zero_counts
from .wavelet_tree import WaveletTree, construct_wt


class ConstructorMisuse(ValueError):
    """A constructor emitted a write the inverse translation cannot place."""


class MissingSymbolError(ConstructorMisuse):
    """A write reached the matrix-to-tree sink without its symbol."""


class SymbolMismatchError(ConstructorMisuse):
    """A matrix position lies outside the node of the symbol supplied with it."""


class Locator:
    """Translation structure built from the C array in ``O(n + sigma)``.

    Attributes
    ----------
    c_array : CArray
    c_prime : tuple of int
        ``2**height - 1`` accumulated matrix node sizes.  Level ``l`` owns
        the slice ``[2**l - 1, 2**(l+1) - 1)``; its last entry is ``n``.
    b_c : RankSelectBitVector
        Bottom-level node boundaries.
    """

    def __init__(self, c_array, height, sigma_effective, counter=None):
        n = c_array.n
        if n <= 0:
            raise ValueError("locator needs a non-empty text")
        if c_array.sigma_padded != 1 << height:
            raise ValueError("C array size does not match height")
        self.c_array = c_array
        self._c = c_array.entries
        self.height = height
        self.n = n
        self.sigma_effective = sigma_effective
        counter = Counter() if counter is None else counter

        marks = BitBuffer(n)
        for code in range(sigma_effective):
            counter["symbols"] += 1
            if c_array[code] < n:
                marks.set(c_array[code])
        self.b_c = build_rs(marks, counter=counter)

        c_prime = []
        self._bitrev = []
        for level in range(height):
            span = 1 << (height - level)
            rev = [bitrev(level, u) for u in range(1 << level)]
            total = 0
            for u in range(1 << level):
                counter["c_prime"] += 1
                v = rev[u]
                total += c_array[(v + 1) * span] - c_array[v * span]
                c_prime.append(total)
            self._bitrev.append(rev)
        self.c_prime = tuple(c_prime)
        self.counter = counter

    @classmethod
    def from_text(cls, e, c=None, counter=None):
        if c is None:
            c = build_c_array(e)
        return cls(c, e.height, e.sigma_effective, counter=counter)

    def c_prime_level(self, level):
        return list(self.c_prime[(1 << level) - 1:(2 << level) - 1])

    def _check_level(self, level, allow_virtual=False):
        top = self.height if allow_virtual else self.height - 1
        if not 0 <= level <= top:
            raise ValueError(f"level {level} out of range [0, {top}]")

    def _check_pos(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"position {i} out of range [0, {self.n})")

    def _check_node(self, level, node):
        if not 0 <= node < (1 << level):
            raise ValueError(f"node {node} out of range [0, {1 << level}) on level {level}")

    def v_node(self, level, i):
        """Tree node on ``level`` containing tree position ``i``."""
        self._check_level(level, allow_virtual=True)
        self._check_pos(i)
        return (self.b_c.rank1(i) - 1) >> (self.height - level)

    def p_offset(self, level, v):
        """First tree position of node ``v``; ``v = 2**level`` gives ``n``."""
        self._check_level(level, allow_virtual=True)
        if not 0 <= v <= (1 << level):
            raise ValueError(f"node {v} out of range [0, {1 << level}] on level {level}")
        return self.c_array[v << (self.height - level)]

    def delta_v(self, level, i):
        return i - self.p_offset(level, self.v_node(level, i))

    def u_node(self, level, code):
        """Matrix node on ``level`` holding every bit written for ``code``."""
        self._check_level(level)
        if not 0 <= code < self.sigma_effective:
            raise ValueError(f"code {code} out of range [0, {self.sigma_effective})")
        return self._bitrev[level][self.v_node(level, self.c_array[code])]

    def q_offset(self, level, u):
        """First matrix position of node ``u``."""
        self._check_level(level)
        self._check_node(level, u)
        return self.c_prime[(1 << level) - 2 + u] if u else 0

    def delta_u(self, level, j, code):
        return j - self.q_offset(level, self.u_node(level, code))

    def node_extent_m(self, level, u):
        """Half-open range ``[start, end)`` of matrix node ``u``."""
        self._check_level(level)
        self._check_node(level, u)
        return self.q_offset(level, u), self.c_prime[(1 << level) - 1 + u]

    def f(self, level, i):
        """Matrix position of the bit at tree position ``(level, i)``."""
        if not 0 <= level < self.height:
            raise ValueError(f"level {level} out of range [0, {self.height - 1}]")
        shift = self.height - level
        v = (self.b_c.rank1(i) - 1) >> shift
        u = self._bitrev[level][v]
        q = self.c_prime[(1 << level) - 2 + u] if u else 0
        return q + i - self._c[v << shift]

    def f_inv(self, level, j, code):
        """Tree position of the bit at matrix position ``(level, j)``.

        ``code`` must be the symbol the bit was computed from; a position
        outside that symbol's matrix node raises :class:`SymbolMismatchError`.
        """
        if not 0 <= level < self.height:
            raise ValueError(f"level {level} out of range [0, {self.height - 1}]")
        if not 0 <= code < self.sigma_effective:
            raise ValueError(f"code {code} out of range [0, {self.sigma_effective})")
        if not 0 <= j < self.n:
            raise IndexError(f"position {j} out of range [0, {self.n})")
        shift = self.height - level
        v = (self.b_c.rank1(self._c[code]) - 1) >> shift
        u = self._bitrev[level][v]
        base = (1 << level) - 1
        start = self.c_prime[base + u - 1] if u else 0
        end = self.c_prime[base + u]
        if not start <= j < end:
            raise SymbolMismatchError(
                f"matrix position {j} on level {level} is outside node {u} "
                f"[{start}, {end}) of code {code}"
            )
        # p(level, bitrev(u)) with bitrev(bitrev(v)) = v
        return self._c[v << shift] + j - start

    def explain_f(self, level, i):
        v = self.v_node(level, i)
        p = self.p_offset(level, v)
        u = self._bitrev[level][v]
        q = self.q_offset(level, u)
        return {"v": v, "p": p, "delta_v": i - p, "u": u, "q": q, "j": self.f(level, i)}

    def explain_f_inv(self, level, j, code):
        u = self.u_node(level, code)
        q = self.q_offset(level, u)
        v = self._bitrev[level][u]
        p = self.p_offset(level, v)
        return {"u": u, "q": q, "delta_u": j - q, "v": v, "p": p, "i": self.f_inv(level, j, code)}


def build_locator(e, c=None, counter=None):
    return Locator.from_text(e, c, counter=counter)


class TreeToMatrixSink:
    """Redirects tree-constructor writes ``(l, i, bit)`` to ``(l, f(l, i), bit)``."""

    def __init__(self, locator, inner):
        self.locator = locator
        self.inner = inner

    def write(self, level, pos, bit, symbol=None):
        self.inner.write(level, self.locator.f(level, pos), bit, symbol)

    def finish(self):
        return self.inner.finish()


class MatrixToTreeSink:
    """Redirects matrix-constructor writes ``(l, j, bit, c)`` to ``(l, f_inv(l, j, c), bit)``."""

    def __init__(self, locator, inner):
        self.locator = locator
        self.inner = inner

    def write(self, level, pos, bit, symbol=None):
        if symbol is None:
            raise MissingSymbolError(
                f"write to level {level} position {pos} carries no symbol; "
                "the inverse translation cannot place it"
            )
        self.inner.write(level, self.locator.f_inv(level, pos, symbol), bit, symbol)

    def finish(self):
        return self.inner.finish()


def build_wm_via_wt(e, c=None):
    """Wavelet matrix produced by the tree constructor through ``f``."""
    if c is None:
        c = build_c_array(e)
    loc = Locator(c, e.height, e.sigma_effective)
    sink = construct_wt(e, c, TreeToMatrixSink(loc, LevelBuffers(e.height, e.n)))
    levels = sink.finish()
    return WaveletMatrix(levels, zero_counts(levels), c, e.decode_table)


def build_wt_via_wm(e, c=None):
    """Wavelet tree produced by the matrix constructor through ``f_inv``."""
    if c is None:
        c = build_c_array(e)
    loc = Locator(c, e.height, e.sigma_effective)
    sink = MatrixToTreeSink(loc, LevelBuffers(e.height, e.n))
    construct_wm(e, sink)
    return WaveletTree(sink.finish(), c, e.decode_table)

"""Packed bit buffers and rank/select bit vectors.

Bits are packed least-significant-first into 64-bit words.  Word ``k``
holds bits ``64k .. 64k+63``; bit ``i`` is ``(words[i >> 6] >> (i & 63)) & 1``.
The same layout is written to disk by :mod:`wtwm.index`.

Rank is inclusive: ``rank1(i)`` counts the 1-bits in positions ``0..i``.
"""

from bisect import bisect_left

import numpy as np

WORD_BITS = 64
BLOCK_BITS = 512
SELECT_SAMPLE = 8192

_WORDS_PER_BLOCK = BLOCK_BITS // WORD_BITS
_WORD_MASK = (1 << WORD_BITS) - 1


def _word_count(length):
    return (length + WORD_BITS - 1) // WORD_BITS


class BitBuffer:
    """Fixed-length mutable bit buffer, zero-initialised.

    Parameters
    ----------
    length : int
        Number of bits.
    words : list of int, optional
        Packed words to adopt.  Must have exactly ``ceil(length / 64)``
        entries and zero padding above ``length``.
    """

    __slots__ = ("length", "words")

    def __init__(self, length, words=None):
        if length < 0:
            raise ValueError("length must be non-negative")
        self.length = length
        nwords = _word_count(length)
        if words is None:
            self.words = [0] * nwords
            return
        words = [int(w) for w in words]
        if len(words) != nwords:
            raise ValueError(f"expected {nwords} words for {length} bits, got {len(words)}")
        if any(w < 0 or w > _WORD_MASK for w in words):
            raise ValueError("words must be unsigned 64-bit values")
        tail = length % WORD_BITS
        if tail and words[-1] >> tail:
            raise ValueError("padding bits above length must be zero")
        self.words = words

    @classmethod
    def from_bits(cls, bits):
        """Pack an iterable of 0/1 values (or a ``"0110"`` string)."""
        if isinstance(bits, str):
            bits = [int(ch) for ch in bits]
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits, dtype=np.uint8)
        if arr.size and arr.max() > 1:
            raise ValueError("bits must be 0 or 1")
        length = int(arr.size)
        packed = np.packbits(arr, bitorder="little")
        padded = np.zeros(_word_count(length) * 8, dtype=np.uint8)
        padded[: packed.size] = packed
        return cls(length, padded.view("<u8").tolist())

    @classmethod
    def from_array(cls, length, words):
        """Adopt a little-endian ``uint64`` word array."""
        return cls(length, np.asarray(words, dtype="<u8").tolist())

    def to_array(self):
        """Packed words as a little-endian ``uint64`` numpy array."""
        return np.array(self.words, dtype="<u8")

    def to_bits(self):
        """Unpacked bits as a ``uint8`` numpy array of length ``len(self)``."""
        raw = self.to_array().view(np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.length]

    def __len__(self):
        return self.length

    def _check(self, i):
        if not 0 <= i < self.length:
            raise IndexError(f"bit position {i} out of range [0, {self.length})")

    def get(self, i):
        self._check(i)
        return (self.words[i >> 6] >> (i & 63)) & 1

    def set(self, i, bit=1):
        self._check(i)
        if bit:
            self.words[i >> 6] |= 1 << (i & 63)
        else:
            self.words[i >> 6] &= ~(1 << (i & 63))

    __getitem__ = get

    def count(self):
        return sum(w.bit_count() for w in self.words)

    def __eq__(self, other):
        if not isinstance(other, BitBuffer):
            return NotImplemented
        return self.length == other.length and self.words == other.words

    def __str__(self):
        return "".join(map(str, self.to_bits().tolist()))

    def __repr__(self):
        shown = str(self) if self.length <= 64 else f"{str(self)[:61]}..."
        return f"BitBuffer({self.length}, '{shown}')"


def _select_in_word(word, k):
    """Position of the k-th (1-based) set bit of ``word``."""
    for _ in range(k - 1):
        word &= word - 1
    return (word & -word).bit_length() - 1


class RankSelectBitVector:
    """Immutable bit vector with rank and select support.

    Rank uses one cumulative 1-count per 512-bit block plus a popcount
    scan over at most eight words.  Select jumps to the block holding a
    sampled occurrence (every 8192nd 1-bit or 0-bit), binary searches the
    block counts, then scans inside the block.
    """

    def __init__(self, bits, counter=None):
        self.bits = BitBuffer(bits.length, list(bits.words))
        self.length = bits.length
        words = self.bits.words
        nblocks = (len(words) + _WORDS_PER_BLOCK - 1) // _WORDS_PER_BLOCK

        block_ranks = [0] * (nblocks + 1)
        ones = 0
        for b in range(nblocks):
            block_ranks[b] = ones
            for w in words[b * _WORDS_PER_BLOCK:(b + 1) * _WORDS_PER_BLOCK]:
                ones += w.bit_count()
        block_ranks[nblocks] = ones
        if counter is not None:
            counter["rank_words"] += len(words)
            counter["rank_blocks"] += nblocks

        self.block_ranks = block_ranks
        self.block_zeros = [
            min(b * BLOCK_BITS, self.length) - r for b, r in enumerate(block_ranks)
        ]
        self.ones = ones
        self.zeros = self.length - ones
        self.select1_samples = self._sample(block_ranks, ones)
        self.select0_samples = self._sample(self.block_zeros, self.zeros)

    @staticmethod
    def _sample(cumulative, total):
        # samples[s] = block holding occurrence number s*SELECT_SAMPLE + 1
        samples = []
        for s in range(0, total, SELECT_SAMPLE):
            samples.append(bisect_left(cumulative, s + 1) - 1)
        return samples

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, RankSelectBitVector):
            return NotImplemented
        return self.bits == other.bits

    def __repr__(self):
        return f"RankSelectBitVector({self.bits!r})"

    def __getitem__(self, i):
        return self.bits.get(i)

    def rank1(self, i):
        """Number of 1-bits in positions ``0..i`` inclusive."""
        if not 0 <= i < self.length:
            raise IndexError(f"rank position {i} out of range [0, {self.length})")
        words = self.bits.words
        b = i >> 9
        r = self.block_ranks[b]
        wi = i >> 6
        for w in words[b << 3:wi]:
            r += w.bit_count()
        return r + (words[wi] & ((2 << (i & 63)) - 1)).bit_count()

    def rank0(self, i):
        return i + 1 - self.rank1(i)

    def rank1_before(self, i):
        """1-bits in positions ``0..i-1``; valid for ``0 <= i <= length``."""
        return self.rank1(i - 1) if i else 0

    def rank0_before(self, i):
        return i - self.rank1_before(i)

    def rank(self, bit, i):
        return self.rank1(i) if bit else self.rank0(i)

    def select1(self, k):
        """Position of the k-th 1-bit (``k`` is 1-based)."""
        if not 1 <= k <= self.ones:
            raise ValueError(f"select1 rank {k} out of range [1, {self.ones}]")
        return self._select(k, self.block_ranks, self.select1_samples, invert=False)

    def select0(self, k):
        """Position of the k-th 0-bit (``k`` is 1-based)."""
        if not 1 <= k <= self.zeros:
            raise ValueError(f"select0 rank {k} out of range [1, {self.zeros}]")
        return self._select(k, self.block_zeros, self.select0_samples, invert=True)

    def select(self, bit, k):
        return self.select1(k) if bit else self.select0(k)

    def _select(self, k, cumulative, samples, invert):
        s = (k - 1) // SELECT_SAMPLE
        lo = samples[s]
        hi = samples[s + 1] + 1 if s + 1 < len(samples) else len(cumulative) - 1
        b = bisect_left(cumulative, k, lo, hi) - 1
        remaining = k - cumulative[b]
        words = self.bits.words
        last = len(words) - 1
        tail = self.length % WORD_BITS
        for wi in range(b * _WORDS_PER_BLOCK, min((b + 1) * _WORDS_PER_BLOCK, len(words))):
            w = words[wi]
            if invert:
                w = ~w & (_WORD_MASK if wi != last or not tail else (1 << tail) - 1)
            c = w.bit_count()
            if c >= remaining:
                return (wi << 6) + _select_in_word(w, remaining)
            remaining -= c
        raise AssertionError("select ran past its block; rank directory is corrupt")


def build_rs(bits, counter=None):
    """Build a :class:`RankSelectBitVector` over a copy of ``bits``."""
    return RankSelectBitVector(bits, counter=counter)


class LevelBuffers:
    """Bit sink that writes each level's bits straight into a buffer.

    Constructors call ``write(level, pos, bit, symbol=None)``; the symbol
    is accepted and ignored here.
    """

    def __init__(self, height, n):
        self.height = height
        self.n = n
        self.buffers = [BitBuffer(n) for _ in range(height)]
        self._words = [buf.words for buf in self.buffers]

    def write(self, level, pos, bit, symbol=None):
        if not 0 <= pos < self.n:
            raise IndexError(f"write position {pos} out of range [0, {self.n})")
        if bit:
            self._words[level][pos >> 6] |= 1 << (pos & 63)

    def finish(self):
        return [build_rs(buf) for buf in self.buffers]

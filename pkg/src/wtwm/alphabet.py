"""Histograms, effective-alphabet recoding, C arrays and bit reversal."""

from collections import Counter
from dataclasses import dataclass

import numpy as np

MAX_BITREV_WIDTH = 64


def _as_bytes(text):
    if isinstance(text, str):
        return text.encode("latin-1")
    return bytes(text)


@dataclass(frozen=True)
class Histogram:
    """Occurrence count of every byte value present in a text."""

    counts: dict

    @property
    def n(self):
        return sum(self.counts.values())

    def __getitem__(self, symbol):
        if isinstance(symbol, str):
            symbol = ord(symbol)
        return self.counts.get(symbol, 0)


def build_histogram(text):
    return Histogram(dict(sorted(Counter(_as_bytes(text)).items())))


class EffectiveText:
    """A text recoded into its effective alphabet ``[0, sigma)``.

    Attributes
    ----------
    codes : numpy.ndarray
        Read-only ``uint8`` array; ``codes[i]`` is the rank of ``text[i]``
        among the distinct byte values occurring in the text.
    decode_table : bytes
        ``decode_table[c]`` is the original byte for code ``c``.
    sigma_effective : int
        Number of distinct symbols.
    height : int
        ``ceil(log2(sigma_effective))``, at least 1.
    sigma_padded : int
        ``2 ** height``.  Codes ``>= sigma_effective`` are padding symbols
        that never occur.
    """

    def __init__(self, codes, decode_table):
        codes = np.asarray(codes, dtype=np.uint8)
        codes.setflags(write=False)
        self.codes = codes
        self.decode_table = bytes(decode_table)
        self.sigma_effective = len(self.decode_table)
        self.height = max(1, (self.sigma_effective - 1).bit_length())
        self.sigma_padded = 1 << self.height

    @property
    def n(self):
        return int(self.codes.size)

    def __len__(self):
        return self.n

    def code_of(self, symbol):
        """Effective code of an original symbol (byte value or 1-char str)."""
        if isinstance(symbol, (str, bytes)):
            if len(symbol) != 1:
                raise ValueError(f"expected a single symbol, got {symbol!r}")
            symbol = ord(symbol)
        idx = self.decode_table.find(bytes([symbol]))
        if idx < 0:
            raise KeyError(f"symbol {bytes([symbol])!r} does not occur in the text")
        return idx

    def decode(self):
        table = np.frombuffer(self.decode_table, dtype=np.uint8)
        return table[self.codes].tobytes()

    def __repr__(self):
        return (
            f"EffectiveText(n={self.n}, sigma={self.sigma_effective}, "
            f"sigma_padded={self.sigma_padded}, height={self.height})"
        )


def effective_transform(text):
    raw = np.frombuffer(_as_bytes(text), dtype=np.uint8)
    if raw.size == 0:
        raise ValueError("cannot transform an empty text")
    symbols, codes = np.unique(raw, return_inverse=True)
    return EffectiveText(codes.reshape(-1), symbols.tobytes())


@dataclass(frozen=True)
class CArray:
    """``entries[x]`` = number of codes smaller than ``x``, for ``x <= sigma_padded``."""

    entries: tuple

    def __getitem__(self, x):
        return self.entries[x]

    def __len__(self):
        return len(self.entries)

    @property
    def sigma_padded(self):
        return len(self.entries) - 1

    @property
    def n(self):
        return self.entries[-1]

    def occ(self, code):
        return self.entries[code + 1] - self.entries[code]


def build_c_array(e):
    occ = np.bincount(e.codes, minlength=e.sigma_padded)
    entries = np.concatenate(([0], np.cumsum(occ)))
    return CArray(tuple(int(x) for x in entries))


def bitrev(k, i):
    """Reverse the ``k``-bit binary representation of ``i``.

    ``k = 0`` is accepted as the degenerate width whose only value is 0.
    """
    if not 0 <= k <= MAX_BITREV_WIDTH:
        raise ValueError(f"bit width {k} outside [0, {MAX_BITREV_WIDTH}]")
    if not 0 <= i < (1 << k):
        raise ValueError(f"{i} does not fit in {k} bits")
    out = 0
    for _ in range(k):
        out = (out << 1) | (i & 1)
        i >>= 1
    return out


def bitrev_table(k):
    """The full ``k``-bit reversal permutation as a list."""
    return [bitrev(k, i) for i in range(1 << k)]

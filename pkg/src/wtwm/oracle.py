"""Slow reference implementations for tests and worked examples.

Everything here follows the definitions literally (recursive interval
splitting, linear scans) and shares no code with the fast paths apart
from :class:`wtwm.alphabet.EffectiveText`.
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class Node:
    lo: int
    hi: int
    bits: list = field(default_factory=list)
    positions: list = field(default_factory=list)


def decompose(e):
    """Per-level list of wavelet tree nodes over the padded alphabet.

    ``result[l][v]`` is node ``v`` on level ``l``; its ``positions`` are the
    text positions routed through it, in text order.
    """
    codes = e.codes.tolist()
    levels = [[] for _ in range(e.height)]

    def split(level, lo, hi, positions):
        if level == e.height:
            return
        mid = (lo + hi) // 2
        node = Node(lo, hi, positions=list(positions))
        node.bits = [0 if codes[p] <= mid else 1 for p in positions]
        levels[level].append(node)
        split(level + 1, lo, mid, [p for p in positions if codes[p] <= mid])
        split(level + 1, mid + 1, hi, [p for p in positions if codes[p] > mid])

    split(0, 0, e.sigma_padded - 1, range(e.n))
    # depth-first recursion appends left to right within each level
    return levels


def _reversed_order(count):
    width = count.bit_length() - 1
    return sorted(range(count), key=lambda v: format(v, f"0{width}b")[::-1] if width else "")


def naive_wt(e):
    return [[b for node in nodes for b in node.bits] for nodes in decompose(e)]


def naive_wm(e):
    levels = []
    for nodes in decompose(e):
        order = _reversed_order(len(nodes))
        levels.append([b for v in order for b in nodes[v].bits])
    return levels, [lvl.count(0) for lvl in levels]


def naive_position_maps(e):
    """``maps[l][i]`` is the matrix position of tree position ``i`` on level ``l``."""
    maps = []
    for nodes in decompose(e):
        order = _reversed_order(len(nodes))
        tree_start, start = {}, 0
        for v, node in enumerate(nodes):
            tree_start[v] = start
            start += len(node.bits)
        matrix_start, start = {}, 0
        for v in order:
            matrix_start[v] = start
            start += len(nodes[v].bits)
        level_map = [None] * e.n
        for v, node in enumerate(nodes):
            for off in range(len(node.bits)):
                level_map[tree_start[v] + off] = matrix_start[v] + off
        maps.append(level_map)
    return maps


def naive_position_map(e, level, i):
    return naive_position_maps(e)[level][i]


def tree_symbols(e):
    """``syms[l][i]``: code whose bit sits at tree position ``(l, i)``."""
    codes = e.codes.tolist()
    return [[codes[p] for node in nodes for p in node.positions] for nodes in decompose(e)]


def scan_rank(codes, c, i):
    return sum(1 for x in codes[: i + 1] if x == c)


def scan_select(codes, c, k):
    seen = 0
    for pos, x in enumerate(codes):
        if x == c:
            seen += 1
            if seen == k:
                return pos
    raise ValueError(f"code {c} occurs fewer than {k} times")


def scan_rank1(bits, i):
    return sum(bits[: i + 1])


def scan_select_bit(bits, bit, k):
    return scan_select(bits, bit, k)


def random_text(rng, n, sigma):
    """``n`` random bytes using exactly ``min(sigma, n)`` distinct values."""
    sigma = min(sigma, n, 256)
    alphabet = rng.choice(256, size=sigma, replace=False).astype(np.uint8)
    picks = np.concatenate([np.arange(sigma), rng.integers(0, sigma, size=n - sigma)])
    rng.shuffle(picks)
    return alphabet[picks].tobytes()


def adversarial_texts():
    """Hand-picked edge cases: unary, sorted, power-of-two and 2**k - 1 alphabets."""
    texts = [b"a", b"aaaa", b"ab", b"ba", b"abc", bytes(range(256))]
    for k in range(1, 7):
        texts.append(bytes(range(65, 65 + 2 ** k)) * 3)
        texts.append(bytes(range(65, 65 + 2 ** k - 1)) * 2)
        texts.append(bytes(reversed(range(40, 40 + 2 ** k + 1))))
    texts.append(b"z" * 1000)
    texts.append(bytes(i // 4 for i in range(1000)))
    texts.append(b"wavelettree")
    return texts


def corpus(seed, count, max_n, max_sigma):
    """``count`` random texts with ``n`` in ``[1, max_n]`` and ``sigma`` in ``[1, max_sigma]``."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        sigma = int(rng.integers(1, max_sigma + 1))
        yield random_text(rng, n, sigma)

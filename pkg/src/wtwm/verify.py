"""Oracle-equivalence checks run by ``wtwm verify`` and the test suite."""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import index, oracle
from .alphabet import build_c_array, effective_transform
from .translate import Locator, build_wm_via_wt, build_wt_via_wm
from .wavelet_matrix import build_wm
from .wavelet_tree import build_wt

# above this many (symbol, position) pairs, rank is checked on a sample
RANK_BUDGET = 200_000


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _first_level_divergence(got, expected):
    for level, (a, b) in enumerate(zip(got, expected)):
        a = list(a)
        b = list(b)
        if a != b:
            if len(a) != len(b):
                return f"level {level}: length {len(a)} != {len(b)}"
            pos = next(k for k, (x, y) in enumerate(zip(a, b)) if x != y)
            return f"level {level}, position {pos}: got {a[pos]}, expected {b[pos]}"
    if len(got) != len(expected):
        return f"height {len(got)} != {len(expected)}"
    return ""


def _bits(structure):
    return [bv.bits.to_bits().tolist() for bv in structure.levels]


def _compare_levels(name, got, expected, z_got=None, z_expected=None):
    detail = _first_level_divergence(got, expected)
    if not detail and z_got != z_expected:
        detail = f"z values {z_got} != {z_expected}"
    return CheckResult(name, not detail, detail)


def check_text(text, rng_seed=0):
    """Run every equivalence check on ``text``; returns a list of :class:`CheckResult`."""
    e = effective_transform(text)
    c = build_c_array(e)
    codes = e.codes.tolist()
    results = []

    wt = build_wt(e, c)
    wm = build_wm(e, c)
    naive_wm_levels, naive_z = oracle.naive_wm(e)
    results.append(_compare_levels("tree == naive tree", _bits(wt), oracle.naive_wt(e)))
    results.append(_compare_levels("matrix == naive matrix", _bits(wm), naive_wm_levels,
                                   wm.z, naive_z))

    wm_t = build_wm_via_wt(e, c)
    results.append(_compare_levels("matrix via tree constructor == direct matrix",
                                   _bits(wm_t), _bits(wm), wm_t.z, wm.z))
    wt_t = build_wt_via_wm(e, c)
    results.append(_compare_levels("tree via matrix constructor == direct tree",
                                   _bits(wt_t), _bits(wt)))
    same_files = index.dumps(wm_t) == index.dumps(wm) and index.dumps(wt_t) == index.dumps(wt)
    results.append(CheckResult("translated index files byte-identical", same_files,
                               "" if same_files else "serialized bytes differ"))

    loc = Locator(c, e.height, e.sigma_effective)
    maps = oracle.naive_position_maps(e)
    syms = oracle.tree_symbols(e)
    bij, agree, trip = "", "", ""
    for level in range(e.height):
        fwd = [loc.f(level, i) for i in range(e.n)]
        if not bij and sorted(fwd) != list(range(e.n)):
            hits = Counter(fwd)
            dup = next(i for i, j in enumerate(fwd) if hits[j] > 1 or not 0 <= j < e.n)
            bij = f"level {level}, position {dup}: f is not a permutation"
        if not agree and fwd != maps[level]:
            pos = next(i for i, (a, b) in enumerate(zip(fwd, maps[level])) if a != b)
            agree = f"level {level}, position {pos}: f={fwd[pos]}, oracle={maps[level][pos]}"
        if not trip:
            for i, j in enumerate(fwd):
                try:
                    back = loc.f_inv(level, j, syms[level][i])
                except ValueError as exc:
                    back = exc
                if back != i:
                    trip = f"level {level}, position {i}: f_inv(f(i)) = {back}"
                    break
    results.append(CheckResult("f is a permutation on every level", not bij, bij))
    results.append(CheckResult("f == naive position map", not agree, agree))
    results.append(CheckResult("f_inv(f(i), symbol) == i", not trip, trip))

    results.append(_check_queries(e, codes, wt, wm, rng_seed))
    return results


def _check_queries(e, codes, wt, wm, rng_seed):
    n = e.n
    for i in range(n):
        a, b = wt.access(i), wm.access(i)
        if a != codes[i] or b != codes[i]:
            return CheckResult("queries agree with scan oracle", False,
                               f"access({i}): tree={a}, matrix={b}, text={codes[i]}")
    arr = e.codes.astype(np.int64)
    sigma = e.sigma_effective
    if n * sigma <= RANK_BUDGET:
        pairs = [(c, i) for c in range(sigma) for i in range(n)]
    else:
        rng = np.random.default_rng(rng_seed)
        pairs = list(zip(rng.integers(0, sigma, RANK_BUDGET).tolist(),
                         rng.integers(0, n, RANK_BUDGET).tolist()))
    prefix = {c: np.cumsum(arr == c) for c in range(sigma)}
    for c, i in pairs:
        want = int(prefix[c][i])
        a, b = wt.rank(c, i), wm.rank(c, i)
        if a != want or b != want:
            return CheckResult("queries agree with scan oracle", False,
                               f"rank({c}, {i}): tree={a}, matrix={b}, expected {want}")
    seen = [0] * sigma
    for pos, c in enumerate(codes):
        seen[c] += 1
        a, b = wt.select(c, seen[c]), wm.select(c, seen[c])
        if a != pos or b != pos:
            return CheckResult("queries agree with scan oracle", False,
                               f"select({c}, {seen[c]}): tree={a}, matrix={b}, expected {pos}")
    return CheckResult("queries agree with scan oracle", True)

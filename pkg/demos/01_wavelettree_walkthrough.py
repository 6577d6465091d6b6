"""Build a wavelet tree and a wavelet matrix for "wavelettree" and look inside.

Run with ``python demos/01_wavelettree_walkthrough.py``.
"""

from wtwm import build_c_array, build_histogram, build_wm, build_wt, effective_transform
from wtwm.oracle import decompose

text = b"wavelettree"

# The histogram and effective alphabet: 7 distinct symbols become codes 0..6,
# padded with one symbol that never occurs so the tree is full (height 3).
hist = build_histogram(text)
print("histogram:", {chr(k): v for k, v in hist.counts.items()})
e = effective_transform(text)
print("codes:    ", e.codes.tolist())
print(f"sigma={e.sigma_effective} padded={e.sigma_padded} height={e.height}")

c = build_c_array(e)
print("C array:  ", list(c.entries))

# Both structures store one n-bit vector per level.  Levels 0 and 1 agree;
# on level 2 the matrix lists the tree's nodes in order 0, 2, 1, 3.
wt = build_wt(e, c)
wm = build_wm(e, c)
for level in range(e.height):
    print(f"level {level}: tree {wt.levels[level].bits}   matrix {wm.levels[level].bits}  z={wm.z[level]}")

print("\nlevel-2 tree nodes:")
for v, node in enumerate(decompose(e)[2]):
    symbols = bytes(text[p] for p in node.positions).decode()
    print(f"  node {v}: {symbols:6s} bits {''.join(map(str, node.bits))}")

# Queries answer in effective codes; map back through the decode table.
e_code = e.code_of("e")
print("\naccess(0) =", chr(wt.access_symbol(0)))
print("rank(e, 10) =", wt.rank(e_code, 10), "/", wm.rank(e_code, 10))
print("select(e, 2) =", wt.select(e_code, 2), "/", wm.select(e_code, 2))

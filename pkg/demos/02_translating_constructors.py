"""Turn a tree constructor into a matrix constructor and back.

The locator maps a bit's tree position to its matrix position (``f``) and
back (``f_inv``).  Wrapping a constructor's output sink with either map is
enough to make it build the other structure.
"""

from wtwm import build_locator, build_wm, build_wt, effective_transform
from wtwm.bitvec import LevelBuffers
from wtwm.translate import MatrixToTreeSink, MissingSymbolError, TreeToMatrixSink
from wtwm.wavelet_matrix import construct_wm, zero_counts
from wtwm.wavelet_tree import construct_wt

e = effective_transform(b"wavelettree")
loc = build_locator(e)

print("boundary bits B_C:", loc.b_c.bits)
for level in range(e.height):
    print(f"C' level {level}:", loc.c_prime_level(level))

# Locating bit 9 of tree level 2, then bit 9 of matrix level 2 (written for 'r').
print("\nf(2, 9):", loc.explain_f(2, 9))
print("f_inv(2, 9, r):", loc.explain_f_inv(2, 9, e.code_of("r")))

# Tree constructor, matrix layout.
sink = construct_wt(e, loc.c_array, TreeToMatrixSink(loc, LevelBuffers(e.height, e.n)))
levels = sink.finish()
wm = build_wm(e)
print("\ntree constructor through f gives the matrix:",
      levels == wm.levels and zero_counts(levels) == wm.z)

# Matrix constructor, tree layout.  The matrix constructor passes each bit's
# symbol along, which f_inv needs.
sink = MatrixToTreeSink(loc, LevelBuffers(e.height, e.n))
construct_wm(e, sink)
print("matrix constructor through f_inv gives the tree:", sink.finish() == build_wt(e).levels)

# A constructor that does not report symbols cannot be redirected this way.
try:
    construct_wt(e, loc.c_array, MatrixToTreeSink(loc, LevelBuffers(e.height, e.n)))
except MissingSymbolError as exc:
    print("symbol-free writes are refused:", exc)

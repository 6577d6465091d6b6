"""Wavelet trees, wavelet matrices and constant-time translation between their constructions."""

from .alphabet import (
    CArray,
    EffectiveText,
    Histogram,
    bitrev,
    build_c_array,
    build_histogram,
    effective_transform,
)
from .bitvec import BitBuffer, RankSelectBitVector, build_rs
from .translate import (
    ConstructorMisuse,
    Locator,
    MissingSymbolError,
    SymbolMismatchError,
    build_locator,
    build_wm_via_wt,
    build_wt_via_wm,
)
from .wavelet_matrix import WaveletMatrix, build_wm
from .wavelet_tree import WaveletTree, build_wt, wt_node_size

__version__ = "0.1.0"

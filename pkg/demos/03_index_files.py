"""Save an index to disk, load it back, and query it.

Mirrors ``wtwm build`` / ``wtwm query`` without the shell.
"""

import tempfile
from pathlib import Path

import numpy as np

from wtwm import build_wm, build_wt, effective_transform, index

rng = np.random.default_rng(0)
text = rng.choice(list(b"ACGT"), size=5000).astype(np.uint8).tobytes()
e = effective_transform(text)

with tempfile.TemporaryDirectory() as tmp:
    for name, structure in (("tree", build_wt(e)), ("matrix", build_wm(e))):
        path = Path(tmp) / f"dna.{name}"
        index.save(structure, path)
        loaded = index.load(path)
        print(f"{name}: {path.stat().st_size} bytes, round trip ok: {loaded == structure}")

        g = e.code_of("G")
        print(f"  G occurs {loaded.rank(g, e.n - 1)} times; "
              f"100th G at {loaded.select(g, 100)}; "
              f"text[1234] = {chr(loaded.access_symbol(1234))}")

print("direct count of G:", text.count(b"G"))

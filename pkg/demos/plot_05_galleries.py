"""
SVG galleries
=============

Each panel shows a walk (blue) and its image (red). Documents are
byte-identical across runs and the walks can be read back out.
"""

import pathlib

from pathmorph.render import RenderSpec, extract_pairs, render_gallery

out = pathlib.Path("gallery_out")
out.mkdir(exist_ok=True)

for n, name in ((3, "phi1"), (4, "phi2")):
    doc = render_gallery(n, name, RenderSpec(columns=5))
    (out / f"{name}_n{n}.svg").write_text(doc)
    print(name, n, "panels:", len(extract_pairs(doc)))

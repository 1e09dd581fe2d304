"""Write SVG figures of the patterns and solutions for a few sizes."""

import sys
from pathlib import Path

from pulsar import build_pattern, construct_direct
from pulsar.render import svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(exist_ok=True)
for n in (2, 5, 6, 7, 9):
    pattern = build_pattern(n)
    (out / f"pattern_{n}.svg").write_text(svg(pattern))
    (out / f"solution_{n}.svg").write_text(svg(pattern, construct_direct(n)))
print(f"figures in {out}/")
